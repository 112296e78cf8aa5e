#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pancyc/schema.hpp"
#include "pancyc/spectrum.hpp"

namespace pancyc {

struct SearchTarget {
    Family family = Family::pancyclic;
    int r = 1;
};

// One parity bit per arc variable; bit set means the arc length is odd.
using ParityClass = std::uint32_t;

// The order a solution must have: the schema's cycle count equals r times the
// number of required lengths, which pins v. Returns nothing when r does not
// divide the cycle count.
inline std::optional<int> forced_order(int n_cyc, Family family, int r) {
    if (n_cyc < 1 || r < 1 || n_cyc % r != 0) return std::nullopt;
    const int lengths = n_cyc / r;
    switch (family) {
        case Family::pancyclic: return lengths + 2;
        case Family::bipancyclic: return 2 * lengths + 2;
        case Family::oddly_bipancyclic: return 2 * lengths + 3;
    }
    return std::nullopt;
}

// Parity classes under which the cycle parities split into exactly the number
// of odd and even lengths the target demands, and the boundary sum has the
// parity of the boundary length.
inline std::vector<ParityClass> feasible_parity_classes(const std::vector<SymbolicCycle>& cycles,
                                                        SearchTarget target, int v, int arc_count) {
    const int boundary = target.family == Family::oddly_bipancyclic ? v - 1 : v;
    long long odd_needed = 0, even_needed = 0;
    for (auto [len, count] : target_spectrum(target.family, target.r, v))
        (len % 2 ? odd_needed : even_needed) += count;

    std::vector<ParityClass> out;
    for (ParityClass p = 0; p < (1u << arc_count); ++p) {
        if ((std::popcount(p) & 1) != (boundary & 1)) continue;
        long long odd = 0;
        for (const SymbolicCycle& c : cycles) odd += (std::popcount(c.arcs & p) + c.unit_edges) & 1;
        if (odd == odd_needed && static_cast<long long>(cycles.size()) - odd == even_needed)
            out.push_back(p);
    }
    return out;
}

namespace detail {

// Arcs are assigned in an order that pins cycle lengths as early as possible.
// A cycle's length is fixed once its mask or its complement is exhausted, so
// greedily pick the arc closing the most cycles from either side, then the
// most-touched one.
inline std::vector<int> plan_arc_order(const std::vector<SymbolicCycle>& cycles, int arcs) {
    const std::uint32_t full = arcs == 32 ? ~0u : ((1u << arcs) - 1);
    std::vector<int> order;
    std::uint32_t chosen = 0;
    for (int step = 0; step < arcs; ++step) {
        int best = -1;
        std::pair<int, int> best_score{-1, -1};
        for (int j = 0; j < arcs; ++j) {
            if (chosen >> j & 1) continue;
            const std::uint32_t with = chosen | (1u << j);
            int closed = 0, touched = 0;
            for (const SymbolicCycle& c : cycles) {
                const std::uint32_t out = full & ~c.arcs;
                if ((c.arcs & ~with) == 0 && (c.arcs & ~chosen) != 0) ++closed;
                if ((out & ~with) == 0 && (out & ~chosen) != 0) ++closed;
                if (c.arcs >> j & 1) ++touched;
            }
            if (std::pair{closed, touched} > best_score) {
                best_score = {closed, touched};
                best = j;
            }
        }
        order.push_back(best);
        chosen |= 1u << best;
    }
    return order;
}

// Depth-first enumeration of arc values with an exact total. Each symbolic
// cycle is tracked from both sides:
//   lb = units + assigned mask arcs + minimums of the rest (a lower bound,
//        exact once every mask arc is assigned), and
//   ub = total + units - (assigned complement arcs + minimums of the rest),
//        exact once every complement arc is assigned, since the mask sum is
//        then pinned by the fixed total.
// A cycle's length is committed at whichever side closes first; the boundary
// cycle has an empty complement and is committed at the root. Prunes:
//   - lb above the largest usable length, or ub below the smallest unfilled
//     one (both monotone in the current value, so the value loop stops),
//   - a committed length whose capacity is exhausted,
//   - interval-Hall prefix/suffix checks: unfilled slots up to L need enough
//     open cycles with lb <= L, and slots from L up need enough with ub >= L.
// Every leaf reached is a solution: all cycles land on required lengths
// within capacity, and the totals match, so each length holds exactly r.
class AssignmentSearch {
public:
    AssignmentSearch(const std::vector<SymbolicCycle>& cycles, int arcs, int total, int lmax,
                     std::vector<int> cap, std::vector<int> min_by_arc, int step)
        : cycles_(cycles),
          arcs_(arcs),
          total_(total),
          lmax_(lmax),
          step_(step),
          cap_(std::move(cap)),
          cnt_(lmax + 1, 0),
          low_(lmax + 2, 0),
          high_(lmax + 2, 0),
          min_by_arc_(std::move(min_by_arc)) {}

    std::vector<Assignment> run() {
        const int ncyc = static_cast<int>(cycles_.size());
        order_ = plan_arc_order(cycles_, arcs_);
        mins_.resize(arcs_);
        for (int lv = 0; lv < arcs_; ++lv) mins_[lv] = min_by_arc_[order_[lv]];
        tail_min_.assign(arcs_ + 1, 0);
        for (int lv = arcs_ - 1; lv >= 0; --lv) tail_min_[lv] = tail_min_[lv + 1] + mins_[lv];
        in_.assign(arcs_, {});
        out_arcs_.assign(arcs_, {});
        for (int lv = 0; lv < arcs_; ++lv)
            for (int ci = 0; ci < ncyc; ++ci)
                (cycles_[ci].arcs >> order_[lv] & 1 ? in_[lv] : out_arcs_[lv]).push_back(ci);

        if (tail_min_[0] > total_) return {};
        if ((total_ - tail_min_[0]) % step_ != 0) return {};

        lb_.resize(ncyc);
        ub_.resize(ncyc);
        rem_in_.resize(ncyc);
        rem_out_.resize(ncyc);
        open_.assign(ncyc, 1);
        for (int ci = 0; ci < ncyc; ++ci) {
            int mask_min = 0;
            std::uint32_t m = cycles_[ci].arcs;
            while (m) {
                mask_min += min_by_arc_[std::countr_zero(m)];
                m &= m - 1;
            }
            lb_[ci] = cycles_[ci].unit_edges + mask_min;
            ub_[ci] = total_ + cycles_[ci].unit_edges - (tail_min_[0] - mask_min);
            rem_in_[ci] = std::popcount(cycles_[ci].arcs);
            rem_out_[ci] = arcs_ - rem_in_[ci];
        }
        // cycles with an empty complement (the boundary) are fixed up front;
        // a cycle dead at the root stays dead, since lb only grows and ub
        // only shrinks along any path
        for (int ci = 0; ci < ncyc; ++ci) {
            if (lb_[ci] > lmax_ || ub_[ci] < 3 || lb_[ci] > ub_[ci]) return {};
            if (rem_out_[ci] > 0) continue;
            const int len = ub_[ci];
            if (len > lmax_ || cnt_[len] >= cap_[len]) return {};
            ++cnt_[len];
            open_[ci] = 0;
        }
        int lstar = 3;
        while (lstar <= lmax_ && cnt_[lstar] >= cap_[lstar]) ++lstar;
        value_.assign(arcs_, 0);
        commit_.clear();
        if (lstar > lmax_ || interval_feasible(lstar)) descend(0, total_, lstar);
        return std::move(result_);
    }

private:
    // Interval-Hall feasibility of open cycles vs. unfilled slots, both
    // directions: slots up to L need enough cycles with lb <= L, and slots
    // from L up need enough cycles with ub >= L. Counting only; necessary
    // but cheap, O(cycles + lengths) with no per-node allocation.
    bool interval_feasible(int lstar) {
        std::fill(low_.begin(), low_.end(), 0);
        std::fill(high_.begin(), high_.end(), 0);
        for (std::size_t ci = 0; ci < cycles_.size(); ++ci) {
            if (!open_[ci]) continue;
            const int lo = std::max(lb_[ci], lstar);
            const int hi = std::min(ub_[ci], lmax_);
            if (hi < lo) return false;  // cycle can no longer land anywhere
            ++low_[lo];
            ++high_[hi];
        }
        long long have = 0, need = 0;
        for (int len = lstar; len <= lmax_; ++len) {
            have += low_[len];
            need += cap_[len] - cnt_[len];
            if (need > have) return false;
        }
        have = need = 0;
        for (int len = lmax_; len >= lstar; --len) {
            have += high_[len];
            need += cap_[len] - cnt_[len];
            if (need > have) return false;
        }
        return true;
    }

    void descend(int level, int budget, int lstar) {
        if (level == arcs_) {
            Assignment x(arcs_);
            for (int lv = 0; lv < arcs_; ++lv) x[order_[lv]] = value_[lv];
            result_.push_back(std::move(x));
            return;
        }
        const int lo = mins_[level];
        const int hi = budget - tail_min_[level + 1];
        if (hi < lo) return;

        // Most the later arcs can absorb: each is capped by the headroom of
        // the cycles it lies on. Budget beyond that must be taken here, which
        // lifts the value floor (in parity-compatible steps).
        long long tail_max = 0;
        for (int l = level + 1; l < arcs_; ++l) {
            int headroom = budget;  // never a binding cap
            for (int ci : in_[l]) {
                const int allowed = open_[ci] ? std::min(lmax_, ub_[ci]) : ub_[ci];
                headroom = std::min(headroom, allowed - lb_[ci]);
            }
            if (headroom < 0) return;  // some later arc cannot even take its minimum
            tail_max += mins_[l] + headroom;
        }
        int val = lo;
        if (budget - tail_max > lo) {
            const long long lift = budget - tail_max - lo;
            val = lo + static_cast<int>((lift + step_ - 1) / step_) * step_;
        }
        if (val > hi) return;

        const auto& ins = in_[level];
        const auto& outs = out_arcs_[level];
        for (int ci : ins) --rem_in_[ci];
        for (int ci : outs) --rem_out_[ci];
        if (val != lo) {
            for (int ci : ins) lb_[ci] += val - lo;
            for (int ci : outs) ub_[ci] -= val - lo;
        }

        // The set of cycles whose length gets pinned here is fixed for the
        // whole level; only the landing length moves with val.
        int drv_in = -1, drv_out = -1;
        for (int ci : ins)
            if (open_[ci] && rem_in_[ci] == 0) {
                drv_in = ci;
                break;
            }
        if (drv_in < 0)
            for (int ci : outs)
                if (open_[ci] && rem_out_[ci] == 0) {
                    drv_out = ci;
                    break;
                }

        if (drv_in < 0 && drv_out < 0) {
            // Nothing completes: every failure mode is monotone in val, so
            // fold the bound checks into one ceiling and stop at the first
            // infeasible value.
            long long vmax = hi;
            for (int ci : ins) {
                const int cap_len = open_[ci] ? std::min(ub_[ci], lmax_) : ub_[ci];
                vmax = std::min(vmax, static_cast<long long>(val) + cap_len - lb_[ci]);
            }
            for (int ci : outs) {
                const int floor_len = open_[ci] ? std::max(lb_[ci], lstar) : lb_[ci];
                vmax = std::min(vmax, static_cast<long long>(val) + ub_[ci] - floor_len);
            }
            while (val <= vmax) {
                if (!interval_feasible(lstar)) break;
                value_[level] = val;
                descend(level + 1, budget - val, lstar);
                if (val + step_ > vmax) break;
                val += step_;
                for (int ci : ins) lb_[ci] += step_;
                for (int ci : outs) ub_[ci] -= step_;
            }
        } else {
            for (;;) {
                bool ok = true, monotone_dead = false;
                const std::size_t mark = commit_.size();
                for (int ci : ins) {
                    // for closed cycles ub is the committed length, so lb > ub
                    // flags a contradiction with the pinned value
                    if (lb_[ci] > ub_[ci] || lb_[ci] > lmax_) {
                        ok = false;
                        monotone_dead = true;
                        break;
                    }
                    if (open_[ci] && rem_in_[ci] == 0) {
                        const int len = lb_[ci];
                        if (cnt_[len] >= cap_[len]) {
                            ok = false;
                            break;
                        }
                        ++cnt_[len];
                        open_[ci] = 0;
                        commit_.push_back(ci);
                    }
                }
                if (ok) {
                    for (int ci : outs) {
                        if (ub_[ci] < lb_[ci] || (open_[ci] && ub_[ci] < lstar)) {
                            ok = false;
                            monotone_dead = true;
                            break;
                        }
                        if (open_[ci] && rem_out_[ci] == 0) {
                            const int len = ub_[ci];
                            // len > lmax is not monotone-dead: it shrinks as val grows
                            if (len > lmax_ || cnt_[len] >= cap_[len]) {
                                ok = false;
                                break;
                            }
                            ++cnt_[len];
                            open_[ci] = 0;
                            commit_.push_back(ci);
                        }
                    }
                }
                if (ok) {
                    int next_lstar = lstar;
                    while (next_lstar <= lmax_ && cnt_[next_lstar] >= cap_[next_lstar])
                        ++next_lstar;
                    if (next_lstar > lmax_ || interval_feasible(next_lstar)) {
                        value_[level] = val;
                        descend(level + 1, budget - val, next_lstar);
                    }
                }
                while (commit_.size() > mark) {
                    const int ci = commit_.back();
                    commit_.pop_back();
                    const int len = rem_in_[ci] == 0 ? lb_[ci] : ub_[ci];
                    --cnt_[len];
                    open_[ci] = 1;
                }
                if (monotone_dead) break;
                // jump to the value putting the driving cycle on its next
                // free slot rather than scanning every value
                int delta;
                if (drv_in >= 0) {
                    int slot = lb_[drv_in] + step_;
                    while (slot <= lmax_ && cnt_[slot] >= cap_[slot]) slot += step_;
                    if (slot > lmax_) break;
                    delta = slot - lb_[drv_in];
                } else {
                    int slot = ub_[drv_out] - step_;
                    while (slot >= lstar && cnt_[slot] >= cap_[slot]) slot -= step_;
                    if (slot < lstar) break;
                    delta = ub_[drv_out] - slot;
                }
                if (val + delta > hi) break;
                val += delta;
                for (int ci : ins) lb_[ci] += delta;
                for (int ci : outs) ub_[ci] -= delta;
            }
        }

        for (int ci : ins) {
            lb_[ci] -= val - lo;
            ++rem_in_[ci];
        }
        for (int ci : outs) {
            ub_[ci] += val - lo;
            ++rem_out_[ci];
        }
    }

    const std::vector<SymbolicCycle>& cycles_;
    int arcs_, total_, lmax_, step_;
    std::vector<int> cap_, cnt_, low_, high_, min_by_arc_;
    std::vector<int> order_, mins_, tail_min_;
    std::vector<std::vector<int>> in_, out_arcs_;
    std::vector<int> lb_, ub_, rem_in_, rem_out_, value_;
    std::vector<char> open_;
    std::vector<int> commit_;
    std::vector<Assignment> result_;
};

// Plain enumeration of all compositions respecting arc minimums, with the
// full spectrum evaluated only at the leaves. Validation baseline for the
// pruned search.
inline std::vector<Assignment> enumerate_unpruned(const std::vector<SymbolicCycle>& cycles, int arcs,
                                                  int total, int lmax, const std::vector<int>& cap,
                                                  const std::vector<int>& mins) {
    std::vector<Assignment> out;
    Assignment x(arcs);
    std::vector<int> tail_min(arcs + 1, 0);
    for (int i = arcs - 1; i >= 0; --i) tail_min[i] = tail_min[i + 1] + mins[i];

    auto leaf_ok = [&]() {
        std::vector<int> cnt(lmax + 1, 0);
        for (const SymbolicCycle& c : cycles) {
            const long long len = c.length(x);
            if (len > lmax) return false;
            ++cnt[static_cast<int>(len)];
        }
        return cnt == cap;
    };
    auto rec = [&](auto&& self, int i, int budget) -> void {
        if (i == arcs - 1) {
            if (budget < mins[i]) return;
            x[i] = budget;
            if (leaf_ok()) out.push_back(x);
            return;
        }
        for (int val = mins[i]; val <= budget - tail_min[i + 1]; ++val) {
            x[i] = val;
            self(self, i + 1, budget - val);
        }
    };
    if (tail_min[0] <= total) rec(rec, 0, total);
    return out;
}

}  // namespace detail

enum class SolveMode {
    full,       // parity classes + incremental pruning
    no_parity,  // incremental pruning over all parities
    reference   // exhaustive enumeration, leaf check only
};

struct Solution {
    Assignment assignment;
    Graph graph;
};

// Assignments for one schema and target within one parity class (or across
// all parities when pclass is empty), sorted lexicographically.
inline std::vector<Assignment> solve_assignments(const Schema& s,
                                                 const std::vector<SymbolicCycle>& cycles,
                                                 SearchTarget target,
                                                 std::optional<ParityClass> pclass,
                                                 bool count_prune = true) {
    const auto v_opt = forced_order(static_cast<int>(cycles.size()), target.family, target.r);
    if (!v_opt) return {};
    const int v = *v_opt;
    const bool oddly = target.family == Family::oddly_bipancyclic;
    const int total = oddly ? v - 1 : v;
    const int lmax = oddly ? v - 1 : v;
    const int arcs = s.arc_count();

    std::vector<int> cap(lmax + 1, 0);
    for (auto [len, count] : target_spectrum(target.family, target.r, v))
        cap[len] = static_cast<int>(count);

    std::vector<int> mins = arc_minimums(s);
    if (pclass) {
        for (int j = 0; j < arcs; ++j) {
            const int want_odd = (*pclass >> j) & 1;
            if ((mins[j] & 1) != want_odd) ++mins[j];
        }
    }
    std::vector<Assignment> out;
    if (!count_prune) {
        out = detail::enumerate_unpruned(cycles, arcs, total, lmax, cap, mins);
    } else {
        detail::AssignmentSearch search(cycles, arcs, total, lmax, cap, mins, pclass ? 2 : 1);
        out = search.run();
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Complete, sound solution set for one schema: every assignment whose
// instantiation carries exactly the target spectrum.
inline std::vector<Solution> solve_schema(const Schema& s, SearchTarget target,
                                          SolveMode mode = SolveMode::full) {
    const auto cycles = symbolic_cycles(s);
    std::vector<Assignment> xs;
    if (mode == SolveMode::full) {
        const auto v_opt = forced_order(static_cast<int>(cycles.size()), target.family, target.r);
        if (!v_opt) return {};
        for (ParityClass p : feasible_parity_classes(cycles, target, *v_opt, s.arc_count())) {
            auto part = solve_assignments(s, cycles, target, p, true);
            xs.insert(xs.end(), part.begin(), part.end());
        }
        std::sort(xs.begin(), xs.end());
    } else {
        xs = solve_assignments(s, cycles, target, std::nullopt, mode == SolveMode::no_parity);
    }
    std::vector<Solution> out;
    out.reserve(xs.size());
    for (Assignment& x : xs) {
        Graph g = instantiate(s, x);
        out.push_back(Solution{std::move(x), std::move(g)});
    }
    return out;
}

}  // namespace pancyc
