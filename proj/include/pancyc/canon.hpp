#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

namespace detail {

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), rows_(n_, 0) {
        for (auto [u, v] : g.edges()) {
            rows_[u] |= std::uint64_t{1} << v;
            rows_[v] |= std::uint64_t{1} << u;
        }
    }

    std::string run() {
        std::vector<int> color(n_, 0);
        search(color);
        return best_;
    }

private:
    // Equitable refinement: a vertex's key is its color followed by the
    // sorted colors of its neighbors; keys are re-ranked until stable. New
    // colors refine old ones, so cell order is preserved.
    void refine(std::vector<int>& color) const {
        std::vector<std::vector<int>> key(n_);
        std::vector<int> order(n_), next(n_);
        for (;;) {
            for (int v = 0; v < n_; ++v) {
                auto& k = key[v];
                k.clear();
                k.push_back(color[v]);
                std::uint64_t m = rows_[v];
                while (m) {
                    k.push_back(color[std::countr_zero(m)]);
                    m &= m - 1;
                }
                std::sort(k.begin() + 1, k.end());
            }
            for (int v = 0; v < n_; ++v) order[v] = v;
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return key[a] < key[b]; });
            int rank = 0;
            next[order[0]] = 0;
            for (int i = 1; i < n_; ++i) {
                if (key[order[i]] != key[order[i - 1]]) ++rank;
                next[order[i]] = rank;
            }
            if (next == color) return;
            color.swap(next);
        }
    }

    void leaf(const std::vector<int>& color) {
        std::vector<int> orig(n_);
        for (int v = 0; v < n_; ++v) orig[color[v]] = v;
        std::string cand;
        cand.reserve(1 + (static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 5) / 6);
        cand += static_cast<char>(63 + n_);
        int acc = 0, nbits = 0;
        for (int col = 1; col < n_; ++col) {
            for (int row = 0; row < col; ++row) {
                acc = (acc << 1) | static_cast<int>((rows_[orig[row]] >> orig[col]) & 1);
                if (++nbits == 6) {
                    cand += static_cast<char>(63 + acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits > 0) cand += static_cast<char>(63 + (acc << (6 - nbits)));
        if (best_.empty() || cand < best_) best_ = std::move(cand);
    }

    // A stable partition is homogeneous when adjacency between any two cells
    // (and inside each cell) is all-or-nothing. Every within-cell ordering
    // then yields the same matrix, so one leaf stands for them all; this is
    // what keeps complete, empty and multipartite graphs from exploding.
    bool homogeneous(const std::vector<int>& color, int ncolors) const {
        std::vector<int> size(ncolors, 0), rep(ncolors, -1);
        for (int v = 0; v < n_; ++v) {
            ++size[color[v]];
            if (rep[color[v]] < 0) rep[color[v]] = v;
        }
        std::vector<int> hits(ncolors);
        for (int c = 0; c < ncolors; ++c) {
            if (size[c] < 2) continue;
            std::fill(hits.begin(), hits.end(), 0);
            std::uint64_t m = rows_[rep[c]];
            while (m) {
                ++hits[color[std::countr_zero(m)]];
                m &= m - 1;
            }
            for (int d = 0; d < ncolors; ++d) {
                const int all = size[d] - (c == d ? 1 : 0);
                if (hits[d] != 0 && hits[d] != all) return false;
            }
        }
        return true;
    }

    void search(std::vector<int> color) {
        refine(color);
        int ncolors = 0;
        for (int v = 0; v < n_; ++v) ncolors = std::max(ncolors, color[v] + 1);
        if (ncolors == n_) {
            leaf(color);
            return;
        }
        if (homogeneous(color, ncolors)) {
            // order within cells is immaterial; number by (color, vertex)
            std::vector<int> flat(n_);
            std::vector<int> order(n_);
            for (int v = 0; v < n_; ++v) order[v] = v;
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return color[a] < color[b]; });
            for (int i = 0; i < n_; ++i) flat[order[i]] = i;
            leaf(flat);
            return;
        }
        // First non-singleton cell; individualize each member in turn.
        std::vector<int> count(ncolors, 0);
        for (int v = 0; v < n_; ++v) ++count[color[v]];
        int cell = 0;
        while (count[cell] < 2) ++cell;
        for (int v = 0; v < n_; ++v) {
            if (color[v] != cell) continue;
            std::vector<int> child(n_);
            for (int u = 0; u < n_; ++u) child[u] = color[u] * 2 + (u == v ? 0 : 1);
            search(std::move(child));
        }
    }

    int n_;
    std::vector<std::uint64_t> rows_;
    std::string best_;
};

}  // namespace detail

// Canonical form: the graph6 string of the lexicographically smallest
// relabeling reachable through refinement plus backtracking. Equal strings
// iff the graphs are isomorphic.
inline std::string canonical_form(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("canonical_form supports order <= 64");
    return detail::Canonizer(g).run();
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

// One representative per isomorphism class, ordered by canonical form.
inline std::vector<Graph> dedup(const std::vector<Graph>& graphs) {
    std::map<std::string, const Graph*> classes;
    for (const Graph& g : graphs) classes.emplace(canonical_form(g), &g);
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (const auto& [form, g] : classes) {
        (void)form;
        out.push_back(*g);
    }
    return out;
}

}  // namespace pancyc
