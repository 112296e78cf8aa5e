// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Sweeps default to the full supported excess range (m <= 5);
// --max-chords gates that for constrained runs, skipping what it cannot
// check. --jobs sets worker threads for the sweeps.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pancyc/canon.hpp"
#include "pancyc/catalog.hpp"
#include "pancyc/io.hpp"
#include "pancyc/schema_gen.hpp"
#include "pancyc/solver.hpp"
#include "pancyc/spectrum.hpp"

using namespace pancyc;

namespace {

int g_failures = 0;
int g_skips = 0;

void report(int criterion, const char* label, bool ok) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, label);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void skip(int criterion, const char* label) {
    std::printf("SKIP criterion %2d: %s\n", criterion, label);
    std::fflush(stdout);
    ++g_skips;
}

std::map<int, int> counts_for(const std::vector<CatalogEntry>& cat, int r) {
    std::map<int, int> out;
    for (const auto& e : cat)
        if (e.r == r) ++out[e.order];
    return out;
}

int max_r(const std::vector<CatalogEntry>& cat) {
    int r = 0;
    for (const auto& e : cat) r = std::max(r, e.r);
    return r;
}

// every entry must decode, satisfy its own target, and carry the right
// edge count for its family
bool closure_ok(const std::vector<CatalogEntry>& cat) {
    for (const auto& e : cat) {
        const Graph g = decode_graph6(e.graph6);
        const Graph canon = decode_graph6(e.canonical);
        const long long boundary =
            e.family == Family::oddly_bipancyclic ? e.order - 1 : e.order;
        if (g.order() != e.order) return false;
        if (g.edge_count() != boundary + e.m) return false;
        if (!check_target(g, e.family, e.r)) return false;
        if (!check_target(canon, e.family, e.r)) return false;
        if (canonical_form(g) != e.canonical) return false;
        if (e.spectrum != target_spectrum(e.family, e.r, e.order)) return false;
    }
    return true;
}

std::string golden_path(const char* name) {
    return std::string(PANCYC_GOLDEN_DIR) + "/" + name;
}

bool matches_golden(const std::vector<CatalogEntry>& cat, const char* name) {
    std::ifstream in(golden_path(name), std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "golden file %s missing\n", name);
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str() == to_jsonl(cat);
}

// packs the payload bits of a canonical graph6 string into one word
std::uint32_t form_bits(const std::string& g6) {
    std::uint32_t bits = 0;
    for (std::size_t i = 1; i < g6.size(); ++i)
        bits = (bits << 6) | static_cast<std::uint32_t>(g6[i] - 63);
    return bits;
}

}  // namespace

int main(int argc, char** argv) {
    int max_chords = 5;
    int jobs = 1;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--max-chords") && i + 1 < argc) max_chords = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::atoi(argv[++i]);
    }
    const bool full = max_chords >= 5;

    auto sweep = [&](Family family) {
        SearchOptions opt;
        opt.family = family;
        opt.m_max = max_chords;
        opt.jobs = jobs;
        return run_search(opt);
    };
    const auto pan = sweep(Family::pancyclic);
    const auto bip = sweep(Family::bipancyclic);
    const auto odd = sweep(Family::oddly_bipancyclic);

    // 1: unique pancyclic classification, empty beyond three chords
    {
        const bool counts_ok =
            counts_for(pan, 1) == std::map<int, int>{{3, 1}, {5, 1}, {8, 2}, {14, 3}};
        bool no_high_m = true;
        for (const auto& e : pan)
            if (e.r == 1 && e.m > 3) no_high_m = false;
        SearchOptions g;
        g.family = Family::pancyclic;
        g.m_max = 3;
        g.jobs = jobs;
        const bool golden_ok = matches_golden(run_search(g), "pancyclic_m3.jsonl");
        report(1, "(1)-pancyclic: orders {3,5,8x2,14x3}, none with 4 or 5 chords, golden match",
               counts_ok && no_high_m && golden_ok && closure_ok(pan));
    }

    // 2: the (2)-pancyclic classification
    {
        const auto c = counts_for(pan, 2);
        const bool ok = c == std::map<int, int>{{8, 2}, {11, 4}, {13, 2}, {17, 6}, {19, 3}} &&
                        c.count(9) == 0 && c.count(10) == 0;
        if (full)
            report(2, "(2)-pancyclic: per-order counts {8:2,11:4,13:2,17:6,19:3}, none on 9 or 10",
                   ok);
        else
            skip(2, "(2)-pancyclic counts need the m=5 sweep");
    }

    // 3: no (r>=3)-pancyclic graph
    {
        if (full)
            report(3, "no (r>=3)-pancyclic graph with at most 5 chords", max_r(pan) <= 2);
        else
            skip(3, "(r>=3)-pancyclic emptiness needs the m=5 sweep");
    }

    // 4: unique bipancyclic classification
    {
        const auto c = counts_for(bip, 1);
        const bool counts_ok =
            c == std::map<int, int>{{4, 1}, {8, 1}, {14, 4}, {26, 6}, {44, 6}};
        bool others_small = true;
        for (const auto& [order, n] : c) {
            (void)n;
            if (order >= 32 && order != 44) others_small = false;
        }
        SearchOptions g;
        g.family = Family::bipancyclic;
        g.m_max = 3;
        g.jobs = jobs;
        const bool golden_ok = matches_golden(run_search(g), "bipancyclic_m3.jsonl");
        if (full)
            report(4, "(1)-bipancyclic: exactly 6 of order 44, all others below 32, golden match",
                   counts_ok && others_small && golden_ok && closure_ok(bip));
        else
            skip(4, "(1)-bipancyclic counts need the m=5 sweep");
    }

    // 5: the (2)-bipancyclic classification sits within four chords
    {
        bool no_m5 = true;
        for (const auto& e : bip)
            if (e.r == 2 && e.m == 5) no_m5 = false;
        const bool ok = counts_for(bip, 2) == std::map<int, int>{{14, 3}, {22, 10}} && no_m5;
        if (full)
            report(5, "(2)-bipancyclic: counts {14:3,22:10}, none with exactly 5 chords", ok);
        else
            skip(5, "(2)-bipancyclic counts need the m=5 sweep");
    }

    // 6: no (r>=3)-bipancyclic graph
    {
        if (full)
            report(6, "no (r>=3)-bipancyclic graph with at most 5 chords", max_r(bip) <= 2);
        else
            skip(6, "(r>=3)-bipancyclic emptiness needs the m=5 sweep");
    }

    // 7: the oddly classification for every multiplicity
    {
        const bool ok = counts_for(odd, 1) == std::map<int, int>{{15, 2}, {23, 22}, {41, 84}} &&
                        counts_for(odd, 2) ==
                            std::map<int, int>{{9, 2}, {15, 3}, {21, 8}, {25, 4}} &&
                        counts_for(odd, 3) == std::map<int, int>{{5, 1}, {17, 2}} &&
                        counts_for(odd, 4) == std::map<int, int>{{9, 2}, {13, 5}} &&
                        max_r(odd) <= 4 && closure_ok(odd);
        if (full) {
            report(7, "oddly sweeps: r=1..4 per-order counts as published, r>=5 empty", ok);
            if (!ok) {
                // every emitted graph re-passed the definitional check above;
                // print the sweep's own table so the difference is explicit
                std::map<std::pair<int, int>, int> got;
                for (const auto& e : odd) ++got[{e.r, e.order}];
                std::printf("  sweep found:");
                for (const auto& [key, n] : got)
                    std::printf(" r=%d v=%d:%d", key.first, key.second, n);
                std::printf("\n");
            }
        } else {
            skip(7, "oddly counts need the m=5 sweep");
        }
    }

    // 8: oracle equivalence and pruning soundness
    {
        std::mt19937 rng(424242);
        std::vector<Schema> pool;
        for (int m = 0; m <= 4; ++m)
            for (Schema& s : enumerate_schemas(Family::pancyclic, m)) pool.push_back(std::move(s));
        for (int m = 2; m <= 4; ++m)
            for (Schema& s : enumerate_schemas(Family::oddly_bipancyclic, m))
                pool.push_back(std::move(s));
        bool bijection_ok = true;
        for (int trial = 0; trial < 1000; ++trial) {
            const Schema& s = pool[rng() % pool.size()];
            Assignment x = arc_minimums(s);
            for (int& v : x) v += static_cast<int>(rng() % 4);
            std::map<long long, long long> symbolic, concrete;
            for (const SymbolicCycle& c : symbolic_cycles(s)) ++symbolic[c.length(x)];
            for (auto [len, cnt] : cycle_spectrum(instantiate(s, x))) concrete[len] = cnt;
            if (symbolic != concrete) bijection_ok = false;
        }

        bool prune_ok = true;
        for (Family fam : {Family::pancyclic, Family::bipancyclic, Family::oddly_bipancyclic}) {
            const int lo = fam == Family::oddly_bipancyclic ? 2 : 0;
            for (int m = lo; m <= 3; ++m) {
                for (const Schema& s : enumerate_schemas(fam, m)) {
                    const int n_cyc = static_cast<int>(symbolic_cycles(s).size());
                    for (int r = 1; r <= n_cyc; ++r) {
                        if (n_cyc % r != 0) continue;
                        auto key = [](const std::vector<Solution>& sols) {
                            std::set<Assignment> out;
                            for (const auto& sol : sols) out.insert(sol.assignment);
                            return out;
                        };
                        const auto ref = key(solve_schema(s, {fam, r}, SolveMode::reference));
                        if (key(solve_schema(s, {fam, r}, SolveMode::full)) != ref) prune_ok = false;
                        if (key(solve_schema(s, {fam, r}, SolveMode::no_parity)) != ref)
                            prune_ok = false;
                    }
                }
            }
        }
        report(8, "symbolic spectra match brute force (1000 pairs); pruned = unpruned (m<=3)",
               bijection_ok && prune_ok);
    }

    // 9: canonicalizer: invariance and exact classes on every graph up to 7 vertices
    {
        std::mt19937 rng(71);
        bool invariance_ok = true;
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 11);
            const Graph g =
                oracles::random_graph(rng, n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)));
            const Graph h = relabel(g, oracles::random_permutation(rng, n));
            if (canonical_form(g) != canonical_form(h)) invariance_ok = false;
        }

        // Exact agreement with brute-force classes on all graphs with <= 7
        // vertices: canonical forms are checked invariant under two
        // generators of the symmetric group (hence under all of it), so
        // form-buckets are unions of orbits; the bucket count then equals the
        // exact orbit count from Burnside's lemma, so buckets are exactly the
        // isomorphism classes.
        bool classes_ok = true;
        for (int n = 2; n <= 7 && classes_ok; ++n) {
            const int bits = n * (n - 1) / 2;
            std::vector<int> swapped(bits), rotated(bits);
            {
                std::vector<std::vector<int>> at(n, std::vector<int>(n, -1));
                int idx = 0;
                for (int col = 1; col < n; ++col)
                    for (int row = 0; row < col; ++row) at[row][col] = at[col][row] = idx++;
                auto build = [&](std::vector<int>& out, auto&& perm) {
                    for (int col = 1; col < n; ++col)
                        for (int row = 0; row < col; ++row)
                            out[at[row][col]] = at[perm(row)][perm(col)];
                };
                build(swapped, [&](int v) { return v < 2 ? 1 - v : v; });
                build(rotated, [&](int v) { return (v + 1) % n; });
            }
            std::vector<std::uint32_t> form(std::size_t{1} << bits);
            for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
                Graph g(n);
                int bit = 0;
                for (int col = 1; col < n; ++col)
                    for (int row = 0; row < col; ++row, ++bit)
                        if (mask >> bit & 1) g.add_edge(row, col);
                form[mask] = form_bits(canonical_form(g));
            }
            auto apply = [&](std::uint32_t mask, const std::vector<int>& map) {
                std::uint32_t out = 0;
                for (int b = 0; b < bits; ++b)
                    if (mask >> b & 1) out |= 1u << map[b];
                return out;
            };
            for (std::uint32_t mask = 0; mask < (1u << bits) && classes_ok; ++mask) {
                if (form[apply(mask, swapped)] != form[mask]) classes_ok = false;
                if (form[apply(mask, rotated)] != form[mask]) classes_ok = false;
            }
            std::vector<std::uint32_t> forms = form;
            std::sort(forms.begin(), forms.end());
            forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
            if (static_cast<long long>(forms.size()) != oracles::burnside_class_count(n))
                classes_ok = false;
        }
        report(9, "canonical form: 1000 relabelings invariant; exact classes on all n<=7 graphs",
               invariance_ok && classes_ok);
    }

    // 10: determinism across worker counts; graph6 round-trip
    {
        bool det_ok = true;
        for (Family fam : {Family::pancyclic, Family::bipancyclic, Family::oddly_bipancyclic}) {
            SearchOptions opt;
            opt.family = fam;
            opt.m_max = 3;
            opt.jobs = 1;
            const std::string one = to_jsonl(run_search(opt));
            opt.jobs = 4;
            if (to_jsonl(run_search(opt)) != one) det_ok = false;
        }
        std::mt19937 rng(123);
        bool g6_ok = true;
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 20);
            const Graph g = oracles::random_graph(rng, n, static_cast<int>(rng() % (3 * n + 1)));
            if (!(decode_graph6(encode_graph6(g)) == g)) g6_ok = false;
        }
        report(10, "catalogs byte-identical for 1 vs 4 workers; graph6 round-trip on 500 graphs",
               det_ok && g6_ok);
    }

    if (g_skips > 0)
        std::printf("%d criterion(s) skipped under --max-chords %d\n", g_skips, max_chords);
    if (g_failures == 0)
        std::printf("ACCEPTANCE OK\n");
    else
        std::printf("ACCEPTANCE FAILED (%d)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
