#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

// Cycle length -> number of simple cycles of that length; absent keys mean 0.
using CycleSpectrum = std::map<int, long long>;

enum class Family { pancyclic, bipancyclic, oddly_bipancyclic };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::pancyclic: return "pancyclic";
        case Family::bipancyclic: return "bipancyclic";
        case Family::oddly_bipancyclic: return "oddly-bipancyclic";
    }
    return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
    if (name == "pancyclic") return Family::pancyclic;
    if (name == "bipancyclic") return Family::bipancyclic;
    if (name == "oddly-bipancyclic" || name == "oddly") return Family::oddly_bipancyclic;
    return std::nullopt;
}

// Counts every simple cycle of g exactly once, keyed by length.
// Each cycle is rooted at its minimum vertex; a closing step is accepted only
// when the second path vertex is smaller than the last, so the two traversal
// directions collapse to one.
inline CycleSpectrum cycle_spectrum(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    CycleSpectrum spec;
    std::vector<char> used(n, 0);
    std::vector<int> path;
    path.reserve(n);

    auto extend = [&](auto&& self, int s, int u) -> void {
        for (int w : adj[u]) {
            if (w == s) {
                if (path.size() >= 3 && path[1] < path.back()) ++spec[static_cast<int>(path.size())];
            } else if (w > s && !used[w]) {
                used[w] = 1;
                path.push_back(w);
                self(self, s, w);
                path.pop_back();
                used[w] = 0;
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        path.assign(1, s);
        extend(extend, s, s);
        used[s] = 0;
    }
    return spec;
}

// Exact spectrum demanded from a member of the family at the given order.
inline CycleSpectrum target_spectrum(Family f, int r, int v) {
    if (r < 1) throw std::invalid_argument("multiplicity r must be at least 1");
    CycleSpectrum want;
    switch (f) {
        case Family::pancyclic:
            if (v < 3) throw std::invalid_argument("pancyclic target needs order >= 3");
            for (int len = 3; len <= v; ++len) want[len] = r;
            break;
        case Family::bipancyclic:
            if (v < 4 || v % 2 != 0)
                throw std::invalid_argument("bipancyclic target needs even order >= 4");
            for (int len = 4; len <= v; len += 2) want[len] = r;
            break;
        case Family::oddly_bipancyclic:
            if (v < 5 || v % 2 == 0)
                throw std::invalid_argument("oddly-bipancyclic target needs odd order >= 5");
            for (int len = 4; len <= v - 1; len += 2) want[len] = r;
            break;
    }
    return want;
}

// True iff g carries exactly the family's target spectrum at its own order and
// the family side conditions hold. Throws if the order's parity rules out the
// family entirely (caller bug, not a failing graph).
inline bool check_target(const Graph& g, Family f, int r) {
    const CycleSpectrum want = target_spectrum(f, r, g.order());
    if (f != Family::pancyclic && !is_bipartite(g)) return false;
    if (f == Family::oddly_bipancyclic && min_degree(g) < 2) return false;
    return cycle_spectrum(g) == want;
}

}  // namespace pancyc
