#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

// Reduced template of a search family member: a boundary cycle carrying k
// attachment positions (0..k-1 in cyclic order), unit-length chords between
// positions, and optionally a hub vertex off the cycle whose edges end at
// distinct positions ("feet"). Arc i is the boundary segment from position i
// to position (i+1) mod k and stands for a path of variable length.
//
// positions == 0 encodes the bare boundary cycle: no attachments and a single
// arc variable spanning the whole cycle.
struct Schema {
    int positions = 0;
    std::vector<std::pair<int, int>> chords;  // each (a,b) with a<b, sorted, unique
    std::vector<int> feet;                    // sorted, unique; non-empty means hub present
    std::string name;

    int arc_count() const { return positions == 0 ? 1 : positions; }
    bool has_hub() const { return !feet.empty(); }
    int excess() const { return static_cast<int>(chords.size() + feet.size()); }
};

inline void validate_schema(const Schema& s) {
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("schema " + (s.name.empty() ? "<unnamed>" : s.name) + ": " + why);
    };
    if (s.positions == 0) {
        if (!s.chords.empty() || !s.feet.empty()) fail("bare cycle cannot carry chords or feet");
        return;
    }
    if (s.positions < 2) fail("needs at least 2 positions");
    if (s.positions > 30) fail("more than 30 positions unsupported");
    for (std::size_t i = 0; i < s.chords.size(); ++i) {
        auto [a, b] = s.chords[i];
        if (a < 0 || b >= s.positions) fail("chord endpoint out of range");
        if (a == b) fail("loop chord at position " + std::to_string(a));
        if (a > b) fail("chord pair not normalized");
        if (i > 0 && !(s.chords[i - 1] < s.chords[i])) fail("chords not sorted or duplicated");
    }
    for (std::size_t i = 0; i < s.feet.size(); ++i) {
        if (s.feet[i] < 0 || s.feet[i] >= s.positions) fail("foot out of range");
        if (i > 0 && s.feet[i - 1] >= s.feet[i]) fail("feet not sorted or duplicated");
    }
    if (s.has_hub() && s.feet.size() < 2) fail("hub needs at least 2 feet");
}

// One cycle of the reduced multigraph: the set of arcs it runs through plus
// the number of unit-length edges (chords and chordette edges) it uses.
// Under an assignment x its length is sum of x over arcs + unit_edges.
struct SymbolicCycle {
    std::uint32_t arcs = 0;
    int unit_edges = 0;

    long long length(const std::vector<int>& x) const {
        long long len = unit_edges;
        std::uint32_t m = arcs;
        while (m) {
            len += x[std::countr_zero(m)];
            m &= m - 1;
        }
        return len;
    }

    bool operator==(const SymbolicCycle& o) const {
        return arcs == o.arcs && unit_edges == o.unit_edges;
    }
    bool operator<(const SymbolicCycle& o) const {
        return arcs != o.arcs ? arcs < o.arcs : unit_edges < o.unit_edges;
    }
};

// Positive path length per arc variable, indexed like the schema's arcs.
using Assignment = std::vector<int>;

// Smallest legal value per arc: 2 where a chord runs parallel to the arc
// (otherwise instantiation would create a double edge), 3 for the bare cycle,
// 1 everywhere else.
inline std::vector<int> arc_minimums(const Schema& s) {
    if (s.positions == 0) return {3};
    std::vector<int> mins(s.positions, 1);
    for (auto [a, b] : s.chords) {
        for (int i = 0; i < s.positions; ++i) {
            const int p = i, q = (i + 1) % s.positions;
            if ((std::min(p, q) == a && std::max(p, q) == b)) mins[i] = 2;
        }
    }
    return mins;
}

// Every simple cycle of the reduced multigraph, parallel edges kept distinct.
// Cycles are rooted at their smallest vertex; each is reported once because a
// closing edge must carry a larger edge id than the cycle's first edge.
inline std::vector<SymbolicCycle> symbolic_cycles(const Schema& s) {
    validate_schema(s);
    if (s.positions == 0) return {SymbolicCycle{1u, 0}};

    const int k = s.positions;
    const int hub = k;
    const int nv = k + (s.has_hub() ? 1 : 0);

    struct HalfEdge {
        int to;
        int id;
        int arc;  // arc index, or -1 for a unit edge
    };
    std::vector<std::vector<HalfEdge>> adj(nv);
    int id = 0;
    for (int i = 0; i < k; ++i) {
        const int a = i, b = (i + 1) % k;
        adj[a].push_back({b, id, i});
        adj[b].push_back({a, id, i});
        ++id;
    }
    for (auto [a, b] : s.chords) {
        adj[a].push_back({b, id, -1});
        adj[b].push_back({a, id, -1});
        ++id;
    }
    for (int p : s.feet) {
        adj[hub].push_back({p, id, -1});
        adj[p].push_back({hub, id, -1});
        ++id;
    }

    std::vector<SymbolicCycle> out;
    std::vector<char> used(nv, 0);
    std::uint32_t arc_mask = 0;
    int units = 0;
    int edges_on_path = 0;

    auto walk = [&](auto&& self, int anchor, int u, int first_id) -> void {
        for (const HalfEdge& e : adj[u]) {
            if (e.to == anchor) {
                if (edges_on_path >= 1 && e.id > first_id) {
                    SymbolicCycle c{arc_mask, units};
                    if (e.arc >= 0) c.arcs |= 1u << e.arc;
                    else ++c.unit_edges;
                    out.push_back(c);
                }
            } else if (e.to > anchor && !used[e.to]) {
                used[e.to] = 1;
                if (e.arc >= 0) arc_mask |= 1u << e.arc;
                else ++units;
                ++edges_on_path;
                self(self, anchor, e.to, first_id < 0 ? e.id : first_id);
                --edges_on_path;
                if (e.arc >= 0) arc_mask &= ~(1u << e.arc);
                else --units;
                used[e.to] = 0;
            }
        }
    };

    for (int anchor = 0; anchor < k; ++anchor) {
        used[anchor] = 1;
        walk(walk, anchor, anchor, -1);
        used[anchor] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Checks the assignment invariants for s: values >= arc minimums and no pair
// of parallel length-1 arcs (only possible when k == 2).
inline bool assignment_ok(const Schema& s, const Assignment& x) {
    if (static_cast<int>(x.size()) != s.arc_count()) return false;
    const auto mins = arc_minimums(s);
    for (int i = 0; i < s.arc_count(); ++i)
        if (x[i] < mins[i]) return false;
    if (s.positions == 2 && x[0] == 1 && x[1] == 1) return false;
    return true;
}

// Expands each arc into a path of x_i edges through fresh degree-2 vertices;
// chords and chordette edges become single edges. Boundary vertices come
// first in cyclic order, the hub (if any) is the last vertex.
inline Graph instantiate(const Schema& s, const Assignment& x) {
    validate_schema(s);
    if (!assignment_ok(s, x))
        throw std::invalid_argument("schema " + s.name + ": assignment violates arc constraints");

    long long boundary = 0;
    for (int v : x) boundary += v;
    const int b = static_cast<int>(boundary);
    Graph g(b + (s.has_hub() ? 1 : 0));
    for (int t = 0; t < b; ++t) g.add_edge(t, (t + 1) % b);
    if (s.positions > 0) {
        std::vector<int> offset(s.positions, 0);
        for (int i = 1; i < s.positions; ++i) offset[i] = offset[i - 1] + x[i - 1];
        for (auto [a, c] : s.chords) g.add_edge(offset[a], offset[c]);
        for (int p : s.feet) g.add_edge(b, offset[p]);
    }
    return g;
}

}  // namespace pancyc
