#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pancyc {

// Simple undirected graph on vertices 0..order()-1.
// Adjacency lives in bitset rows so edge tests are O(1); orders beyond 64
// just take extra words per row.
class Graph {
public:
    explicit Graph(int order)
        : order_(order),
          words_((order + 63) / 64),
          bits_(static_cast<std::size_t>(order) * words_, 0) {
        if (order < 1) throw std::invalid_argument("graph order must be at least 1");
    }

    int order() const { return order_; }
    long long edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        return (bits_[row(u) + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        bits_[row(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[row(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        ++edge_count_;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(bits_[row(v) + w]);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = bits_[row(v) + w];
            while (word) {
                out.push_back(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < order_; ++u)
            for (int v : neighbors(u))
                if (v > u) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && bits_ == other.bits_;
    }

private:
    std::size_t row(int v) const { return static_cast<std::size_t>(v) * words_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                        std::to_string(order_));
    }

    int order_;
    int words_;
    std::vector<std::uint64_t> bits_;
    long long edge_count_ = 0;
};

inline Graph make_graph(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline int min_degree(const Graph& g) {
    int best = g.degree(0);
    for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

// Proper 2-coloring (0/1 per vertex) if one exists. Disconnected graphs are
// colored component by component.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// perm[old] = new label; perm must be a permutation of 0..order-1.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace pancyc
