#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

// graph6 short form: byte 63+n, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each +63.
inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form supports order <= 62");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
    return out;
}

inline Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    const int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
    if (n < 1 || n > 62)
        throw std::invalid_argument("graph6: unsupported order byte (short form only)");
    const std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (text.size() != 1 + need)
        throw std::invalid_argument("graph6: payload has " + std::to_string(text.size() - 1) +
                                    " bytes, expected " + std::to_string(need));
    Graph g(n);
    std::size_t at = 1;
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                const int c = static_cast<unsigned char>(text[at++]);
                if (c < 63 || c > 126)
                    throw std::invalid_argument("graph6: invalid character at byte " + std::to_string(at - 1));
                acc = c - 63;
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(row, col);
            --nbits;
        }
    }
    return g;
}

// Edge-list text: optional comments/blank lines, a "n <order>" header, then
// one "u v" pair per line, 0-indexed.
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int order = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        if (order < 0) {
            std::string key;
            if (!(ls >> key >> order) || key != "n" || order < 1)
                throw std::invalid_argument("edge list: expected \"n <order>\" header at line " +
                                            std::to_string(lineno));
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("edge list: malformed edge at line " + std::to_string(lineno));
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("edge list: trailing tokens at line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    if (order < 0) throw std::invalid_argument("edge list: missing \"n <order>\" header");
    return make_graph(order, edges);
}

// Accepts either format: lines starting with "n " (or "#") are edge-list text,
// anything else is taken as a graph6 string on the first non-blank line.
inline Graph parse_graph_text(std::string_view text) {
    std::size_t at = text.find_first_not_of(" \t\r\n");
    if (at == std::string_view::npos) throw std::invalid_argument("empty graph input");
    if (text[at] == '#' || (text.substr(at, 2) == "n " || text.substr(at, 2) == "n\t"))
        return parse_edge_list(text);
    std::size_t end = text.find_first_of(" \t\r\n", at);
    if (end == std::string_view::npos) end = text.size();
    return decode_graph6(text.substr(at, end - at));
}

}  // namespace pancyc
