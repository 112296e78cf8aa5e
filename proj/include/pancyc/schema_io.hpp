#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pancyc/schema.hpp"

namespace pancyc {

// Line-oriented schema file format:
//
//   # comment
//   12                  (optional legacy header: default cycle multiplicity)
//   schema <name>
//   arc <p> <q>         arcs chain into the boundary cycle; "arc 0 0" alone
//   chord <p> <q>        encodes the bare cycle
//   foot <p>
//
// One file may hold many schemas. Position labels are arbitrary non-negative
// integers local to one schema; parsing renumbers them 0..k-1 following the
// arc chain from the first arc's source.
struct SchemaFile {
    std::vector<Schema> schemas;
    std::optional<int> default_r;  // legacy leading integer, if present
};

namespace detail {

struct RawSchema {
    std::string name;
    int header_line = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> chords;
    std::vector<int> feet;
};

inline Schema finish_schema(const RawSchema& raw) {
    const auto fail = [&](const std::string& why, int line) {
        throw std::invalid_argument("schema " + raw.name + ": " + why + " (line " +
                                    std::to_string(line) + ")");
    };
    Schema s;
    s.name = raw.name;
    if (raw.arcs.empty()) fail("no arcs", raw.header_line);

    if (raw.arcs.size() == 1 && raw.arcs[0].first == raw.arcs[0].second) {
        if (!raw.chords.empty() || !raw.feet.empty())
            fail("bare cycle cannot carry chords or feet", raw.header_line);
        s.positions = 0;
        validate_schema(s);
        return s;
    }

    std::map<int, int> succ;
    for (auto [p, q] : raw.arcs) {
        if (p == q) fail("arc from a position to itself", raw.header_line);
        if (!succ.emplace(p, q).second) fail("two arcs leave position " + std::to_string(p), raw.header_line);
    }
    // Walk the chain; it must close into a single cycle over all positions.
    std::map<int, int> index;
    int at = raw.arcs[0].first;
    for (std::size_t i = 0; i < raw.arcs.size(); ++i) {
        if (!index.emplace(at, static_cast<int>(i)).second)
            fail("arcs revisit position " + std::to_string(at), raw.header_line);
        auto it = succ.find(at);
        if (it == succ.end()) fail("no arc leaves position " + std::to_string(at), raw.header_line);
        at = it->second;
    }
    if (at != raw.arcs[0].first || index.size() != raw.arcs.size())
        fail("arcs do not close into one boundary cycle", raw.header_line);

    s.positions = static_cast<int>(raw.arcs.size());
    for (auto [a, b] : raw.chords) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            fail("chord references unknown position", raw.header_line);
        if (ia->second == ib->second) fail("loop chord", raw.header_line);
        s.chords.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
    }
    std::sort(s.chords.begin(), s.chords.end());
    if (std::adjacent_find(s.chords.begin(), s.chords.end()) != s.chords.end())
        fail("duplicate chord", raw.header_line);
    for (int p : raw.feet) {
        auto ip = index.find(p);
        if (ip == index.end()) fail("foot references unknown position", raw.header_line);
        s.feet.push_back(ip->second);
    }
    std::sort(s.feet.begin(), s.feet.end());
    if (std::adjacent_find(s.feet.begin(), s.feet.end()) != s.feet.end())
        fail("duplicate foot", raw.header_line);
    validate_schema(s);
    return s;
}

}  // namespace detail

inline SchemaFile parse_schemas(std::string_view text) {
    SchemaFile out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<detail::RawSchema> cur;
    bool seen_schema = false;

    auto flush = [&]() {
        if (cur) {
            out.schemas.push_back(detail::finish_schema(*cur));
            cur.reset();
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word == "schema") {
            std::string name;
            if (!(ls >> name))
                throw std::invalid_argument("schema header without a name (line " +
                                            std::to_string(lineno) + ")");
            flush();
            cur = detail::RawSchema{};
            cur->name = name;
            cur->header_line = lineno;
            seen_schema = true;
            continue;
        }
        if (!seen_schema) {
            // Legacy files open with a bare multiplicity before any schema.
            std::size_t pos = 0;
            int r = 0;
            try {
                r = std::stoi(word, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos == word.size() && r >= 1 && !out.default_r) {
                out.default_r = r;
                continue;
            }
            throw std::invalid_argument("expected schema header, got \"" + word + "\" (line " +
                                        std::to_string(lineno) + ")");
        }
        auto read_int = [&](int& v) {
            if (!(ls >> v) || v < 0)
                throw std::invalid_argument("schema " + cur->name + ": malformed " + word +
                                            " line (line " + std::to_string(lineno) + ")");
        };
        if (word == "arc") {
            int p, q;
            read_int(p);
            read_int(q);
            cur->arcs.emplace_back(p, q);
        } else if (word == "chord") {
            int p, q;
            read_int(p);
            read_int(q);
            cur->chords.emplace_back(p, q);
        } else if (word == "foot") {
            int p;
            read_int(p);
            cur->feet.push_back(p);
        } else {
            throw std::invalid_argument("schema " + cur->name + ": unknown directive \"" + word +
                                        "\" (line " + std::to_string(lineno) + ")");
        }
    }
    flush();
    return out;
}

inline std::string serialize_schema(const Schema& s) {
    validate_schema(s);
    std::ostringstream out;
    out << "schema " << (s.name.empty() ? std::string("unnamed") : s.name) << "\n";
    if (s.positions == 0) {
        out << "arc 0 0\n";
        return out.str();
    }
    for (int i = 0; i < s.positions; ++i) out << "arc " << i << " " << (i + 1) % s.positions << "\n";
    for (auto [a, b] : s.chords) out << "chord " << a << " " << b << "\n";
    for (int p : s.feet) out << "foot " << p << "\n";
    return out.str();
}

inline std::string serialize_schemas(const std::vector<Schema>& schemas) {
    std::string out;
    for (std::size_t i = 0; i < schemas.size(); ++i) {
        if (i) out += "\n";
        out += serialize_schema(schemas[i]);
    }
    return out;
}

}  // namespace pancyc
