#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pancyc/canon.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/io.hpp"
#include "pancyc/schema.hpp"
#include "pancyc/schema_gen.hpp"
#include "pancyc/solver.hpp"
#include "pancyc/spectrum.hpp"

namespace pancyc {

struct CatalogEntry {
    Family family = Family::pancyclic;
    int r = 1;
    int m = 0;      // edge excess
    int order = 0;  // v
    std::string schema;
    Assignment assignment;
    std::string canonical;  // graph6 of the canonical labeling
    std::string graph6;     // graph6 of the graph as instantiated
    CycleSpectrum spectrum;
};

struct SearchOptions {
    Family family = Family::pancyclic;
    std::optional<int> r;  // fixed multiplicity; empty sweeps every divisor of each schema's cycle count
    int r_min = 1;
    int m_min = 0;
    int m_max = 5;
    int jobs = 1;
    bool parity_prune = true;
    const std::vector<Schema>* schema_override = nullptr;  // replaces generated schemas
};

namespace detail {

struct WorkUnit {
    int schema_idx;
    int r;
    std::optional<ParityClass> pclass;
};

}  // namespace detail

// Runs the sweep and returns the complete deduplicated catalog, ordered by
// (r, canonical form). Work units are (schema, parity class) pairs handed to
// a stateless worker pool; the merge walks units in index order, so the
// result is identical for any worker count.
inline std::vector<CatalogEntry> run_search(const SearchOptions& opt) {
    std::vector<Schema> schemas;
    if (opt.schema_override) {
        schemas = *opt.schema_override;
        for (const Schema& s : schemas) validate_schema(s);
    } else {
        const int lo = opt.family == Family::oddly_bipancyclic ? std::max(2, opt.m_min) : opt.m_min;
        for (int m = lo; m <= opt.m_max; ++m)
            for (Schema& s : enumerate_schemas(opt.family, m)) schemas.push_back(std::move(s));
    }

    std::vector<std::vector<SymbolicCycle>> cycles(schemas.size());
    std::vector<detail::WorkUnit> units;
    for (std::size_t si = 0; si < schemas.size(); ++si) {
        cycles[si] = symbolic_cycles(schemas[si]);
        const int n_cyc = static_cast<int>(cycles[si].size());
        std::vector<int> rs;
        if (opt.r) {
            if (*opt.r >= opt.r_min) rs.push_back(*opt.r);
        } else {
            for (int r = opt.r_min; r <= n_cyc; ++r)
                if (n_cyc % r == 0) rs.push_back(r);
        }
        for (int r : rs) {
            const auto v = forced_order(n_cyc, opt.family, r);
            if (!v) continue;
            if (opt.parity_prune) {
                for (ParityClass p :
                     feasible_parity_classes(cycles[si], {opt.family, r}, *v, schemas[si].arc_count()))
                    units.push_back({static_cast<int>(si), r, p});
            } else {
                units.push_back({static_cast<int>(si), r, std::nullopt});
            }
        }
    }

    std::vector<std::vector<Assignment>> found(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t ui = next.fetch_add(1);
            if (ui >= units.size()) return;
            const detail::WorkUnit& u = units[ui];
            // validation mode drops only the parity classes; the incremental
            // pruning stays (itself validated against reference runs)
            found[ui] = solve_assignments(schemas[u.schema_idx], cycles[u.schema_idx],
                                          {opt.family, u.r}, u.pclass, true);
        }
    };
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Deterministic merge: one representative per isomorphism class, the one
    // with the smallest (schema, assignment); final order is (r, canonical
    // form). Both are independent of worker count and prune mode.
    std::map<std::pair<int, std::string>, CatalogEntry> classes;
    for (std::size_t ui = 0; ui < units.size(); ++ui) {
        const detail::WorkUnit& u = units[ui];
        const Schema& s = schemas[u.schema_idx];
        for (Assignment& x : found[ui]) {
            Graph g = instantiate(s, x);
            CatalogEntry e;
            e.family = opt.family;
            e.r = u.r;
            e.m = s.excess();
            e.order = g.order();
            e.schema = s.name;
            e.assignment = std::move(x);
            e.canonical = canonical_form(g);
            e.graph6 = encode_graph6(g);
            e.spectrum = cycle_spectrum(g);
            if (e.spectrum != target_spectrum(opt.family, u.r, e.order))
                throw std::logic_error("search produced a graph failing its own target: schema " +
                                       s.name);
            auto [it, fresh] = classes.emplace(std::pair{e.r, e.canonical}, e);
            if (!fresh && std::tie(e.schema, e.assignment) <
                              std::tie(it->second.schema, it->second.assignment))
                it->second = std::move(e);
        }
    }
    std::vector<CatalogEntry> out;
    out.reserve(classes.size());
    for (auto& [key, entry] : classes) {
        (void)key;
        out.push_back(std::move(entry));
    }
    return out;
}

// graph6 bytes stay printable but may contain backslashes.
inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '\\' || c == '"') out += '\\';
        out += c;
    }
    return out;
}

inline std::string to_jsonl(const CatalogEntry& e) {
    std::ostringstream out;
    out << "{\"family\":\"" << family_name(e.family) << "\",\"r\":" << e.r << ",\"m\":" << e.m
        << ",\"order\":" << e.order << ",\"schema\":\"" << e.schema << "\",\"assignment\":[";
    for (std::size_t i = 0; i < e.assignment.size(); ++i)
        out << (i ? "," : "") << e.assignment[i];
    out << "],\"canonical\":\"" << json_escape(e.canonical) << "\",\"graph6\":\""
        << json_escape(e.graph6) << "\",\"spectrum\":[";
    bool first = true;
    for (auto [len, count] : e.spectrum) {
        out << (first ? "" : ",") << "[" << len << "," << count << "]";
        first = false;
    }
    out << "]}";
    return out.str();
}

inline std::string to_jsonl(const std::vector<CatalogEntry>& entries) {
    std::string out;
    for (const CatalogEntry& e : entries) {
        out += to_jsonl(e);
        out += "\n";
    }
    return out;
}

// Per-order class counts of a catalog slice, the shape reported throughout
// the published tables.
inline std::map<int, int> order_counts(const std::vector<CatalogEntry>& entries, int r) {
    std::map<int, int> counts;
    for (const CatalogEntry& e : entries)
        if (e.r == r) ++counts[e.order];
    return counts;
}

}  // namespace pancyc
