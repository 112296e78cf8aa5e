#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pancyc/catalog.hpp"
#include "pancyc/io.hpp"
#include "pancyc/reference_counts.hpp"
#include "pancyc/schema_gen.hpp"
#include "pancyc/schema_io.hpp"
#include "pancyc/spectrum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_all(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

pancyc::Family parse_family(const std::string& name) {
    const auto f = pancyc::family_from_name(name);
    if (!f)
        throw std::runtime_error("unknown family \"" + name +
                                 "\" (expected pancyclic, bipancyclic or oddly-bipancyclic)");
    return *f;
}

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SearchArgs {
    std::string family = "pancyclic";
    std::string r = "all";
    int r_min = 1;
    int min_chords = 0;
    int max_chords = 5;
    std::string schemas_path;
    bool no_parity_prune = false;
    int jobs = default_jobs();
    std::string out_path;
    std::string g6_path;
};

int run_search_cmd(const SearchArgs& args) {
    pancyc::SearchOptions opt;
    opt.family = parse_family(args.family);
    opt.r_min = args.r_min;
    opt.m_min = args.min_chords;
    opt.m_max = args.max_chords;
    opt.jobs = args.jobs;
    opt.parity_prune = !args.no_parity_prune;

    std::vector<pancyc::Schema> override_schemas;
    std::optional<int> legacy_r;
    if (!args.schemas_path.empty()) {
        const auto file = pancyc::parse_schemas(read_all(args.schemas_path));
        override_schemas = file.schemas;
        legacy_r = file.default_r;
        opt.schema_override = &override_schemas;
    }
    if (args.r == "all") {
        if (legacy_r) opt.r = *legacy_r;  // legacy header supplies the default multiplicity
    } else {
        opt.r = std::stoi(args.r);
        if (*opt.r < 1) throw std::runtime_error("--r must be at least 1");
    }

    const auto catalog = pancyc::run_search(opt);
    write_all(args.out_path, pancyc::to_jsonl(catalog));
    if (!args.g6_path.empty()) {
        std::string g6;
        for (const auto& e : catalog) {
            g6 += e.canonical;
            g6 += "\n";
        }
        write_all(args.g6_path, g6);
    }
    return kExitOk;
}

int run_gen_schemas(const std::string& family_name, int m, const std::string& out_path) {
    const auto family = parse_family(family_name);
    const auto schemas = pancyc::enumerate_schemas(family, m);
    std::ostringstream out;
    out << "# " << pancyc::family_name(family) << " schemas, edge excess " << m << " ("
        << schemas.size() << " classes)\n";
    out << pancyc::serialize_schemas(schemas);
    write_all(out_path, out.str());
    return kExitOk;
}

int run_verify(const std::string& family_name, int r, const std::string& input_path) {
    const auto family = parse_family(family_name);
    pancyc::Graph g = pancyc::parse_graph_text(read_all(input_path));
    const int v = g.order();

    std::cout << "graph: order " << v << ", " << g.edge_count() << " edges\n";
    std::cout << "target: " << pancyc::family_name(family) << " r=" << r << "\n";

    if (family == pancyc::Family::bipancyclic && (v < 4 || v % 2 != 0)) {
        std::cout << "FAIL: bipancyclic requires even order >= 4\n";
        return kExitMismatch;
    }
    if (family == pancyc::Family::oddly_bipancyclic && (v < 5 || v % 2 == 0)) {
        std::cout << "FAIL: oddly-bipancyclic requires odd order >= 5\n";
        return kExitMismatch;
    }

    bool ok = true;
    if (family != pancyc::Family::pancyclic && !pancyc::is_bipartite(g)) {
        std::cout << "FAIL: graph is not bipartite\n";
        ok = false;
    }
    if (family == pancyc::Family::oddly_bipancyclic && pancyc::min_degree(g) < 2) {
        std::cout << "FAIL: minimum degree " << pancyc::min_degree(g) << " < 2\n";
        ok = false;
    }
    const auto want = pancyc::target_spectrum(family, r, v);
    const auto have = pancyc::cycle_spectrum(g);
    if (have != want) {
        if (ok) std::cout << "FAIL: spectrum differs from target\n";
        ok = false;
        std::cout << "  length  target  observed\n";
        auto all_lengths = want;
        for (auto [len, count] : have) all_lengths.emplace(len, 0);
        for (auto [len, unused] : all_lengths) {
            (void)unused;
            const long long w = want.count(len) ? want.at(len) : 0;
            const long long h = have.count(len) ? have.at(len) : 0;
            if (w != h) std::cout << "  " << len << "\t" << w << "\t" << h << "\n";
        }
    }
    if (!ok) return kExitMismatch;
    std::cout << "PASS: exactly " << r << " cycle(s) of every required length\n";
    return kExitOk;
}

int run_reproduce(int max_chords, int jobs) {
    bool all_ok = true;
    std::printf("%-18s %3s %6s %6s %9s\n", "family", "r", "order", "found", "expected");
    for (const auto family : {pancyc::Family::pancyclic, pancyc::Family::bipancyclic,
                              pancyc::Family::oddly_bipancyclic}) {
        pancyc::SearchOptions opt;
        opt.family = family;
        opt.m_max = max_chords;
        opt.jobs = jobs;
        const auto catalog = pancyc::run_search(opt);

        std::map<std::pair<int, int>, int> found;
        for (const auto& e : catalog) ++found[{e.r, e.order}];
        auto expected = pancyc::expected_counts(family, max_chords);

        auto keys = expected;
        for (const auto& [key, count] : found) keys.emplace(key, 0);
        int total = 0;
        for (const auto& [key, unused] : keys) {
            (void)unused;
            const int f = found.count(key) ? found.at(key) : 0;
            const int e = expected.count(key) ? expected.at(key) : 0;
            const bool ok = f == e;
            all_ok = all_ok && ok;
            total += f;
            std::printf("%-18s %3d %6d %6d %9d%s\n", pancyc::family_name(family).data(),
                        key.first, key.second, f, e, ok ? "" : "  MISMATCH");
        }
        std::printf("# %s: %d graphs, %zu rows\n", pancyc::family_name(family).data(), total,
                    keys.size());
    }
    std::printf("%s\n", all_ok ? "REPRODUCE OK" : "REPRODUCE MISMATCH");
    return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exhaustive search and verification for (r)-pancyclic, (r)-bipancyclic and "
                 "oddly (r)-bipancyclic graphs with bounded edge excess"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-schemas", "enumerate schema classes for one edge excess");
    std::string gen_family = "pancyclic";
    int gen_m = 1;
    std::string gen_out;
    gen->add_option("--family", gen_family, "pancyclic | bipancyclic | oddly-bipancyclic");
    gen->add_option("--m", gen_m, "edge excess (chords plus hub feet)")->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* search = app.add_subcommand("search", "sweep schemas and emit the JSONL catalog");
    SearchArgs sargs;
    search->add_option("--family", sargs.family, "pancyclic | bipancyclic | oddly-bipancyclic");
    search->add_option("--r", sargs.r, "multiplicity, or \"all\" to sweep every feasible r");
    search->add_option("--r-min", sargs.r_min, "ignore multiplicities below this");
    search->add_option("--min-chords", sargs.min_chords, "smallest edge excess to sweep");
    search->add_option("--max-chords", sargs.max_chords, "largest edge excess to sweep");
    search->add_option("--schemas", sargs.schemas_path, "schema file overriding generated schemas");
    search->add_flag("--no-parity-prune", sargs.no_parity_prune,
                     "validation mode: skip the arc-parity class pruning");
    search->add_option("--jobs", sargs.jobs, "worker threads");
    search->add_option("-o,--output", sargs.out_path, "catalog file (default stdout)");
    search->add_option("--g6-out", sargs.g6_path, "also write canonical graph6 lines here");

    auto* verify = app.add_subcommand("verify", "check one graph against a family target");
    std::string verify_family = "pancyclic";
    int verify_r = 1;
    std::string verify_input = "-";
    verify->add_option("--family", verify_family, "pancyclic | bipancyclic | oddly-bipancyclic");
    verify->add_option("--r", verify_r, "multiplicity")->required();
    verify->add_option("input", verify_input, "graph file: graph6 or edge list (\"-\" = stdin)");

    auto* reproduce = app.add_subcommand("reproduce", "run all sweeps and compare with the "
                                                      "reference classification counts");
    int rep_max_chords = 5;
    int rep_jobs = default_jobs();
    reproduce->add_option("--max-chords", rep_max_chords, "largest edge excess to sweep");
    reproduce->add_option("--jobs", rep_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (gen->parsed()) return run_gen_schemas(gen_family, gen_m, gen_out);
        if (search->parsed()) return run_search_cmd(sargs);
        if (verify->parsed()) return run_verify(verify_family, verify_r, verify_input);
        if (reproduce->parsed()) return run_reproduce(rep_max_chords, rep_jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
