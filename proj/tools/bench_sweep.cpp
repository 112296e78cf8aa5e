// Per-schema timing harness for the sweeps:
//   bench_sweep [family] [m] [seconds-threshold] [schema-name]
#include <chrono>
#include <cstdio>
#include <cstring>

#include "pancyc/catalog.hpp"

using namespace pancyc;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
    Family family = Family::bipancyclic;
    int m = 5;
    double threshold = 0.5;
    if (argc > 1) family = *family_from_name(argv[1]);
    if (argc > 2) m = std::atoi(argv[2]);
    if (argc > 3) threshold = std::atof(argv[3]);

    const auto schemas = enumerate_schemas(family, m);
    std::printf("family=%s m=%d schemas=%zu\n", family_name(family).data(), m, schemas.size());
    std::fflush(stdout);
    double total = 0;
    int done = 0;
    for (const Schema& s : schemas) {
        if (argc > 4 && s.name != argv[4]) continue;
        const auto cycles = symbolic_cycles(s);
        const int n_cyc = static_cast<int>(cycles.size());
        const auto t0 = Clock::now();
        long sols = 0, units = 0;
        for (int r = 1; r <= n_cyc; ++r) {
            if (n_cyc % r) continue;
            const auto v = forced_order(n_cyc, family, r);
            if (!v) continue;
            for (ParityClass p : feasible_parity_classes(cycles, {family, r}, *v, s.arc_count())) {
                ++units;
                sols += static_cast<long>(
                    solve_assignments(s, cycles, {family, r}, p, true).size());
            }
        }
        const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        total += dt;
        ++done;
        if (dt > threshold) {
            std::printf("%-12s k=%2d n_cyc=%3d units=%ld sols=%ld  %.2fs  (%d/%zu, total %.1fs)\n",
                        s.name.c_str(), s.positions, n_cyc, units, sols, dt, done, schemas.size(),
                        total);
            std::fflush(stdout);
        }
    }
    std::printf("all done: %.1fs\n", total);
    return 0;
}
