// Benchmarks the OpenMP batch kernels against their serial reference
// implementations and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "orthops/laguerreop.hpp"
#include "orthops/random.hpp"
#include "orthops/rootcheck.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void print_row(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-28s %12.1f %12.1f %10.2fx   %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                agree ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthops benchmark: serial reference vs OpenMP kernels"};
    int cases = 400;
    int theorem_n = 60;
    std::uint64_t seed = 42;
    app.add_option("--cases", cases, "batch size for the root kernels (default: 400)");
    app.add_option("--theorem-n", theorem_n, "degree bound for the operator check (default: 60)");
    app.add_option("--seed", seed, "input generation seed (default: 42)");
    CLI11_PARSE(app, argc, argv);

    using namespace orthops;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled at build time; both columns run serially.\n");
#endif
    std::printf("%-28s %12s %12s %11s\n", "kernel", "serial (ms)", "parallel (ms)", "speedup");

    {
        Rng rng(seed);
        std::vector<PolyQ> polys;
        polys.reserve(static_cast<std::size_t>(cases));
        for (int t = 0; t < cases; ++t)
            polys.push_back(random_real_rooted(rng, static_cast<int>(rng.uniform(4, 12))).poly);
        std::vector<RootReport> serial, parallel;
        const double ts = time_ms([&] { serial = count_real_roots_batch_serial(polys); });
        const double tp = time_ms([&] { parallel = count_real_roots_batch(polys); });
        print_row("count_real_roots_batch", ts, tp, serial == parallel);
    }

    {
        Rng rng(seed + 1);
        std::vector<PreservationCase> batch;
        batch.reserve(static_cast<std::size_t>(cases));
        for (int t = 0; t < cases; ++t) {
            RealRootedSample s = random_real_rooted(rng, static_cast<int>(rng.uniform(4, 10)));
            batch.push_back({{random_nonzero_rational(rng, 6), random_positive_rational(rng, 6),
                              random_rational(rng, 6)},
                             std::move(s.poly)});
        }
        std::vector<unsigned char> serial, parallel;
        const double ts = time_ms([&] { serial = preservation_batch_serial(batch); });
        const double tp = time_ms([&] { parallel = preservation_batch(batch); });
        print_row("preservation_batch", ts, tp, serial == parallel);
    }

    {
        TheoremCheck serial{}, parallel{};
        const double ts = time_ms([&] { serial = verify_theorem_serial(theorem_n); });
        const double tp = time_ms([&] { parallel = verify_theorem(theorem_n); });
        print_row("verify_theorem", ts, tp,
                  serial.ok == parallel.ok && serial.first_violation == parallel.first_violation);
    }

    return 0;
}
