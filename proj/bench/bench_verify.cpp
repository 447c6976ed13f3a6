// Wall-time comparison of the serial reference evaluators against the OpenMP
// kernels, per degree slice. Usage: bench_verify [shape] [max_degree] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "staircase/cauchy.hpp"

using namespace staircase;

namespace {

template <typename Fn>
double best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        if (ms < best) best = ms;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const StaircaseShape shape =
        parse_shape(argc > 1 ? argv[1] : "2,4,4,4,5,5");
    const std::int64_t max_degree = argc > 2 ? std::atoll(argv[2]) : 6;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 3;

#ifdef _OPENMP
    std::printf("shape %s, degrees 0..%lld, best of %d, %d thread(s)\n",
                shape.to_string().c_str(), static_cast<long long>(max_degree), reps,
                omp_get_max_threads());
#else
    std::printf("shape %s, degrees 0..%lld, best of %d, OpenMP unavailable\n",
                shape.to_string().c_str(), static_cast<long long>(max_degree), reps);
#endif
    std::printf("%-14s %8s %12s %12s %8s\n", "evaluator", "degree", "serial(ms)",
                "parallel(ms)", "speedup");

    auto bench_pair = [&](const char* name, auto&& serial_fn, auto&& parallel_fn) {
        for (std::int64_t N = max_degree; N <= max_degree; ++N) {
            BigradedPolynomial a, b;
            const double ts = best_of(reps, [&] { a = serial_fn(N); });
            const double tp = best_of(reps, [&] { b = parallel_fn(N); });
            if (a != b) {
                std::printf("MISMATCH between serial and parallel %s at degree %lld\n", name,
                            static_cast<long long>(N));
                std::exit(1);
            }
            std::printf("%-14s %8lld %12.2f %12.2f %7.2fx\n", name, static_cast<long long>(N),
                        ts, tp, ts / tp);
        }
    };

    bench_pair("lhs_degree", [&](std::int64_t N) { return lhs_degree(shape, N, false); },
               [&](std::int64_t N) { return lhs_degree(shape, N, true); });
    bench_pair("rhs_right", [&](std::int64_t N) { return rhs_right(shape, N, false); },
               [&](std::int64_t N) { return rhs_right(shape, N, true); });
    bench_pair("rhs_left", [&](std::int64_t N) { return rhs_left(shape, N, false); },
               [&](std::int64_t N) { return rhs_left(shape, N, true); });
    bench_pair("rhs_alt",
               [&](std::int64_t N) { return rhs_alternating(shape, N, BruhatSense::reversed,
                                                            false); },
               [&](std::int64_t N) { return rhs_alternating(shape, N, BruhatSense::reversed,
                                                            true); });
    return 0;
}
