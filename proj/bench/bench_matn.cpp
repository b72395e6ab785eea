// Compares the OpenMP matrix-multiply kernel against the serial reference
// on fuzzy-sphere-sized problems and reports GFLOP/s and speedup. The two
// kernels must agree entrywise to rounding; the run aborts if they drift.
//
//   bench_matn [max_n]   sizes double from 64 up to max_n (default 512)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmirror/fuzzy_sphere.hpp"

using namespace qmirror;
using fuzzy::matn;

namespace {

matn random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    matn m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = cx{dist(eng), dist(eng)};
    return m;
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    std::size_t max_n = 512;
    if (argc > 1) max_n = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both kernels run serially\n");
#endif
    std::printf("%6s %14s %14s %9s %12s\n", "n", "serial (s)", "parallel (s)",
                "speedup", "GFLOP/s par");

    for (std::size_t n = 64; n <= max_n; n *= 2) {
        const matn a = random_matrix(n, 2 * n);
        const matn b = random_matrix(n, 2 * n + 1);
        const int reps = n <= 128 ? 5 : 3;

        matn out_serial(n), out_parallel(n);
        const double t_serial =
            time_best_of(reps, [&] { out_serial = fuzzy::multiply_serial(a, b); });
        const double t_parallel =
            time_best_of(reps, [&] { out_parallel = fuzzy::multiply(a, b); });

        const double drift = fuzzy::max_abs_diff(out_serial, out_parallel);
        if (drift > 1e-10 * static_cast<double>(n)) {
            std::printf("kernel mismatch at n = %zu: %g\n", n, drift);
            return 1;
        }

        // Complex multiply-add: 8 flops, n^3 of them.
        const double gflops = 8.0 * static_cast<double>(n) * n * n / t_parallel / 1e9;
        std::printf("%6zu %14.6f %14.6f %8.2fx %12.2f\n", n, t_serial, t_parallel,
                    t_serial / t_parallel, gflops);
    }

    // The workload the kernels exist for: radius check at the requested cap.
    const std::size_t radius_n = max_n >= 64 ? max_n : 64;
    const auto t0 = std::chrono::steady_clock::now();
    const double dev = fuzzy::radius_deviation(fuzzy::build_fuzzy_coordinates(radius_n));
    const auto t1 = std::chrono::steady_clock::now();
    std::printf("radius check at n = %zu: deviation %.3e in %.3f s\n", radius_n, dev,
                std::chrono::duration<double>(t1 - t0).count());
    return 0;
}
