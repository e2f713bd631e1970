// Times the parallel enumeration kernel against the serial reference on
// growing degree bounds and reports throughput and agreement.
//
//   bench_enumerate [n] [max_degree] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pyramid/enumerate.hpp"

using namespace pyramid;

namespace {

template <typename F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 1;
    int maxD = argc > 2 ? std::atoi(argv[2]) : 9;
    int threads = argc > 3 ? std::atoi(argv[3]) : 0;
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
    std::printf("threads: %d\n", threads > 0 ? threads : omp_get_max_threads());
#else
    (void)threads;
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    std::printf("%4s %10s %12s %12s %8s\n", "D", "configs", "serial_s", "parallel_s", "speedup");
    for (int D = 4; D <= maxD; ++D) {
        Enumerated ser, par;
        double ts = time_s([&] { ser = enumerate_partitions_serial(n, D); });
        double tp = time_s([&] { par = enumerate_partitions(n, D, true); });
        bool same = ser.sum == par.sum && ser.items.size() == par.items.size();
        std::printf("%4d %10zu %12.4f %12.4f %8.2f%s\n", D, par.items.size(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, same ? "" : "  DISAGREE");
        if (!same) return 1;
    }
    return 0;
}
