// Benchmark: serial reference sweep vs the OpenMP sweep on the same grid,
// with a result-equality check.

#include <chrono>
#include <iostream>

#include "charscheme/report_json.hpp"
#include "charscheme/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace charscheme;

int main(int argc, char** argv) {
    SweepOptions opt;
    opt.p_max = argc > 1 ? std::atol(argv[1]) : 4;
    opt.q_max = argc > 2 ? std::atol(argv[2]) : 2;
    opt.run_tangent = true;
    opt.run_groebner = argc > 3 && std::string(argv[3]) == "--groebner";

    std::size_t n = enumerate_manifolds(opt.p_max, opt.q_max).size();
    std::cout << "sweep p <= " << opt.p_max << ", |q| <= " << opt.q_max << ": " << n
              << " manifolds"
#ifdef _OPENMP
              << ", " << omp_get_max_threads() << " threads"
#endif
              << "\n";

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    opt.parallel = false;
    std::vector<SweepRow> serial = run_sweep_serial(opt);
    auto t1 = clock::now();
    opt.parallel = true;
    std::vector<SweepRow> parallel = run_sweep(opt);
    auto t2 = clock::now();

    double ts = std::chrono::duration<double>(t1 - t0).count();
    double tp = std::chrono::duration<double>(t2 - t1).count();
    std::cout << "serial:   " << ts << " s\n";
    std::cout << "parallel: " << tp << " s  (speedup " << (tp > 0 ? ts / tp : 0) << "x)\n";

    if (serial.size() != parallel.size()) {
        std::cout << "MISMATCH: row counts differ\n";
        return 1;
    }
    for (std::size_t i = 0; i < serial.size(); ++i) {
        if (!(serial[i] == parallel[i])) {
            std::cout << "MISMATCH at row " << i << " (" << serial[i].params.str() << ")\n";
            return 1;
        }
    }
    std::size_t failures = 0;
    for (const auto& r : serial)
        if (!r.ok) ++failures;
    std::cout << "results identical; " << failures << " row failures\n";
    return failures == 0 ? 0 : 2;
}
