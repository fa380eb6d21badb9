// Times the serial reference scan against the OpenMP scan on the same domain
// and checks that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <string>

#include "spdual/report.hpp"
#include "spdual/verifier.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace spdual;

static double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int main(int argc, char** argv) {
    int q = 4;
    int denominator = 8;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string k = argv[i];
        if (k == "--q") q = std::atoi(argv[i + 1]);
        if (k == "--denominator") denominator = std::atoi(argv[i + 1]);
    }
    GridSpec grid = make_grid(denominator, q, {UnitaryChar::make(1, 4)});

#if defined(_OPENMP)
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    struct Case {
        const char* name;
        Report (*run)(int, const GridSpec&, ExecMode);
    };
    const Case cases[] = {
        {"bound-by-trivial", verify_bound_by_trivial},
        {"section5", verify_section5},
        {"filters", verify_filters_consistency},
    };

    bool ok = true;
    for (const auto& c : cases) {
        if (q < 2 && std::string(c.name) != "bound-by-trivial") continue;
        double t0 = now_s();
        Report serial = c.run(q, grid, ExecMode::Serial);
        double t1 = now_s();
        Report parallel = c.run(q, grid, ExecMode::Parallel);
        double t2 = now_s();
        bool same = report_json(serial) == report_json(parallel);
        ok = ok && same;
        double ts = t1 - t0, tp = t2 - t1;
        std::printf("%-18s q=%d D=%d points=%lld  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                    c.name, q, denominator, serial.points_checked, ts, tp,
                    tp > 0 ? ts / tp : 0.0, same ? "identical" : "MISMATCH");
    }
    return ok ? 0 : 1;
}
