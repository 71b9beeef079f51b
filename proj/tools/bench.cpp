// Serial vs OpenMP comparison for the batch harnesses. Each harness runs the
// same per-sample kernel both ways; outputs must be identical.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strata/harness.hpp"

using namespace strata;

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

struct Row {
    std::string name;
    std::function<HarnessResult(bool)> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 2026;
    int scale = 1;
    if (argc > 1) scale = std::atoi(argv[1]);
    if (const char* env = std::getenv("STRATA_SEED")) seed = std::strtoull(env, nullptr, 10);

    std::vector<Row> rows = {
        {"roundtrip", [&](bool p) { return roundtrip_harness(100 * scale, seed, p); }},
        {"implications", [&](bool p) { return implications_harness(1000 * scale, seed, p); }},
        {"join-law", [&](bool p) { return join_law_harness(100 * scale, seed, p); }},
        {"morse", [&](bool p) { return morse_harness(100 * scale, seed, p); }},
        {"cone-point", [&](bool p) { return cone_point_harness(200 * scale, seed, p); }},
        {"charts", [&](bool p) { return chart_harness(50 * scale, seed, p); }},
        {"horns", [&](bool p) { return horn_harness(30 * scale, seed, p); }},
    };

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel path runs serially\n");
#endif
    std::printf("%-14s %10s %10s %8s %8s\n", "harness", "serial(s)", "openmp(s)", "speedup",
                "status");

    bool all_ok = true;
    for (const auto& row : rows) {
        double t0 = now_seconds();
        HarnessResult s = row.run(false);
        double t1 = now_seconds();
        HarnessResult p = row.run(true);
        double t2 = now_seconds();
        bool same = s.samples == p.samples && s.failures == p.failures &&
                    s.witnesses == p.witnesses;
        bool ok = same && s.pass();
        all_ok = all_ok && ok;
        double ts = t1 - t0, tp = t2 - t1;
        std::printf("%-14s %10.3f %10.3f %8.2f %8s\n", row.name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, ok ? (same ? "ok" : "diff") : "FAIL");
    }
    return all_ok ? 0 : 1;
}
