// Times the sweep suites under the serial reference path and the
// OpenMP-parallel path, and checks that the structured reports match.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "sysmod/suites.hpp"

using namespace sysmod;

namespace {

double run_timed(const std::string& name, const Scope& scope, std::string& out) {
    const auto t0 = std::chrono::steady_clock::now();
    auto rep = run_suite(name, scope);
    const auto t1 = std::chrono::steady_clock::now();
    out = to_structured(rep);
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> suites = {"lemma-3.14", "splitdir", "vnr-matrix", "trsh"};
    if (argc > 1) suites.assign(argv + 1, argv + argc);

    std::printf("workers: %d\n", worker_count(Exec::Parallel));
    std::printf("%-16s %10s %10s %8s  %s\n", "suite", "serial[s]", "openmp[s]", "speedup",
                "reports");
    bool all_match = true;
    for (const auto& name : suites) {
        Scope serial;
        serial.exec = Exec::Serial;
        Scope parallel;
        parallel.exec = Exec::Parallel;
        std::string rs, rp;
        const double ts = run_timed(name, serial, rs);
        const double tp = run_timed(name, parallel, rp);
        const bool match = rs == rp;
        all_match = all_match && match;
        std::printf("%-16s %10.3f %10.3f %8.2f  %s\n", name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, match ? "identical" : "DIFFER");
    }
    return all_match ? 0 : 1;
}
