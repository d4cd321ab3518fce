// The serial path is the reference; the OpenMP path must reproduce its
// structured reports byte for byte.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sysmod/suites.hpp"

using namespace sysmod;

namespace {

std::string run(const std::string& name, Exec exec, int scope_size) {
    Scope scope;
    scope.exec = exec;
    scope.max_module_size = scope_size;
    return to_structured(run_suite(name, scope));
}

}  // namespace

TEST_CASE("structured reports agree between serial and parallel sweeps") {
    for (const auto& [name, size] : std::vector<std::pair<std::string, int>>{
             {"axioms", 6},
             {"hyp7", 6},
             {"lemma-3.14", 4},
             {"splitdir", 4},
             {"dual-basis", 4},
             {"epicspl", 4},
             {"vnr-matrix", 4},
             {"trsh119", 3},
             {"sch29", 3}}) {
        INFO(name);
        CHECK(run(name, Exec::Serial, size) == run(name, Exec::Parallel, size));
    }
}

TEST_CASE("repeat runs are byte-stable") {
    const std::string a = run("trsh118", Exec::Parallel, 3);
    const std::string b = run("trsh118", Exec::Parallel, 3);
    CHECK(a == b);
}
