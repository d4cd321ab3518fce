// Acceptance gate: one pass/fail line per criterion, each pinned to the
// scope and tolerance it must hold at.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <set>

#include "sysmod/suites.hpp"

using namespace sysmod;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void line(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("criterion %2d: %s  %s (%.2fs)\n", criterion, pass ? "PASS" : "FAIL", what.c_str(),
                secs);
    std::fflush(stdout);
}

bool clean(const VerificationReport& rep, bool allow_skips = true) {
    if (rep.count(Verdict::Fail) > 0 || rep.count(Verdict::Inconclusive) > 0) return false;
    if (!allow_skips && rep.count(Verdict::Skipped) > 0) return false;
    return true;
}

std::string instance_dir() {
    if (const char* env = std::getenv("SYSMOD_INSTANCE_DIR")) return env;
    return "instances";
}

}  // namespace

TEST_CASE("criterion 1: axiom suite classifications") {
    Timer t;
    bool ok = true;
    for (const char* name : {"supertrop-B", "sym-bool", "sym-supertrop-B", "krasner-hs", "sign-hs"}) {
        auto S = find_system(name);
        REQUIRE(S);
        const auto audit = check_system(*S);
        INFO(name);
        CHECK(at_least_system(audit.classification));
        ok = ok && at_least_system(audit.classification);
    }
    {
        const auto audit = check_system(*find_system("bool"));
        CHECK(audit.classification == Classification::PseudoTriple);
        ok = ok && audit.classification == Classification::PseudoTriple;
        // exactly the quasi-zero clash fails among the system-level axioms
        std::set<std::string> failed;
        for (const auto& name : audit.failed())
            if (name != "tangible-surpass-equality") failed.insert(name);
        const bool exact = failed == std::set<std::string>{"triple-tangibles-avoid-quasi-zeros"};
        CHECK(exact);
        ok = ok && exact;
    }
    const double secs = t.seconds();
    CHECK(secs < 1.0);
    ok = ok && secs < 1.0;
    line(1, ok, "axiom suite classifications, runtime < 1 s", secs);
}

TEST_CASE("criterion 2: splitting lemma clauses on small modules") {
    Timer t;
    Scope scope;
    scope.max_module_size = 5;
    scope.systems = {"supertrop-B", "sym-bool"};
    auto rep = run_suite("lemma-3.14", scope);
    const bool ok = clean(rep);
    CHECK(rep.count(Verdict::Fail) == 0);
    CHECK(rep.count(Verdict::Inconclusive) == 0);
    const double secs = t.seconds();
    CHECK(secs < 300.0);
    line(2, ok && secs < 300.0, "splitting lemma sweeps, zero counterexamples", secs);
}

TEST_CASE("criterion 3: split decompositions verify exactly") {
    Timer t;
    Scope scope;
    scope.max_module_size = 5;
    auto rep = run_suite("splitdir", scope);
    const bool ok = clean(rep);
    CHECK(ok);
    line(3, ok, "both decomposition variants certified, zero hard errors", t.seconds());
}

TEST_CASE("criterion 4: free modules pass the four projectivity kinds") {
    Timer t;
    Scope scope;
    scope.max_free_rank = 2;
    scope.max_module_size = 9;
    auto rep = run_suite("free-projective", scope);
    const bool ok = clean(rep);
    CHECK(ok);
    line(4, ok, "free modules of rank <= 2, kinds plain/preceq-h/h/succeq", t.seconds());
}

TEST_CASE("criterion 5: characterization criteria agree") {
    Timer t;
    bool ok = true;
    for (const char* suite : {"epicspl", "epicspl-h", "epicspl-succ"}) {
        Scope scope;
        scope.max_module_size = 6;
        auto rep = run_suite(suite, scope);
        INFO(suite);
        CHECK(clean(rep));
        ok = ok && clean(rep);
    }
    line(5, ok, "projectivity characterizations, zero disagreements", t.seconds());
}

TEST_CASE("criterion 6: matrix suite") {
    Timer t;
    Scope scope;
    auto rep = run_suite("vnr-matrix", scope);
    const bool ok = clean(rep);
    CHECK(ok);
    const double secs = t.seconds();
    CHECK(secs < 120.0);
    line(6, ok && secs < 120.0, "idempotent/vnr matrix sweeps with column-space certificates",
         secs);
}

TEST_CASE("criterion 7: dual bases match the projectivity verdicts") {
    Timer t;
    bool ok = true;
    for (const char* suite : {"dual-basis", "dual-basis-succ"}) {
        Scope scope;
        scope.max_module_size = 6;
        auto rep = run_suite(suite, scope);
        INFO(suite);
        CHECK(clean(rep));
        ok = ok && clean(rep);
    }
    line(7, ok, "dual-basis equivalences in both directions", t.seconds());
}

TEST_CASE("criterion 8: pullback sweeps") {
    Timer t;
    bool ok = true;
    for (const char* suite : {"trsh", "trsh118", "trsh11", "trsh119", "sch29"}) {
        Scope scope;
        scope.max_module_size = 4;
        auto rep = run_suite(suite, scope);
        INFO(suite);
        CHECK(rep.count(Verdict::Fail) == 0);
        CHECK(rep.count(Verdict::Inconclusive) == 0);
        ok = ok && rep.count(Verdict::Fail) == 0 && rep.count(Verdict::Inconclusive) == 0;
        // skipped clauses must carry their hypothesis tags
        for (const auto& c : rep.clauses)
            if (c.verdict == Verdict::Skipped) {
                CHECK_FALSE(c.witness.empty());
                ok = ok && !c.witness.empty();
            }
    }
    line(8, ok, "pullback verifications, zero clause failures", t.seconds());
}

TEST_CASE("criterion 9: hypersystem negation lemma") {
    Timer t;
    Scope scope;
    auto rep = run_suite("hyp7", scope);
    bool ok = clean(rep) && rep.clauses.size() >= 2;
    CHECK(ok);
    line(9, ok, "negation partner containment on both hypersystems", t.seconds());
}

TEST_CASE("criterion 10: round-trips and byte-stable reports") {
    Timer t;
    bool ok = true;
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(instance_dir())) {
        ++files;
        const std::string path = entry.path().string();
        INFO(path);
        auto first = parse_instance(read_file(path));
        auto second = parse_instance(serialize_instance(first));
        const bool same = instances_equal(first, second);
        CHECK(same);
        ok = ok && same;
    }
    CHECK(files >= 9);

    for (const char* suite : {"axioms", "trsh118"}) {
        Scope scope;
        scope.max_module_size = 3;
        const std::string a = to_structured(run_suite(suite, scope));
        const std::string b = to_structured(run_suite(suite, scope));
        INFO(suite);
        CHECK(a == b);
        ok = ok && a == b;
    }
    line(10, ok, "parse/serialize round-trips and byte-identical reports", t.seconds());
}
