#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sysmod/instances.hpp"
#include "sysmod/registry.hpp"
#include "sysmod/system.hpp"

using namespace sysmod;

namespace {

std::set<std::string> name_set(const FiniteSystem& S, const std::vector<Elem>& xs) {
    std::set<std::string> out;
    for (Elem x : xs) out.insert(S.ename(x));
    return out;
}

}  // namespace

TEST_CASE("quasi-zero lookups") {
    auto st = make_supertrop_boolean();
    CHECK(st.ename(quasi_zero(st, *st.elem_by_name("1"))) == "nu");
    CHECK(quasi_zero(st, st.zero) == st.zero);

    auto sb = symmetrize(make_boolean());
    const Elem one0 = *sb.elem_by_name("(1,0)");
    CHECK(sb.ename(quasi_zero(sb, one0)) == "(1,1)");

    CHECK_THROWS_AS(quasi_zero(st, 17), std::out_of_range);
}

TEST_CASE("null sets of the built-in systems") {
    auto st = make_supertrop_boolean();
    CHECK(name_set(st, null_set(st)) == std::set<std::string>{"0", "nu"});

    auto sb = symmetrize(make_boolean());
    CHECK(name_set(sb, null_set(sb)) == std::set<std::string>{"(0,0)", "(1,1)"});

    auto kr = make_hypersystem(krasner_hyperfield());
    CHECK(name_set(kr, null_set(kr)) == std::set<std::string>{"{0}", "{0,1}"});
}

TEST_CASE("quasi-zero-shift relation on the symmetrized Booleans") {
    auto sb = symmetrize(make_boolean());
    const Rel rel = build_surpass_circ(sb);
    const Elem a = *sb.elem_by_name("(1,0)");
    const Elem b = *sb.elem_by_name("(1,1)");
    const Elem c = *sb.elem_by_name("(0,1)");
    CHECK(rel.at(a, b));
    CHECK_FALSE(rel.at(a, c));
    for (Elem x = 0; x < sb.size(); ++x) CHECK(rel.at(x, x));
}

TEST_CASE("null-shift relation") {
    auto kr = make_hypersystem(krasner_hyperfield());
    const Rel rel = build_surpass_null(kr, null_set(kr));
    CHECK(rel.at(*kr.elem_by_name("{1}"), *kr.elem_by_name("{0,1}")));
    for (Elem n : null_set(kr)) CHECK(rel.at(kr.zero, n));

    auto st = make_supertrop_boolean();
    const Rel strel = build_surpass_null(st, null_set(st));
    CHECK(strel.at(*st.elem_by_name("1"), *st.elem_by_name("nu")));
}

TEST_CASE("classification of the Boolean semiring") {
    auto audit = check_system(make_boolean());
    CHECK(audit.classification == Classification::PseudoTriple);
    // among the system-level axioms, only the quasi-zero clash fails
    const std::set<std::string> system_level = {
        "add-commutative", "add-associative", "add-identity", "mul-associative", "mul-identity",
        "distributive-left", "distributive-right", "zero-absorbing", "negation-involution",
        "negation-fixes-zero", "negation-additive", "negation-tangible-action",
        "negation-preserves-tangibles", "triple-tangibles-avoid-quasi-zeros",
        "triple-tangibles-generate", "unique-negation", "surpass-reflexive", "surpass-transitive",
        "surpass-quasi-zeros-null", "surpass-negation-monotone", "surpass-additive",
        "surpass-tangible-scaling", "surpass-tangible-antisymmetry"};
    std::set<std::string> failed;
    for (const auto& name : audit.failed())
        if (system_level.count(name)) failed.insert(name);
    CHECK(failed == std::set<std::string>{"triple-tangibles-avoid-quasi-zeros"});
}

TEST_CASE("built-in systems audit as systems") {
    for (const char* name : {"supertrop-B", "sym-bool", "sym-supertrop-B", "krasner-hs", "sign-hs"}) {
        auto S = find_system(name);
        REQUIRE(S);
        auto audit = check_system(*S);
        INFO(name);
        CHECK(at_least_system(audit.classification));
    }
}

TEST_CASE("surpassing lemmas hold on every built-in system") {
    for (const auto& entry : builtin_systems()) {
        const FiniteSystem& S = *entry.system;
        INFO(entry.name);
        for (Elem a = 0; a < S.size(); ++a) {
            // quasi-zeros are fixed by the negation map
            CHECK(S.neg(quasi_zero(S, a)) == quasi_zero(S, a));
            for (Elem c = 0; c < S.size(); ++c)
                CHECK(S.leq(a, S.add(a, quasi_zero(S, c))));
            for (Elem b = 0; b < S.size(); ++b) {
                if (!S.leq(a, b)) continue;
                CHECK(S.leq(S.zero, S.add(b, S.neg(a))));
                CHECK(S.leq(S.zero, S.add(a, S.neg(b))));
            }
        }
        // the generated relation is contained in the null-shift relation
        const Rel circ = build_surpass_circ(S);
        FiniteSystem probe = S;
        probe.surpass = circ;
        const Rel nul = build_surpass_null(S, null_set(probe));
        for (Elem a = 0; a < S.size(); ++a)
            for (Elem b = 0; b < S.size(); ++b)
                if (circ.at(a, b)) CHECK(nul.at(a, b));
        // quasi-zeros form a submodule
        const auto circs = quasi_zero_set(S);
        std::set<Elem> cs(circs.begin(), circs.end());
        for (Elem a : circs) {
            for (Elem b : circs) CHECK(cs.count(S.add(a, b)));
            for (Elem t : S.tangibles()) CHECK(cs.count(S.mul(t, a)));
        }
    }
}

TEST_CASE("set extension of the surpassing relation") {
    auto st = make_supertrop_boolean();
    const Elem one = *st.elem_by_name("1");
    const Elem nu = *st.elem_by_name("nu");
    CHECK(preceq_sets(st, {one}, {nu}));
    CHECK(preceq_sets(st, {st.zero, one}, {nu, st.zero}));
    CHECK_FALSE(preceq_sets(st, {nu}, {one}));
}

TEST_CASE("degenerate carrier stays a pseudo-triple") {
    FiniteSystem S;
    S.name = "point";
    S.elem_names = {"0"};
    S.zero = S.one = 0;
    S.add_tab = {0};
    S.mul_tab = {0};
    S.neg_tab = {0};
    S.tangible = {0};
    S.surpass = build_surpass_circ(S);
    auto audit = check_system(S);
    CHECK(audit.classification == Classification::PseudoTriple);
}
