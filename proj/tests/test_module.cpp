#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sysmod/module.hpp"
#include "sysmod/registry.hpp"

using namespace sysmod;

TEST_CASE("rank-one free module is the system itself") {
    auto S = find_system("supertrop-B");
    auto F = free_module(S, 1);
    CHECK(F->size() == 3);
    CHECK(F->elem_names == S->elem_names);
    CHECK(F->tangibles().size() == 1);
    CHECK(module_genuine(*F));
}

TEST_CASE("rank-two free module over the symmetrized Booleans") {
    auto S = find_system("sym-bool");
    auto F = free_module(S, 2);
    CHECK(F->size() == 16);
    CHECK(F->tangibles().size() == 4);  // two tangibles in two slots
    CHECK(module_genuine(*F));
    // the relation is componentwise
    const Elem x = *F->elem_by_name("((1,0),(0,0))");
    const Elem y = *F->elem_by_name("((1,1),(0,0))");
    CHECK(F->leq(x, y));
    CHECK_FALSE(F->leq(y, x));
}

TEST_CASE("direct sums") {
    auto S = find_system("supertrop-B");
    auto M = free_module(S, 1);
    CHECK(direct_sum({M}) == M);
    auto sum = direct_sum({M, M});
    CHECK(sum->size() == 9);
    auto F2 = free_module(S, 2);
    CHECK(*sum == *F2);
    CHECK_THROWS_AS(direct_sum({M, free_module(find_system("sym-bool"), 1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(direct_sum({F2, F2, F2, F2, F2, F2}), BoundError);
}

TEST_CASE("null submodule") {
    auto S = find_system("supertrop-B");
    auto M = free_module(S, 1);
    auto nul = null_submodule(M);
    CHECK(nul.module->size() == 2);
    CHECK(nul.module->tangibles().empty());
    CHECK_FALSE(module_genuine(*nul.module));  // nothing generates it
    CHECK(nul.to_parent(*nul.module->elem_by_name("nu")) == *M->elem_by_name("nu"));
}

TEST_CASE("submodule closure and rejection") {
    auto S = find_system("supertrop-B");
    auto F = free_module(S, 2);
    const Elem e1 = *F->elem_by_name("(1,0)");
    auto closure = submodule_closure(*F, {e1});
    CHECK(closure.size() == 3);  // zero, the generator, its ghost
    CHECK(carrier_closed(*F, closure));
    CHECK_THROWS_AS(submodule(F, std::vector<Elem>{e1}, "broken"), std::invalid_argument);
    auto sub = submodule(F, closure, "line");
    CHECK(module_genuine(*sub.module));
}

TEST_CASE("module audits catch broken actions") {
    auto S = find_system("supertrop-B");
    auto M = free_module(S, 1);
    SystemicModule broken = *M;
    broken.act_tab[static_cast<size_t>(S->one) * 3 + *M->elem_by_name("1")] =
        *M->elem_by_name("nu");
    CHECK(module_genuine(*M));
    CHECK_FALSE(check_module(broken).all_passed());
}

TEST_CASE("module quasi-zeros and null sets") {
    auto S = find_system("sym-bool");
    auto F = free_module(S, 2);
    const auto nulls = module_null_set(*F);
    const auto circs = module_quasi_zeros(*F);
    std::set<Elem> nullset(nulls.begin(), nulls.end());
    for (Elem c : circs) CHECK(nullset.count(c));
    CHECK(circs.size() == 4);  // pairs of diagonal entries
}

TEST_CASE("builtin module roster") {
    auto S = find_system("supertrop-B");
    auto roster = builtin_modules(S, 9);
    REQUIRE(roster.size() == 3);
    CHECK(roster[0].name == "free1:supertrop-B");
    CHECK(roster[1].name == "free2:supertrop-B");
    CHECK(roster[2].name == "null1:supertrop-B");
    CHECK(roster[0].genuine);
    CHECK(roster[1].genuine);
    CHECK_FALSE(roster[2].genuine);
    CHECK(builtin_modules(S, 4).size() == 2);  // free2 drops out
    CHECK(find_module("free1:supertrop-B"));
    CHECK_FALSE(find_module("free9:supertrop-B"));
}
