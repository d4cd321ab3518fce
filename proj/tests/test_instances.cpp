#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sysmod/instances.hpp"
#include "sysmod/registry.hpp"

using namespace sysmod;

TEST_CASE("Boolean semiring tables") {
    auto S = make_boolean();
    const Elem one = *S.elem_by_name("1");
    CHECK(S.add(one, one) == one);
    CHECK(check_system(S).classification == Classification::PseudoTriple);
    CHECK(null_set(S).size() == 2);  // every element is a quasi-zero
}

TEST_CASE("supertropical Boolean tables") {
    auto S = make_supertrop_boolean();
    const Elem one = *S.elem_by_name("1");
    const Elem nu = *S.elem_by_name("nu");
    CHECK(S.add(one, one) == nu);
    CHECK(S.add(one, nu) == nu);
    CHECK(S.mul(nu, nu) == nu);
    CHECK(S.neg(nu) == nu);
    CHECK(at_least_system(check_system(S).classification));
}

TEST_CASE("symmetrization: twist product, switch map, quasi-zeros") {
    auto sb = symmetrize(make_boolean());
    const Elem a = *sb.elem_by_name("(1,0)");
    const Elem b = *sb.elem_by_name("(0,1)");
    CHECK(sb.ename(sb.mul(a, b)) == "(0,1)");
    CHECK(sb.neg(a) == b);  // switch
    std::set<std::string> qz;
    for (Elem x : quasi_zero_set(sb)) qz.insert(sb.ename(x));
    CHECK(qz == std::set<std::string>{"(0,0)", "(1,1)"});
    CHECK(sb.ename(sb.one) == "(1,0)");
}

TEST_CASE("embedding into the symmetrization is a structure map") {
    for (auto base : {make_boolean(), make_supertrop_boolean()}) {
        auto sym = symmetrize(base);
        INFO(base.name);
        std::vector<Elem> embed(base.size());
        for (Elem a = 0; a < base.size(); ++a)
            embed[a] = *sym.elem_by_name("(" + base.ename(a) + "," + base.ename(base.zero) + ")");
        for (Elem a = 0; a < base.size(); ++a) {
            for (Elem b = 0; b < base.size(); ++b) {
                CHECK(embed[base.add(a, b)] == sym.add(embed[a], embed[b]));
                CHECK(embed[base.mul(a, b)] == sym.mul(embed[a], embed[b]));
            }
            if (base.is_tangible(a)) CHECK(sym.is_tangible(embed[a]));
        }
        // tangibles of the symmetrization avoid its quasi-zeros
        for (Elem x : quasi_zero_set(sym)) CHECK_FALSE(sym.is_tangible(x));
    }
}

TEST_CASE("hyperfield audits") {
    CHECK(check_hyperfield(krasner_hyperfield()).all_passed());
    CHECK(check_hyperfield(sign_hyperfield()).all_passed());

    auto broken = sign_hyperfield();
    // collapse p + m to {0}: reversibility must fail with a witness
    broken.hyperadd[1 * 3 + 2] = {0};
    broken.hyperadd[2 * 3 + 1] = {0};
    auto audit = check_hyperfield(broken);
    CHECK_FALSE(audit.all_passed());
    const auto* rev = audit.find("reversibility");
    REQUIRE(rev);
    CHECK_FALSE(rev->pass);
    CHECK_FALSE(rev->witness.empty());
}

TEST_CASE("hypersystem carriers") {
    auto kr = make_hypersystem(krasner_hyperfield());
    CHECK(kr.size() == 3);
    CHECK(kr.elem_names == std::vector<std::string>{"{0}", "{1}", "{0,1}"});

    auto sg = make_hypersystem(sign_hyperfield());
    CHECK(sg.size() == 4);
    CHECK(sg.elem_names == std::vector<std::string>{"{0}", "{p}", "{m}", "{0,p,m}"});
    CHECK(at_least_system(check_system(sg).classification));

    // inclusion order: tangibles sit below the full set
    CHECK(sg.leq(*sg.elem_by_name("{p}"), *sg.elem_by_name("{0,p,m}")));
    CHECK_FALSE(sg.leq(*sg.elem_by_name("{p}"), *sg.elem_by_name("{m}")));
}

TEST_CASE("hypersystem negation partner sits inside null sums") {
    for (auto H : {krasner_hyperfield(), sign_hyperfield()}) {
        auto S = make_hypersystem(H);
        INFO(S.name);
        for (Elem a : S.tangibles())
            for (Elem b = 0; b < S.size(); ++b)
                if (S.leq(S.zero, S.add(a, b))) CHECK(S.leq(S.neg(a), b));
    }
}

TEST_CASE("max-plus supertropical arithmetic") {
    MaxPlusSystem st;
    const STElem t2{STElem::Tangible, 2};
    const STElem t3{STElem::Tangible, 3};
    const STElem t1{STElem::Tangible, 1};
    CHECK(st.add(t2, t2) == STElem{STElem::Ghost, 2});
    CHECK(st.add(t2, t3) == t3);
    CHECK(st.mul(t1, t2) == t3);
    CHECK(st.leq(t2, STElem{STElem::Ghost, 2}));
    CHECK(st.leq(t2, STElem{STElem::Ghost, 5}));
    CHECK_FALSE(st.leq(t3, t2));
    CHECK_FALSE(st.leq(STElem{STElem::Ghost, 2}, t2));

    for (const auto& c : check_maxplus_window(st, -8, 8)) {
        INFO(c.axiom);
        CHECK(c.pass);
    }

    CHECK(st.ename(st.zero()) == "z");
    CHECK(st.ename(t3) == "t3");
    CHECK(MaxPlusSystem::parse("g-2") == STElem{STElem::Ghost, -2});
    CHECK_THROWS_AS(MaxPlusSystem::parse("x1"), std::invalid_argument);
    CHECK_THROWS_AS(st.mul(STElem{STElem::Tangible, int64_t(1) << 61},
                           STElem{STElem::Tangible, int64_t(1) << 61}),
                    BoundError);
}

TEST_CASE("registry lookups") {
    CHECK(builtin_systems().size() == 6);
    CHECK(find_system("supertrop-B"));
    CHECK(find_system("sym-supertrop-B"));
    CHECK_FALSE(find_system("nope"));
    CHECK(builtin_system_instances().size() == 5);  // bool is only a pseudo-system
}
