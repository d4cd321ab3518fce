#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sysmod/registry.hpp"
#include "sysmod/split.hpp"

using namespace sysmod;

namespace {

ModulePtr stb() { return free_module(find_system("supertrop-B"), 1); }

MapTable projection_first(ModulePtr F2, ModulePtr M) {
    MapTable pi{F2, M, {}, "proj1"};
    for (Elem v = 0; v < F2->size(); ++v) pi.tab.push_back(v / M->size());
    return pi;
}

}  // namespace

TEST_CASE("the canonical projection splits via the injection") {
    SearchCtx ctx;
    auto M = stb();
    auto F2 = free_module(find_system("supertrop-B"), 2);
    auto pi = projection_first(F2, M);
    auto found = find_splitting(pi, SplitKind::Split, ctx);
    REQUIRE(found.status == SearchStatus::Found);
    CHECK(verify_split_certificate(*found.cert));
    for (Elem b = 0; b < M->size(); ++b) CHECK(pi.tab[found.cert->nu.tab[b]] == b);
}

TEST_CASE("the zero map admits no preceq-splitting") {
    SearchCtx ctx;
    auto M = stb();
    auto z = zero_map(M, M);
    auto res = find_splitting(z, SplitKind::Preceq, ctx);
    CHECK(res.status == SearchStatus::None);
}

TEST_CASE("identity splits itself under every flavor") {
    SearchCtx ctx;
    auto M = stb();
    auto id = identity_map(M);
    for (SplitKind k : {SplitKind::Split, SplitKind::Preceq, SplitKind::H, SplitKind::Succeq,
                        SplitKind::HSucceq}) {
        auto res = find_splitting(id, k, ctx);
        INFO(split_kind_name(k));
        CHECK(res.status == SearchStatus::Found);
        CHECK(verify_split_certificate(*res.cert));
    }
}

TEST_CASE("splitting preconditions are enforced") {
    SearchCtx ctx;
    auto M = stb();
    auto z = zero_map(M, M);
    CHECK_THROWS_AS(find_splitting(z, SplitKind::Split, ctx), std::invalid_argument);
}

TEST_CASE("idempotency predicates") {
    auto M = stb();
    CHECK(is_preceq_idempotent_map(identity_map(M)));
    CHECK(is_T_idempotent_map(identity_map(M)));
    CHECK(is_preceq_idempotent_map(quasi_zero_map(M)));

    // any section-projection composite from a found splitting
    SearchCtx ctx;
    auto F2 = free_module(find_system("supertrop-B"), 2);
    auto pi = projection_first(F2, M);
    auto found = find_splitting(pi, SplitKind::Preceq, ctx);
    REQUIRE(found.status == SearchStatus::Found);
    CHECK(is_preceq_idempotent_map(compose(found.cert->nu, pi)));
}

TEST_CASE("decomposition for the identity splits off the quasi-zeros") {
    auto M = stb();
    auto id = identity_map(M);
    SplitCertificate cert{id, id, SplitKind::H, {}};
    for (Elem b = 0; b < M->size(); ++b) cert.evidence.emplace_back(b, b);
    auto [one, two] = decompose_split(id, cert);

    REQUIRE(one.parts.size() == 2);
    std::set<std::string> comp;
    for (Elem x : one.parts[1].carrier) comp.insert(M->ename(x));
    CHECK(comp == std::set<std::string>{"0", "nu"});
    CHECK(verify_direct_sum(one).empty());
    CHECK(verify_direct_sum(two).empty());
    CHECK(two.parts[1].carrier == std::vector<Elem>{M->zero, *M->elem_by_name("nu")});
}

TEST_CASE("decomposition of the free projection embeds the complement") {
    SearchCtx ctx;
    auto M = stb();
    auto F2 = free_module(find_system("supertrop-B"), 2);
    auto pi = projection_first(F2, M);
    auto found = find_splitting(pi, SplitKind::H, ctx);
    REQUIRE(found.status == SearchStatus::Found);
    auto [one, two] = decompose_split(pi, *found.cert);
    CHECK(verify_direct_sum(one).empty());
    CHECK(verify_direct_sum(two).empty());
    // the recombination bound holds pointwise by construction
    const auto& p2 = one.parts[1];
    for (Elem b = 0; b < F2->size(); ++b) {
        const Elem back = p2.pi[b];
        CHECK(F2->leq(b, F2->add(found.cert->nu.tab[pi.tab[b]], back)));
    }
}

TEST_CASE("constrained enumeration reproduces the splitting search") {
    SearchCtx ctx;
    auto M = stb();
    auto F2 = free_module(find_system("supertrop-B"), 2);
    auto pi = projection_first(F2, M);

    auto found = find_splitting(pi, SplitKind::H, ctx);
    REQUIRE(found.status == SearchStatus::Found);

    EnumOptions opt;
    opt.cls = MapClass::Hom;
    opt.pointwise = [&pi, &M](Elem x, Elem nux) { return M->leq(x, pi.tab[nux]); };
    auto all = enumerate_maps(M, F2, opt, ctx);
    REQUIRE(all.complete);
    REQUIRE(all.found());
    // the splitting search returns a member of the constrained family
    bool member = false;
    for (const auto& nu : all.maps)
        if (nu.tab == found.cert->nu.tab) member = true;
    CHECK(member);
    // and every member satisfies the comparison the certificate asserts
    for (const auto& nu : all.maps)
        for (Elem b = 0; b < M->size(); ++b) CHECK(M->leq(b, pi.tab[nu.tab[b]]));
}

TEST_CASE("stale certificates are rejected") {
    auto M = stb();
    auto id = identity_map(M);
    SplitCertificate cert{id, quasi_zero_map(M), SplitKind::Preceq, {}};
    // nu = quasi-zero map: pi nu = quasi-zero map dominates the identity
    CHECK(verify_split_certificate(cert));
    SplitCertificate broken{id, zero_map(M, M), SplitKind::Preceq, {}};
    CHECK_FALSE(verify_split_certificate(broken));
    CHECK_THROWS_AS(decompose_split(id, broken), std::invalid_argument);
}
