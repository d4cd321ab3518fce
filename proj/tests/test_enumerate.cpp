#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sysmod/enumerate.hpp"
#include "sysmod/registry.hpp"

using namespace sysmod;

namespace {

/// Brute-force oracle: checks the structure-map conditions directly on a
/// complete table, independent of the pruned search.
bool oracle_in_class(const SystemicModule& M, const SystemicModule& N, const std::vector<Elem>& tab,
                     MapClass cls) {
    if (tab[M.zero] != N.zero) return false;
    for (Elem x = 0; x < M.size(); ++x) {
        if (tab[M.neg(x)] != N.neg(tab[x])) return false;
        for (Elem s : M.scalars->tangibles())
            if (tab[M.act(s, x)] != N.act(s, tab[x])) return false;
        for (Elem y = 0; y < M.size(); ++y) {
            const Elem lhs = tab[M.add(x, y)];
            const Elem rhs = N.add(tab[x], tab[y]);
            if (cls == MapClass::Hom && lhs != rhs) return false;
            if (cls == MapClass::Preceq && !N.leq(lhs, rhs)) return false;
            if (cls == MapClass::Succeq && !N.leq(rhs, lhs)) return false;
            if (M.leq(x, y) && !N.leq(tab[x], tab[y])) return false;
        }
    }
    return true;
}

std::set<std::vector<Elem>> oracle_all(ModulePtr M, ModulePtr N, MapClass cls) {
    std::set<std::vector<Elem>> out;
    std::vector<Elem> tab(M->size(), 0);
    while (true) {
        if (oracle_in_class(*M, *N, tab, cls)) out.insert(tab);
        int i = 0;
        for (; i < M->size(); ++i) {
            if (++tab[i] < N->size()) break;
            tab[i] = 0;
        }
        if (i == M->size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("homomorphism enumeration matches the brute-force oracle") {
    SearchCtx ctx;
    auto st = free_module(find_system("supertrop-B"), 1);
    auto homs = all_maps(st, st, MapClass::Hom, ctx);

    std::set<std::vector<Elem>> got;
    for (const auto& f : homs) got.insert(f.tab);
    CHECK(got == oracle_all(st, st, MapClass::Hom));

    // exactly: identity, the quasi-zero map, the zero map
    std::set<std::vector<Elem>> expect = {
        identity_map(st).tab, quasi_zero_map(st).tab, zero_map(st, st).tab};
    CHECK(got == expect);
}

TEST_CASE("preceq and succeq enumerations match the oracle") {
    SearchCtx ctx;
    for (const char* sys : {"supertrop-B", "sym-bool"}) {
        auto M = free_module(find_system(sys), 1);
        for (MapClass cls : {MapClass::Preceq, MapClass::Succeq, MapClass::Hom}) {
            auto maps = all_maps(M, M, cls, ctx);
            std::set<std::vector<Elem>> got;
            for (const auto& f : maps) got.insert(f.tab);
            INFO(sys);
            CHECK(got == oracle_all(M, M, cls));
        }
        // equality in the additive condition implies both inequalities
        CHECK(all_maps(M, M, MapClass::Preceq, ctx).size() >=
              all_maps(M, M, MapClass::Hom, ctx).size());
    }
}

TEST_CASE("enumeration across different modules") {
    SearchCtx ctx;
    auto S = find_system("supertrop-B");
    auto M = free_module(S, 1);
    auto nul = null_submodule(M);
    auto named = std::make_shared<SystemicModule>(*nul.module);
    named->name = "null1";
    ModulePtr N = named;

    CHECK(all_maps(M, N, MapClass::Hom, ctx).size() == oracle_all(M, N, MapClass::Hom).size());
    CHECK(all_maps(N, M, MapClass::Preceq, ctx).size() ==
          oracle_all(N, M, MapClass::Preceq).size());
}

TEST_CASE("maps come out in canonical table order") {
    SearchCtx ctx;
    auto st = free_module(find_system("supertrop-B"), 1);
    auto maps = all_maps(st, st, MapClass::Preceq, ctx);
    for (size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1].tab < maps[i].tab);
}

TEST_CASE("pointwise constraints, limits, and injectivity") {
    SearchCtx ctx;
    auto st = free_module(find_system("supertrop-B"), 1);

    EnumOptions opt;
    opt.cls = MapClass::Hom;
    opt.pointwise = [&st](Elem x, Elem fx) { return st->leq(x, fx); };
    auto dominated = enumerate_maps(st, st, opt, ctx);
    CHECK(dominated.complete);
    for (const auto& f : dominated.maps)
        for (Elem x = 0; x < st->size(); ++x) CHECK(st->leq(x, f.tab[x]));

    EnumOptions first;
    first.cls = MapClass::Hom;
    first.limit = 1;
    auto one = enumerate_maps(st, st, first, ctx);
    CHECK(one.maps.size() == 1);

    EnumOptions inj;
    inj.cls = MapClass::Hom;
    inj.require_injective = true;
    auto bijections = enumerate_maps(st, st, inj, ctx);
    CHECK(bijections.complete);
    CHECK(bijections.maps.size() == 1);  // only the identity
}

TEST_CASE("budget exhaustion reports incomplete enumeration") {
    Budget tiny(3);
    SearchCtx ctx{&tiny, Exec::Serial};
    auto F2 = free_module(find_system("sym-bool"), 2);
    EnumOptions opt;
    opt.cls = MapClass::Preceq;
    auto r = enumerate_maps(F2, F2, opt, ctx);
    CHECK_FALSE(r.complete);
    CHECK(r.budget_exhausted);
}

TEST_CASE("serial and parallel enumeration agree") {
    auto sb = free_module(find_system("sym-bool"), 1);
    SearchCtx serial{nullptr, Exec::Serial};
    SearchCtx parallel{nullptr, Exec::Parallel};
    for (MapClass cls : {MapClass::Hom, MapClass::Preceq, MapClass::Succeq}) {
        auto a = all_maps(sb, sb, cls, serial);
        auto b = all_maps(sb, sb, cls, parallel);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].tab == b[i].tab);
    }
}
