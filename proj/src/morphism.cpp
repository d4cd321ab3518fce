#include "sysmod/morphism.hpp"

#include <algorithm>
#include <set>

namespace sysmod {

MapTable identity_map(ModulePtr M) {
    MapTable f{M, M, std::vector<Elem>(M->size()), "id"};
    for (Elem x = 0; x < M->size(); ++x) f.tab[x] = x;
    return f;
}

MapTable zero_map(ModulePtr M, ModulePtr N) {
    return {M, N, std::vector<Elem>(M->size(), N->zero), "zero"};
}

MapTable quasi_zero_map(ModulePtr M) {
    MapTable f{M, M, std::vector<Elem>(M->size()), "qz"};
    for (Elem x = 0; x < M->size(); ++x) f.tab[x] = M->quasi_zero(x);
    return f;
}

MapTable compose(const MapTable& g, const MapTable& f) {
    MapTable h{f.src, g.dst, std::vector<Elem>(f.src->size()), g.name + "*" + f.name};
    for (Elem x = 0; x < f.src->size(); ++x) h.tab[x] = g.tab[f.tab[x]];
    return h;
}

MapTable map_add(const MapTable& f, const MapTable& g) {
    MapTable h{f.src, f.dst, std::vector<Elem>(f.src->size()), f.name + "+" + g.name};
    for (Elem x = 0; x < f.src->size(); ++x) h.tab[x] = f.dst->add(f.tab[x], g.tab[x]);
    return h;
}

MapTable one_minus(const MapTable& f) {
    MapTable h{f.src, f.src, std::vector<Elem>(f.src->size()), "1-" + f.name};
    for (Elem x = 0; x < f.src->size(); ++x) h.tab[x] = f.src->add(x, f.src->neg(f.tab[x]));
    return h;
}

std::string map_string(const MapTable& f) {
    std::vector<std::string> parts;
    for (Elem x = 0; x < f.src->size(); ++x)
        parts.push_back(f.src->ename(x) + "->" + f.dst->ename(f.tab[x]));
    return "{" + join_names(parts, ",") + "}";
}

bool MorphClass::in_class(MapClass c) const {
    switch (c) {
        case MapClass::Any: return true;
        case MapClass::Preceq: return preceq();
        case MapClass::Succeq: return succeq();
        case MapClass::Hom: return hom();
    }
    return false;
}

std::vector<std::string> MorphClass::labels() const {
    std::vector<std::string> out;
    if (hom()) out.push_back("homomorphism");
    if (preceq()) out.push_back("preceq-morphism");
    if (succeq()) out.push_back("succeq-morphism");
    if (out.empty()) out.push_back("none");
    return out;
}

MorphClass classify_map(const MapTable& f) {
    const SystemicModule& M = *f.src;
    const SystemicModule& N = *f.dst;
    MorphClass c;
    c.zero_ok = f.tab[M.zero] == N.zero;
    c.neg_ok = true;
    c.act_ok = true;
    c.monotone = true;
    c.add_eq = c.add_sub = c.add_super = true;
    c.is_null = true;
    c.tangible_preserving = true;

    for (Elem x = 0; x < M.size(); ++x) {
        if (N.neg(f.tab[x]) != f.tab[M.neg(x)]) c.neg_ok = false;
        if (!N.leq(N.zero, f.tab[x])) c.is_null = false;
        if (M.is_tangible(x) && !N.is_tangible(f.tab[x])) c.tangible_preserving = false;
        for (Elem s : M.scalars->tangibles())
            if (f.tab[M.act(s, x)] != N.act(s, f.tab[x])) c.act_ok = false;
        for (Elem y = 0; y < M.size(); ++y) {
            const Elem sum = f.tab[M.add(x, y)];
            const Elem parts = N.add(f.tab[x], f.tab[y]);
            if (sum != parts) c.add_eq = false;
            if (!N.leq(sum, parts)) c.add_sub = false;
            if (!N.leq(parts, sum)) c.add_super = false;
            if (M.leq(x, y) && !N.leq(f.tab[x], f.tab[y])) c.monotone = false;
        }
    }
    return c;
}

PairSet congruence_kernel(const MapTable& f) {
    PairSet out;
    for (Elem x = 0; x < f.src->size(); ++x)
        for (Elem y = 0; y < f.src->size(); ++y)
            if (f.tab[x] == f.tab[y]) out.emplace_back(x, y);
    return out;
}

PairSet null_congruence_kernel(const MapTable& f) {
    PairSet out;
    for (Elem x = 0; x < f.src->size(); ++x)
        for (Elem y = 0; y < f.src->size(); ++y)
            if (f.tab[x] == f.tab[y] && f.dst->leq(f.dst->zero, f.tab[x])) out.emplace_back(x, y);
    return out;
}

bool congruence_ok(const SystemicModule& M, const PairSet& pairs, bool require_full_diagonal) {
    std::set<std::pair<Elem, Elem>> in(pairs.begin(), pairs.end());
    if (require_full_diagonal) {
        for (Elem a = 0; a < M.size(); ++a)
            if (!in.count({a, a})) return false;
    }
    for (auto [a, b] : pairs) {
        if (!in.count({b, a})) return false;
        for (auto [c, d] : pairs)
            if (b == c && !in.count({a, d})) return false;
    }
    for (auto [a, b] : pairs) {
        for (auto [c, d] : pairs)
            if (!in.count({M.add(a, c), M.add(b, d)})) return false;
        for (Elem s : M.scalars->tangibles())
            if (!in.count({M.act(s, a), M.act(s, b)})) return false;
        if (!in.count({M.neg(a), M.neg(b)})) return false;
    }
    return true;
}

std::vector<Elem> null_module_kernel_masked(ModulePtr src, const std::vector<Elem>& tab,
                                            const std::vector<uint8_t>& dst_null_mask) {
    const SystemicModule& M = *src;
    std::vector<Elem> seed;
    for (Elem x = 0; x < M.size(); ++x) {
        bool cyclic_null = true;
        for (Elem y : submodule_closure(M, {x}))
            if (!dst_null_mask[tab[y]]) {
                cyclic_null = false;
                break;
            }
        if (cyclic_null) seed.push_back(x);
    }
    return submodule_closure(M, seed);
}

std::vector<Elem> null_module_kernel(const MapTable& f) {
    std::vector<uint8_t> mask(f.dst->size(), 0);
    for (Elem b = 0; b < f.dst->size(); ++b) mask[b] = f.dst->leq(f.dst->zero, b) ? 1 : 0;
    return null_module_kernel_masked(f.src, f.tab, mask);
}

std::vector<Elem> image_preceq(const MapTable& f) {
    std::vector<Elem> out;
    for (Elem b = 0; b < f.dst->size(); ++b) {
        for (Elem a = 0; a < f.src->size(); ++a)
            if (f.dst->leq(b, f.tab[a])) {
                out.push_back(b);
                break;
            }
    }
    return out;
}

std::vector<Elem> image_succeq(const MapTable& f) {
    std::vector<Elem> out;
    for (Elem b = 0; b < f.dst->size(); ++b) {
        for (Elem a = 0; a < f.src->size(); ++a)
            if (f.dst->leq(f.tab[a], b)) {
                out.push_back(b);
                break;
            }
    }
    return out;
}

bool is_onto(const MapTable& f) {
    std::vector<uint8_t> hit(f.dst->size(), 0);
    for (Elem x = 0; x < f.src->size(); ++x) hit[f.tab[x]] = 1;
    return std::all_of(hit.begin(), hit.end(), [](uint8_t h) { return h != 0; });
}

bool is_preceq_onto(const MapTable& f) {
    return static_cast<int>(image_preceq(f).size()) == f.dst->size();
}

bool is_succeq_onto(const MapTable& f) {
    return static_cast<int>(image_succeq(f).size()) == f.dst->size();
}

bool is_h_onto(const MapTable& f) { return classify_map(f).hom() && is_preceq_onto(f); }

bool is_null_map(const MapTable& f) {
    for (Elem x = 0; x < f.src->size(); ++x)
        if (!f.dst->leq(f.dst->zero, f.tab[x])) return false;
    return true;
}

bool is_null_monic(const MapTable& f) {
    const auto ker = null_module_kernel(f);
    for (Elem x : ker)
        if (!f.src->leq(f.src->zero, x)) return false;
    return true;
}

bool is_N_monic(const MapTable& f) {
    std::vector<uint8_t> hit(f.dst->size(), 0);
    for (Elem x = 0; x < f.src->size(); ++x) {
        if (hit[f.tab[x]]) return false;
        hit[f.tab[x]] = 1;
    }
    return true;
}

bool is_quasi_isomorphism(const MapTable& f, QuasiKind kind) {
    const MorphClass c = classify_map(f);
    if (kind == QuasiKind::N) return c.hom() && is_onto(f) && is_N_monic(f);
    return c.preceq() && is_preceq_onto(f) && is_null_monic(f);
}

bool image_tangibles_generate(const MapTable& f) {
    std::vector<Elem> gens;
    for (Elem x : f.src->tangibles())
        if (f.dst->is_tangible(f.tab[x])) gens.push_back(f.tab[x]);
    return generates(gens, *f.dst);
}

std::vector<Elem> generated_cover_image(const SystemicModule& M, const std::vector<Elem>& gens) {
    std::set<Elem> reach = {M.zero};
    for (Elem g : gens) {
        std::set<Elem> next;
        for (Elem r : reach)
            for (Elem s = 0; s < M.scalars->size(); ++s) next.insert(M.add(r, M.act(s, g)));
        reach = std::move(next);
    }
    return {reach.begin(), reach.end()};
}

bool preceq_generates(const std::vector<Elem>& gens, const SystemicModule& M) {
    const auto image = generated_cover_image(M, gens);
    for (Elem b = 0; b < M.size(); ++b) {
        bool covered = false;
        for (Elem r : image)
            if (M.leq(b, r)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool generates(const std::vector<Elem>& gens, const SystemicModule& M) {
    return static_cast<int>(generated_cover_image(M, gens).size()) == M.size();
}

}  // namespace sysmod
