#include "sysmod/schanuel.hpp"

#include <algorithm>
#include <set>

namespace sysmod {

namespace {

bool is_null_elem(const SystemicModule& M, Elem x) { return M.leq(M.zero, x); }

std::string pair_name(const SystemicModule& M, Elem x, Elem y) {
    return "(" + M.ename(x) + "|" + M.ename(y) + ")";
}

}  // namespace

Pullback make_pullback(const MapTable& f1, const MapTable& f2, PullbackMode mode) {
    if (!(*f1.dst == *f2.dst)) throw std::invalid_argument("pullback: targets differ");
    if (mode == PullbackMode::Preceq) {
        if (!classify_map(f1).hom() || !classify_map(f2).hom())
            throw std::invalid_argument("pullback: preceq mode needs homomorphism legs");
    }
    const SystemicModule& P1 = *f1.src;
    const SystemicModule& P2 = *f2.src;
    const SystemicModule& M = *f1.dst;

    auto sum = direct_sum({f1.src, f2.src});
    std::vector<Elem> carrier;
    for (Elem b1 = 0; b1 < P1.size(); ++b1)
        for (Elem b2 = 0; b2 < P2.size(); ++b2) {
            const bool in = mode == PullbackMode::Strict ? f1.tab[b1] == f2.tab[b2]
                                                         : M.leq(f1.tab[b1], f2.tab[b2]);
            if (in) carrier.push_back(b1 * P2.size() + b2);
        }
    if (!carrier_closed(*sum, carrier))
        throw std::domain_error("pullback: carrier not operation-closed");
    auto sub = submodule(sum, carrier, mode == PullbackMode::Strict ? "pullback" : "pullback<=");

    Pullback out;
    out.P = sub.module;
    out.sum = sum;
    out.embed = sub.embed;
    out.mode = mode;
    out.pi1 = MapTable{sub.module, f1.src, {}, "pi1"};
    out.pi2 = MapTable{sub.module, f2.src, {}, "pi2"};
    for (Elem p = 0; p < sub.module->size(); ++p) {
        const Elem s = sub.embed[p];
        out.pi1.tab.push_back(s / P2.size());
        out.pi2.tab.push_back(s % P2.size());
    }
    return out;
}

bool module_surpass_is_null_based(const SystemicModule& M) {
    Rel rel(M.size());
    const auto nulls = module_null_set(M);
    for (Elem b = 0; b < M.size(); ++b)
        for (Elem c : nulls) rel.set(b, M.add(b, c));
    return rel == M.surpass;
}

namespace {

/// Pair sets over a module, with componentwise structure helpers.
struct Pairs {
    ModulePtr M;
    std::vector<std::pair<Elem, Elem>> list;
    std::set<std::pair<Elem, Elem>> index;

    void push(Elem x, Elem y) {
        if (index.insert({x, y}).second) list.emplace_back(x, y);
    }
    bool has(Elem x, Elem y) const { return index.count({x, y}) != 0; }
    bool closed() const {
        const SystemicModule& m = *M;
        if (!has(m.zero, m.zero)) return false;
        for (auto [x, y] : list) {
            if (!has(m.neg(x), m.neg(y))) return false;
            for (Elem s = 0; s < m.scalars->size(); ++s)
                if (!has(m.act(s, x), m.act(s, y))) return false;
            for (auto [u, v] : list)
                if (!has(m.add(x, u), m.add(y, v))) return false;
        }
        return true;
    }
    bool null_pair(size_t i) const {
        return is_null_elem(*M, list[i].first) && is_null_elem(*M, list[i].second);
    }
};

Pairs kernel_pairs(const MapTable& f, bool restrict_null) {
    Pairs out;
    out.M = f.src;
    for (Elem x = 0; x < f.src->size(); ++x)
        for (Elem y = 0; y < f.src->size(); ++y)
            if (f.tab[x] == f.tab[y] &&
                (!restrict_null || is_null_elem(*f.dst, f.tab[x])))
                out.push(x, y);
    return out;
}

/// The induced componentwise map between kernel pair sets: lands, onto,
/// and structure-map conditions evaluated against the ambient
/// componentwise operations.
struct InducedReport {
    bool lands = true, onto = true, hom = true, preceq = true, monotone = true;
    std::string witness;
};

InducedReport check_induced(const Pairs& src, const Pairs& dst, const MapTable& carry) {
    InducedReport rep;
    const SystemicModule& m = *src.M;
    const SystemicModule& n = *dst.M;
    auto img = [&](const std::pair<Elem, Elem>& p) {
        return std::make_pair(carry.tab[p.first], carry.tab[p.second]);
    };
    for (const auto& p : src.list) {
        auto q = img(p);
        if (!dst.has(q.first, q.second)) {
            rep.lands = false;
            rep.witness = pair_name(m, p.first, p.second);
        }
    }
    std::set<std::pair<Elem, Elem>> hit;
    for (const auto& p : src.list) hit.insert(img(p));
    for (const auto& q : dst.list)
        if (!hit.count(q)) {
            rep.onto = false;
            rep.witness = pair_name(n, q.first, q.second);
        }
    for (const auto& p : src.list)
        for (const auto& q : src.list) {
            const std::pair<Elem, Elem> sum{m.add(p.first, q.first), m.add(p.second, q.second)};
            if (!src.has(sum.first, sum.second)) continue;
            auto is = img(sum);
            auto ip = img(p);
            auto iq = img(q);
            const std::pair<Elem, Elem> want{n.add(ip.first, iq.first), n.add(ip.second, iq.second)};
            if (is != want) rep.hom = false;
            if (!n.leq(is.first, want.first) || !n.leq(is.second, want.second)) rep.preceq = false;
            if (m.leq(p.first, q.first) && m.leq(p.second, q.second)) {
                if (!n.leq(ip.first, iq.first) || !n.leq(ip.second, iq.second))
                    rep.monotone = false;
            }
        }
    return rep;
}

Verdict status_verdict(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return Verdict::Pass;
        case SearchStatus::None: return Verdict::Fail;
        case SearchStatus::Inconclusive: return Verdict::Inconclusive;
    }
    return Verdict::Fail;
}

}  // namespace

VerificationReport verify_trsh(const MapTable& f1, const MapTable& f2, const ModuleScope& scope,
                               const SearchCtx& ctx) {
    VerificationReport rep;
    rep.suite = "trsh";
    rep.param("f1", f1.src->name + "->" + f1.dst->name);
    rep.param("f2", f2.src->name + "->" + f2.dst->name);

    if (!classify_map(f1).preceq() || !classify_map(f2).preceq() || !is_onto(f1) || !is_onto(f2) ||
        !(*f1.dst == *f2.dst)) {
        rep.add("hypothesis", "trSh", Verdict::Skipped, "needs onto preceq-morphisms into one target");
        return rep;
    }

    Pullback pb;
    try {
        pb = make_pullback(f1, f2, PullbackMode::Strict);
    } catch (const std::domain_error& e) {
        rep.add("carrier-closed", "trSh", Verdict::Fail, e.what());
        return rep;
    }
    rep.add("carrier-closed", "trSh", Verdict::Pass);
    const auto& P = *pb.P;

    {  // (i)
        const bool onto_hom = classify_map(pb.pi1).hom() && is_onto(pb.pi1);
        Pairs k1 = kernel_pairs(pb.pi1, false);
        Pairs k2 = kernel_pairs(f2, false);
        auto ind = check_induced(k1, k2, pb.pi2);
        const bool ok = onto_hom && ind.lands && ind.onto && ind.hom && k1.closed();
        rep.add("i", "trSh(i)", ok ? Verdict::Pass : Verdict::Fail, ok ? "" : ind.witness);
    }
    {  // (ii)
        bool ok = true;
        Elem bad = -1;
        for (Elem p = 0; p < P.size(); ++p)
            if (f1.tab[pb.pi1.tab[p]] != f2.tab[pb.pi2.tab[p]]) {
                ok = false;
                bad = p;
                break;
            }
        rep.add("ii", "trSh(ii)", ok ? Verdict::Pass : Verdict::Fail,
                ok ? "" : P.ename(bad));
    }
    {  // (iii)
        Pairs k1 = kernel_pairs(pb.pi1, true);
        Pairs k2 = kernel_pairs(f2, true);
        auto ind = check_induced(k1, k2, pb.pi2);
        bool ok = ind.lands && ind.onto && ind.preceq && ind.monotone;
        std::string note = ind.witness;
        // null-monic via the preimage criterion
        for (const auto& p : k1.list) {
            const bool img_null = is_null_elem(*f2.src, pb.pi2.tab[p.first]) &&
                                  is_null_elem(*f2.src, pb.pi2.tab[p.second]);
            const bool src_null = is_null_elem(P, p.first) && is_null_elem(P, p.second);
            if (img_null && !src_null) {
                ok = false;
                note = "null preimage escapes at " + pair_name(P, p.first, p.second);
                break;
            }
        }
        rep.add("iii", "trSh(iii)", ok ? Verdict::Pass : Verdict::Fail, note);
    }
    {  // (iv)
        if (!is_null_monic(f1)) {
            rep.add("iv", "trSh(iv)", Verdict::Skipped, "f1 not null-monic");
        } else {
            MapTable f1pi1 = compose(f1, pb.pi1);
            Pairs k14 = kernel_pairs(f1pi1, true);
            Pairs k2 = kernel_pairs(f2, true);
            auto ind = check_induced(k14, k2, pb.pi2);
            bool ok = ind.lands && ind.onto && ind.preceq && ind.monotone;
            std::string note = ind.witness;
            for (const auto& p : k14.list) {
                const bool img_null = is_null_elem(*f2.src, pb.pi2.tab[p.first]) &&
                                      is_null_elem(*f2.src, pb.pi2.tab[p.second]);
                const bool src_null = is_null_elem(P, p.first) && is_null_elem(P, p.second);
                if (img_null && !src_null) {
                    ok = false;
                    note = "null preimage escapes at " + pair_name(P, p.first, p.second);
                    break;
                }
            }
            rep.add("iv", "trSh(iv)", ok ? Verdict::Pass : Verdict::Fail, note);
        }
    }
    {  // (v)
        auto proj = is_projective(f1.src, ProjKind::Plain, scope, ctx);
        if (proj.verdict != VerdictKind::True) {
            rep.add("v", "trSh(v)", Verdict::Skipped,
                    proj.verdict == VerdictKind::False ? "P1 not projective within scope"
                                                       : "P1 projectivity inconclusive");
        } else {
            auto split = find_splitting(pb.pi1, SplitKind::Split, ctx);
            rep.add("v", "trSh(v)", status_verdict(split.status),
                    split.status == SearchStatus::Found ? "" : "projection admits no exact section");
        }
    }
    {  // (vi)
        auto proj = is_projective(f1.src, ProjKind::Preceq, scope, ctx);
        if (proj.verdict != VerdictKind::True) {
            rep.add("vi", "trSh(vi)", Verdict::Skipped,
                    proj.verdict == VerdictKind::False ? "P1 not preceq-projective within scope"
                                                       : "P1 preceq-projectivity inconclusive");
        } else {
            auto split = find_splitting(pb.pi1, SplitKind::Preceq, ctx);
            if (split.status != SearchStatus::Found) {
                rep.add("vi", "trSh(vi)", status_verdict(split.status),
                        "projection admits no preceq-section");
            } else {
                try {
                    auto certs = decompose_split(pb.pi1, *split.cert);
                    (void)certs;
                    rep.add("vi", "trSh(vi)", Verdict::Pass);
                } catch (const std::exception& e) {
                    rep.add("vi", "trSh(vi)", Verdict::Fail, e.what());
                }
            }
        }
    }
    return rep;
}

VerificationReport verify_trsh118(const MapTable& f1, const MapTable& f2,
                                  const ModuleScope& scope, const SearchCtx& ctx) {
    VerificationReport rep;
    rep.suite = "trsh118";
    rep.param("f1", f1.src->name + "->" + f1.dst->name);
    rep.param("f2", f2.src->name + "->" + f2.dst->name);

    if (!classify_map(f1).hom() || !classify_map(f2).hom() || !is_onto(f2) ||
        !(*f1.dst == *f2.dst)) {
        rep.add("hypothesis", "trSh118", Verdict::Skipped,
                "needs homomorphisms with the second leg onto");
        return rep;
    }
    Pullback pb;
    try {
        pb = make_pullback(f1, f2, PullbackMode::Strict);
    } catch (const std::domain_error& e) {
        rep.add("carrier-closed", "trSh118", Verdict::Fail, e.what());
        return rep;
    }
    const auto& P = *pb.P;
    const SystemicModule& P2 = *f2.src;

    rep.add("i", "trSh118(i)", is_onto(pb.pi1) ? Verdict::Pass : Verdict::Fail,
            is_onto(pb.pi1) ? "" : "restricted projection misses elements");
    {  // (ii) difference map into the null-module kernel of f2
        Pairs k1 = kernel_pairs(pb.pi1, false);
        const auto kerf2 = null_module_kernel(f2);
        std::set<Elem> kset(kerf2.begin(), kerf2.end());
        bool ok = true;
        std::string note;
        for (const auto& p : k1.list) {
            const Elem d = P2.add(pb.pi2.tab[p.first], P2.neg(pb.pi2.tab[p.second]));
            if (!kset.count(d)) {
                ok = false;
                note = "difference escapes at " + pair_name(P, p.first, p.second);
                break;
            }
        }
        // additivity of the difference map against the pair structure
        for (const auto& p : k1.list) {
            if (!ok) break;
            for (const auto& q : k1.list) {
                const std::pair<Elem, Elem> sum{P.add(p.first, q.first), P.add(p.second, q.second)};
                if (!k1.has(sum.first, sum.second)) continue;
                const Elem ds = P2.add(pb.pi2.tab[sum.first], P2.neg(pb.pi2.tab[sum.second]));
                const Elem dp = P2.add(pb.pi2.tab[p.first], P2.neg(pb.pi2.tab[p.second]));
                const Elem dq = P2.add(pb.pi2.tab[q.first], P2.neg(pb.pi2.tab[q.second]));
                if (ds != P2.add(dp, dq)) {
                    ok = false;
                    note = "difference map not additive";
                    break;
                }
            }
        }
        rep.add("ii", "trSh118(ii)", ok ? Verdict::Pass : Verdict::Fail, note);
    }
    {  // (iii) kernel characterization
        const auto lhs = null_module_kernel(pb.pi1);
        const auto kerf2 = null_module_kernel(f2);
        std::set<Elem> kset(kerf2.begin(), kerf2.end());
        std::vector<Elem> rhs;
        for (Elem p = 0; p < P.size(); ++p)
            if (is_null_elem(*f1.src, pb.pi1.tab[p]) && kset.count(pb.pi2.tab[p]))
                rhs.push_back(p);
        rep.add("iii", "trSh118(iii)", lhs == rhs ? Verdict::Pass : Verdict::Fail,
                lhs == rhs ? "" : "kernel characterization mismatch");
    }
    {  // (iv)
        bool ok = true;
        for (Elem p = 0; p < P.size(); ++p)
            if (f1.tab[pb.pi1.tab[p]] != f2.tab[pb.pi2.tab[p]]) ok = false;
        rep.add("iv", "trSh118(iv)", ok ? Verdict::Pass : Verdict::Fail,
                ok ? "" : "composites differ");
    }
    {  // (v)
        auto proj = is_projective(f1.src, ProjKind::H, scope, ctx);
        if (proj.verdict != VerdictKind::True) {
            rep.add("v", "trSh118(v)", Verdict::Skipped, "P1 not h-projective");
        } else {
            auto split = find_splitting(pb.pi1, SplitKind::H, ctx);
            if (split.status != SearchStatus::Found) {
                rep.add("v", "trSh118(v)", status_verdict(split.status),
                        "projection admits no h-section");
            } else {
                try {
                    auto certs = decompose_split(pb.pi1, *split.cert);
                    (void)certs;
                    rep.add("v", "trSh118(v)", Verdict::Pass);
                } catch (const std::exception& e) {
                    rep.add("v", "trSh118(v)", Verdict::Fail, e.what());
                }
            }
        }
    }
    return rep;
}

VerificationReport verify_trsh11(const MapTable& f1, const MapTable& f2, const SearchCtx& ctx) {
    (void)ctx;
    VerificationReport rep;
    rep.suite = "trsh11";
    rep.param("f1", f1.src->name + "->" + f1.dst->name);
    rep.param("f2", f2.src->name + "->" + f2.dst->name);

    if (!classify_map(f1).hom() || !classify_map(f2).hom() || !is_preceq_onto(f2) ||
        !(*f1.dst == *f2.dst)) {
        rep.add("hypothesis", "trSh11", Verdict::Skipped,
                "needs homomorphisms with the second leg preceq-onto");
        return rep;
    }
    if (!module_surpass_is_null_based(*f1.src) || !module_surpass_is_null_based(*f2.src) ||
        !module_surpass_is_null_based(*f1.dst)) {
        rep.add("hypothesis", "trSh11", Verdict::Skipped, "surpassing relation is not null-based");
        return rep;
    }
    // the difference-set argument identifies null elements of the target
    // with quasi-zeros; the lemma presumes they coincide
    if (module_null_set(*f1.dst) != module_quasi_zeros(*f1.dst)) {
        rep.add("hypothesis", "trSh11", Verdict::Skipped,
                "target null set exceeds its quasi-zeros");
        return rep;
    }

    Pullback pb;
    try {
        pb = make_pullback(f1, f2, PullbackMode::Preceq);
    } catch (const std::domain_error& e) {
        rep.add("carrier-closed", "trSh11", Verdict::Fail, e.what());
        return rep;
    }
    const auto& P = *pb.P;
    const SystemicModule& P2 = *f2.src;
    const SystemicModule& M = *f1.dst;

    rep.add("i", "trSh11(i)", is_onto(pb.pi1) ? Verdict::Pass : Verdict::Fail,
            is_onto(pb.pi1) ? "" : "restricted projection misses elements");
    {  // (ii)
        const auto mcirc = module_quasi_zeros(M);
        std::set<Elem> circ(mcirc.begin(), mcirc.end());
        std::set<Elem> X;  // {b2 (-) b2' : f2 of the difference lands in the quasi-zero set}
        for (Elem b = 0; b < P2.size(); ++b)
            for (Elem c = 0; c < P2.size(); ++c) {
                const Elem d = P2.add(b, P2.neg(c));
                if (circ.count(f2.tab[d])) X.insert(d);
            }
        const auto kerf2 = null_module_kernel(f2);
        std::set<Elem> kset(kerf2.begin(), kerf2.end());
        bool x_in_ker = std::all_of(X.begin(), X.end(), [&](Elem d) { return kset.count(d) != 0; });

        Pairs k1p = kernel_pairs(pb.pi1, true);
        bool ok = true;
        std::string note;
        for (const auto& p : k1p.list) {
            const Elem d = P2.add(pb.pi2.tab[p.first], P2.neg(pb.pi2.tab[p.second]));
            if (!X.count(d)) {
                ok = false;
                note = "image escapes the quasi-zero difference set";
                break;
            }
        }
        rep.add("ii", "trSh11(ii)", (ok && x_in_ker) ? Verdict::Pass : Verdict::Fail, note);
    }
    {  // (iii)
        const auto lhs = null_module_kernel(pb.pi1);
        const auto kerf2 = null_module_kernel(f2);
        std::set<Elem> kset(kerf2.begin(), kerf2.end());
        std::vector<Elem> rhs;
        for (Elem p = 0; p < P.size(); ++p)
            if (is_null_elem(*f1.src, pb.pi1.tab[p]) && kset.count(pb.pi2.tab[p]))
                rhs.push_back(p);
        rep.add("iii", "trSh11(iii)", lhs == rhs ? Verdict::Pass : Verdict::Fail,
                lhs == rhs ? "" : "kernel characterization mismatch");
    }
    {  // (iv)
        bool ok = true;
        for (Elem p = 0; p < P.size(); ++p)
            if (!M.leq(f1.tab[pb.pi1.tab[p]], f2.tab[pb.pi2.tab[p]])) ok = false;
        rep.add("iv", "trSh11(iv)", ok ? Verdict::Pass : Verdict::Fail,
                ok ? "" : "composites fail the comparison");
    }
    return rep;
}

VerificationReport verify_trsh119(const MapTable& f, const MapTable& fp, const MapTable& mu,
                                  const ModuleScope& scope, const SearchCtx& ctx) {
    VerificationReport rep;
    rep.suite = "trsh119";
    rep.param("f", f.src->name + "->" + f.dst->name);
    rep.param("f'", fp.src->name + "->" + fp.dst->name);
    rep.param("mu", mu.src->name + "->" + mu.dst->name);

    const bool shapes = *f.dst == *mu.src && *fp.dst == *mu.dst;
    if (!shapes || !classify_map(f).preceq() || !is_preceq_onto(f) || !classify_map(fp).hom() ||
        !is_preceq_onto(fp) || !classify_map(mu).preceq() || !is_preceq_onto(mu)) {
        rep.add("hypothesis", "trSh119", Verdict::Skipped,
                "needs preceq-onto f and mu, a preceq-onto homomorphism f'");
        return rep;
    }
    if (is_projective(f.src, ProjKind::Preceq, scope, ctx).verdict != VerdictKind::True ||
        is_projective(fp.src, ProjKind::Preceq, scope, ctx).verdict != VerdictKind::True) {
        rep.add("hypothesis", "trSh119", Verdict::Skipped,
                "sources lack preceq-projectivity certificates within scope");
        return rep;
    }

    auto h_lift = lift_search(compose(mu, f), fp, ProjKind::Preceq, ctx);
    rep.add("lift", "trSh119", status_verdict(h_lift.status),
            h_lift.status == SearchStatus::Found ? "" : "no lift of mu.f through f'");
    if (h_lift.status != SearchStatus::Found) return rep;
    const MapTable& h = *h_lift.lift;  // P -> P'

    auto K = submodule(f.src, null_module_kernel(f), "K");
    auto Kp = submodule(fp.src, null_module_kernel(fp), "K'");
    auto KP = direct_sum({Kp.module, f.src});

    MapTable g{KP, fp.src, std::vector<Elem>(KP->size()), "g"};
    for (Elem s = 0; s < KP->size(); ++s) {
        const Elem bp = Kp.embed[s / f.src->size()];
        const Elem b = s % f.src->size();
        g.tab[s] = fp.src->add(h.tab[b], fp.src->neg(bp));
    }
    rep.add("g-preceq-morphism", "trSh119",
            classify_map(g).preceq() ? Verdict::Pass : Verdict::Fail,
            classify_map(g).preceq() ? "" : "difference map leaves the class");
    rep.add("g-preceq-onto", "trSh119", is_preceq_onto(g) ? Verdict::Pass : Verdict::Fail,
            is_preceq_onto(g) ? "" : "difference map not preceq-onto");
    {
        auto split = find_splitting(g, SplitKind::Preceq, ctx);
        rep.add("g-splits", "trSh119", status_verdict(split.status),
                split.status == SearchStatus::Found ? "" : "no preceq-section of g");
    }
    {
        const auto kerg = null_module_kernel(g);
        std::set<Elem> kg(kerg.begin(), kerg.end());
        MapTable phi{K.module, KP, std::vector<Elem>(K.module->size()), "Phi"};
        bool well = true;
        std::string note;
        for (Elem i = 0; i < K.module->size(); ++i) {
            const Elem b = K.embed[i];
            const Elem hb = h.tab[b];
            auto pos = Kp.from_parent(hb);
            if (!pos) {
                well = false;
                note = "h image leaves the comparison kernel at " + f.src->ename(b);
                break;
            }
            phi.tab[i] = *pos * f.src->size() + b;
            if (!kg.count(phi.tab[i])) {
                well = false;
                note = "Phi image leaves ker(g) at " + f.src->ename(b);
                break;
            }
        }
        if (well) {
            const bool cls = classify_map(phi).preceq();
            const bool inj = is_N_monic(phi);
            if (!cls) note = "Phi is not a preceq-morphism";
            if (!inj) note = "Phi is not injective";
            well = cls && inj;
        }
        rep.add("phi", "trSh119", well ? Verdict::Pass : Verdict::Fail, note);
    }
    return rep;
}

VerificationReport verify_sch29(const MapTable& f, const MapTable& fp, const MapTable& mu,
                                const ModuleScope& scope, const SearchCtx& ctx) {
    VerificationReport rep;
    rep.suite = "sch29";
    rep.param("f", f.src->name + "->" + f.dst->name);
    rep.param("f'", fp.src->name + "->" + fp.dst->name);

    auto base = verify_trsh119(f, fp, mu, scope, ctx);
    if (!base.clauses.empty() && base.clauses.front().verdict == Verdict::Skipped) {
        rep.add("hypothesis", "Sch29", Verdict::Skipped, base.clauses.front().witness);
        return rep;
    }
    if (base.overall() == Verdict::Fail) {
        rep.add("hypothesis", "Sch29", Verdict::Fail, "base construction failed");
        return rep;
    }

    auto K = submodule(f.src, null_module_kernel(f), "K");
    if (is_projective(K.module, ProjKind::Preceq, scope, ctx).verdict != VerdictKind::True) {
        rep.add("hypothesis", "Sch29", Verdict::Skipped, "K lacks a preceq-projectivity certificate");
        return rep;
    }

    auto h_lift = lift_search(compose(mu, f), fp, ProjKind::Preceq, ctx);
    const MapTable& h = *h_lift.lift;
    auto Kp = submodule(fp.src, null_module_kernel(fp), "K'");
    auto KP = direct_sum({Kp.module, f.src});
    MapTable g{KP, fp.src, std::vector<Elem>(KP->size()), "g"};
    for (Elem s = 0; s < KP->size(); ++s) {
        const Elem bp = Kp.embed[s / f.src->size()];
        const Elem b = s % f.src->size();
        g.tab[s] = fp.src->add(h.tab[b], fp.src->neg(bp));
    }
    auto kerg_sub = submodule(KP, null_module_kernel(g), "ker(g)");

    // Phi into kernel coordinates
    MapTable phi{K.module, kerg_sub.module, std::vector<Elem>(K.module->size()), "Phi"};
    for (Elem i = 0; i < K.module->size(); ++i) {
        const Elem b = K.embed[i];
        auto pos = Kp.from_parent(h.tab[b]);
        if (!pos) {
            rep.add("hypothesis", "Sch29", Verdict::Skipped, "Phi undefined for this configuration");
            return rep;
        }
        auto kpos = kerg_sub.from_parent(*pos * f.src->size() + b);
        if (!kpos) {
            rep.add("hypothesis", "Sch29", Verdict::Skipped, "Phi leaves ker(g)");
            return rep;
        }
        phi.tab[i] = *kpos;
    }

    // retract hypothesis: a preceq-morphism psi with identity below Phi psi
    EnumOptions opt;
    opt.cls = MapClass::Preceq;
    opt.limit = 1;
    opt.pointwise = [&phi, &kerg_sub](Elem x, Elem psix) {
        return kerg_sub.module->leq(x, phi.tab[psix]);
    };
    auto psi = enumerate_maps(kerg_sub.module, K.module, opt, ctx);
    if (!psi.found()) {
        rep.add("hypothesis", "Sch29", psi.complete ? Verdict::Skipped : Verdict::Inconclusive,
                "no retract witness for Phi");
        return rep;
    }
    rep.add("retract", "Sch29", Verdict::Pass);

    auto kerg_proj = is_projective(kerg_sub.module, ProjKind::Preceq, scope, ctx);
    rep.add("kernel-projective", "Sch29",
            kerg_proj.verdict == VerdictKind::True    ? Verdict::Pass
            : kerg_proj.verdict == VerdictKind::False ? Verdict::Fail
                                                      : Verdict::Inconclusive,
            kerg_proj.verdict == VerdictKind::True ? "" : kerg_proj.detail);
    auto sum_proj = is_projective(KP, ProjKind::Preceq, scope, ctx);
    rep.add("sum-projective", "Sch29",
            sum_proj.verdict == VerdictKind::True    ? Verdict::Pass
            : sum_proj.verdict == VerdictKind::False ? Verdict::Fail
                                                     : Verdict::Inconclusive,
            sum_proj.verdict == VerdictKind::True ? "" : sum_proj.detail);
    auto conclusion = is_projective(Kp.module, ProjKind::Preceq, scope, ctx);
    rep.add("conclusion", "Sch29",
            conclusion.verdict == VerdictKind::True    ? Verdict::Pass
            : conclusion.verdict == VerdictKind::False ? Verdict::Fail
                                                       : Verdict::Inconclusive,
            conclusion.verdict == VerdictKind::True ? "" : conclusion.detail);
    return rep;
}

}  // namespace sysmod
