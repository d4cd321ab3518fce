#include "sysmod/projective.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sysmod {

const char* proj_kind_name(ProjKind k) {
    switch (k) {
        case ProjKind::Plain: return "plain";
        case ProjKind::Preceq: return "preceq";
        case ProjKind::PreceqH: return "preceq-h";
        case ProjKind::H: return "h";
        case ProjKind::Succeq: return "succeq";
    }
    return "?";
}

MapTable canonical_cover(ModulePtr P, const std::vector<Elem>& gens, int size_bound) {
    if (gens.empty()) throw std::invalid_argument("canonical_cover: empty generator list");
    auto F = free_module(P->scalars, static_cast<int>(gens.size()), size_bound);
    const int ns = P->scalars->size();
    MapTable pi{F, P, std::vector<Elem>(F->size()), "cover"};
    for (Elem v = 0; v < F->size(); ++v) {
        // decode the tuple (first coordinate most significant)
        Elem idx = v, acc = P->zero;
        std::vector<Elem> comp(gens.size());
        for (int i = static_cast<int>(gens.size()) - 1; i >= 0; --i) {
            comp[i] = idx % ns;
            idx /= ns;
        }
        for (size_t i = 0; i < gens.size(); ++i) acc = P->add(acc, P->act(comp[i], gens[i]));
        pi.tab[v] = acc;
    }
    return pi;
}

namespace {

/// Generator list for the cover: declared generators when they satisfy
/// the generation precondition, else tangibles, else a greedy minimal
/// set (every module is generated by its own carrier, b = 1*b), kept
/// within the searchable cover bound.
std::optional<std::vector<Elem>> cover_gens(ModulePtr P, bool need_exact) {
    const double bound = 4096;
    auto fits = [&](const std::vector<Elem>& g) {
        if (g.empty()) return false;
        double cover_size = 1;
        for (size_t i = 0; i < g.size(); ++i) cover_size *= P->scalars->size();
        if (cover_size > bound) return false;
        return need_exact ? generates(g, *P) : preceq_generates(g, *P);
    };
    if (fits(P->generators())) return P->generators();
    if (fits(P->tangibles())) return P->tangibles();

    std::vector<Elem> gens;
    double cover_size = 1;
    while (true) {
        const auto image = generated_cover_image(*P, gens);
        Elem missing = -1;
        for (Elem b = 0; b < P->size() && missing < 0; ++b) {
            bool covered = false;
            for (Elem r : image)
                if (need_exact ? r == b : P->leq(b, r)) {
                    covered = true;
                    break;
                }
            if (!covered) missing = b;
        }
        if (missing < 0) break;
        gens.push_back(missing);
        cover_size *= P->scalars->size();
        if (cover_size > bound) return std::nullopt;
    }
    if (gens.empty()) gens.push_back(P->zero);
    return gens;
}

ProjVerdict by_cover_splitting(ModulePtr P, SplitKind kind, bool need_exact, const SearchCtx& ctx) {
    ProjVerdict out;
    auto gens = cover_gens(P, need_exact);
    if (!gens) {
        out.verdict = VerdictKind::Inconclusive;
        out.detail = "no searchable generating cover within the size bound";
        return out;
    }
    MapTable cover = canonical_cover(P, *gens);
    auto search = find_splitting(cover, kind, ctx);
    switch (search.status) {
        case SearchStatus::Found:
            out.verdict = VerdictKind::True;
            out.scope_free = true;
            out.detail = std::string("cover of rank ") + std::to_string(gens->size()) + " " +
                         split_kind_name(kind) + "s";
            out.certificate = std::move(search.cert);
            break;
        case SearchStatus::None:
            out.verdict = VerdictKind::False;
            out.detail = "canonical cover admits no " + std::string(split_kind_name(kind));
            break;
        case SearchStatus::Inconclusive:
            out.verdict = VerdictKind::Inconclusive;
            out.detail = "budget exhausted while searching the cover splitting";
            break;
    }
    return out;
}

}  // namespace

LiftResult lift_search(const MapTable& f, const MapTable& h, ProjKind kind, const SearchCtx& ctx) {
    if (!(f.dst == h.dst || *f.dst == *h.dst))
        throw std::invalid_argument("lift_search: f and h must share a target");
    const SystemicModule& Mp = *h.dst;
    EnumOptions opt;
    switch (kind) {
        case ProjKind::Plain: opt.cls = MapClass::Hom; break;
        case ProjKind::Preceq:
        case ProjKind::PreceqH: opt.cls = MapClass::Preceq; break;
        case ProjKind::H: opt.cls = MapClass::Hom; break;
        case ProjKind::Succeq: opt.cls = MapClass::Succeq; break;
    }
    opt.limit = 1;
    opt.pointwise = [&f, &h, &Mp, kind](Elem x, Elem fx) {
        const Elem via = h.tab[fx];
        switch (kind) {
            case ProjKind::Plain: return via == f.tab[x];
            case ProjKind::Preceq:
            case ProjKind::PreceqH:
            case ProjKind::H: return Mp.leq(f.tab[x], via);
            case ProjKind::Succeq: return Mp.leq(via, f.tab[x]);
        }
        return false;
    };
    auto r = enumerate_maps(f.src, h.src, opt, ctx);
    LiftResult out;
    if (r.found()) {
        out.status = SearchStatus::Found;
        out.lift = std::move(r.maps.front());
    } else {
        out.status = r.complete ? SearchStatus::None : SearchStatus::Inconclusive;
    }
    return out;
}

ProjVerdict is_projective(ModulePtr P, ProjKind kind, const ModuleScope& scope,
                          const SearchCtx& ctx) {
    switch (kind) {
        case ProjKind::PreceqH: return by_cover_splitting(P, SplitKind::Preceq, false, ctx);
        case ProjKind::H: return by_cover_splitting(P, SplitKind::H, false, ctx);
        case ProjKind::Succeq: return by_cover_splitting(P, SplitKind::HSucceq, true, ctx);
        default: break;
    }

    ProjVerdict out;
    bool inconclusive = false;
    if (kind == ProjKind::Plain) {
        // every onto homomorphism to P splits
        for (const auto& M : scope.modules) {
            EnumOptions opt;
            opt.cls = MapClass::Hom;
            opt.final_filter = [&M, &P](const std::vector<Elem>& tab) {
                std::vector<uint8_t> hit(P->size(), 0);
                for (Elem x = 0; x < M->size(); ++x) hit[tab[x]] = 1;
                return std::all_of(hit.begin(), hit.end(), [](uint8_t h) { return h != 0; });
            };
            auto homs = enumerate_maps(M, P, opt, ctx);
            if (!homs.complete) inconclusive = true;
            for (const auto& h : homs.maps) {
                auto split = find_splitting(h, SplitKind::Split, ctx);
                if (split.status == SearchStatus::None) {
                    out.verdict = VerdictKind::False;
                    out.detail = "onto homomorphism from " + M->name + " does not split: " +
                                 map_string(h);
                    return out;
                }
                if (split.status == SearchStatus::Inconclusive) inconclusive = true;
            }
        }
        out.verdict = inconclusive ? VerdictKind::Inconclusive : VerdictKind::True;
        out.detail = "every onto homomorphism within scope splits";
        return out;
    }

    // raw preceq-projectivity over the roster
    for (const auto& M : scope.modules) {
        for (const auto& Mp : scope.modules) {
            EnumOptions hopt;
            hopt.cls = MapClass::Preceq;
            auto hs = enumerate_maps(M, Mp, hopt, ctx);
            if (!hs.complete) inconclusive = true;
            for (const auto& h : hs.maps) {
                if (!is_preceq_onto(h)) continue;
                auto fs = enumerate_maps(P, Mp, hopt, ctx);
                if (!fs.complete) inconclusive = true;
                for (const auto& f : fs.maps) {
                    auto lift = lift_search(f, h, ProjKind::Preceq, ctx);
                    if (lift.status == SearchStatus::None) {
                        out.verdict = VerdictKind::False;
                        out.detail = "no preceq-lift of " + map_string(f) + " through " +
                                     map_string(h) + " (" + M->name + " -> " + Mp->name + ")";
                        return out;
                    }
                    if (lift.status == SearchStatus::Inconclusive) inconclusive = true;
                }
            }
        }
    }
    out.verdict = inconclusive ? VerdictKind::Inconclusive : VerdictKind::True;
    out.detail = "every preceq-morphism lifts within scope";
    return out;
}

DualBasisResult dual_basis(ModulePtr P, const std::vector<Elem>& gens, ProjKind kind,
                           const SearchCtx& ctx) {
    if (kind != ProjKind::PreceqH && kind != ProjKind::H && kind != ProjKind::Succeq)
        throw std::invalid_argument("dual_basis: kind must be preceq-h, h or succeq");
    const bool exact = kind == ProjKind::Succeq;
    if (exact ? !generates(gens, *P) : !preceq_generates(gens, *P))
        throw std::invalid_argument("dual_basis: generators fail the generation precondition");

    const int k = static_cast<int>(gens.size());
    auto F = free_module(P->scalars, k);
    MapTable comb = canonical_cover(P, gens);

    EnumOptions opt;
    opt.cls = kind == ProjKind::PreceqH ? MapClass::Preceq
              : kind == ProjKind::H     ? MapClass::Hom
                                        : MapClass::Succeq;
    opt.limit = 1;
    opt.pointwise = [&comb, &P, exact](Elem a, Elem tuple) {
        return exact ? P->leq(comb.tab[tuple], a) : P->leq(a, comb.tab[tuple]);
    };
    auto r = enumerate_maps(P, F, opt, ctx);

    DualBasisResult out;
    if (!r.found()) {
        out.status = r.complete ? SearchStatus::None : SearchStatus::Inconclusive;
        return out;
    }
    const MapTable& tuple_map = r.maps.front();

    // Split the tuple map into coordinate maps and re-verify each piece
    // and the combination through the module action directly.
    auto A = regular_module(P->scalars);
    const int ns = P->scalars->size();
    DualBasisCertificate cert;
    cert.gens = gens;
    std::vector<std::vector<Elem>> comps(k, std::vector<Elem>(P->size()));
    for (Elem a = 0; a < P->size(); ++a) {
        Elem idx = tuple_map.tab[a];
        for (int i = k - 1; i >= 0; --i) {
            comps[i][a] = idx % ns;
            idx /= ns;
        }
    }
    for (int i = 0; i < k; ++i) {
        MapTable gi{P, A, comps[i], "g" + std::to_string(i)};
        const MorphClass c = classify_map(gi);
        const bool ok = kind == ProjKind::PreceqH ? c.preceq()
                        : kind == ProjKind::H     ? c.hom()
                                                  : c.succeq();
        if (!ok) throw std::logic_error("dual_basis: coordinate map escapes the demanded class");
        cert.coords.push_back(std::move(gi));
    }
    for (Elem a = 0; a < P->size(); ++a) {
        Elem acc = P->zero;
        for (int i = 0; i < k; ++i) acc = P->add(acc, P->act(cert.coords[i].tab[a], gens[i]));
        const bool ok = exact ? P->leq(acc, a) : P->leq(a, acc);
        if (!ok) throw std::logic_error("dual_basis: recombination check failed");
        cert.evidence.emplace_back(a, acc);
    }
    out.status = SearchStatus::Found;
    out.cert = std::move(cert);
    return out;
}

bool modules_isomorphic(ModulePtr A, ModulePtr B, const SearchCtx& ctx) {
    if (A->size() != B->size()) return false;
    if (A->tangibles().size() != B->tangibles().size()) return false;
    EnumOptions opt;
    opt.cls = MapClass::Hom;
    opt.require_injective = true;
    opt.limit = 1;
    opt.pointwise = [&A, &B](Elem x, Elem y) {
        return A->is_tangible(x) == B->is_tangible(y);
    };
    opt.final_filter = [&A, &B](const std::vector<Elem>& tab) {
        // bijectivity is already forced by injectivity on equal sizes
        std::vector<Elem> inv(B->size(), -1);
        for (Elem x = 0; x < A->size(); ++x) inv[tab[x]] = x;
        for (Elem x = 0; x < A->size(); ++x) {
            if (B->neg(tab[x]) != tab[A->neg(x)]) return false;
            for (Elem y = 0; y < A->size(); ++y)
                if (A->leq(x, y) != B->leq(tab[x], tab[y])) return false;
        }
        MapTable invmap{B, A, inv, "inv"};
        return classify_map(invmap).hom();
    };
    return enumerate_maps(A, B, opt, ctx).found();
}

StrongProjResult is_strongly_projective(ModulePtr P, int max_rank, const SearchCtx& ctx,
                                        int size_bound) {
    StrongProjResult out;
    bool searched_everything = true;
    for (int rank = 1; rank <= max_rank; ++rank) {
        ModulePtr F;
        try {
            F = free_module(P->scalars, rank, size_bound);
        } catch (const BoundError&) {
            searched_everything = false;
            break;
        }
        if (F->size() < P->size()) continue;
        if (F->size() > 16) {
            searched_everything = false;
            continue;
        }
        // all submodules, as closures of carrier subsets
        std::set<std::vector<Elem>> subs;
        const int n = F->size();
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Elem> seed;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) seed.push_back(i);
            subs.insert(submodule_closure(*F, seed));
        }
        std::vector<Submodule> mods;
        for (const auto& carrier : subs) mods.push_back(submodule(F, carrier, "sub"));

        for (const auto& cand : mods) {
            if (cand.module->size() != P->size()) continue;
            if (!modules_isomorphic(P, cand.module, ctx)) continue;
            for (const auto& comp : mods) {
                if (static_cast<size_t>(cand.module->size()) * comp.module->size() !=
                    static_cast<size_t>(n))
                    continue;
                // the recombination (p, q) -> p + q must be an isomorphism
                auto sum = direct_sum({cand.module, comp.module},
                                      std::max(size_bound, n));
                MapTable theta{sum, F, std::vector<Elem>(sum->size()), "theta"};
                for (Elem s = 0; s < sum->size(); ++s) {
                    const Elem p = s / comp.module->size();
                    const Elem q = s % comp.module->size();
                    theta.tab[s] = F->add(cand.embed[p], comp.embed[q]);
                }
                if (!is_N_monic(theta) || !is_onto(theta)) continue;
                bool structural = classify_map(theta).hom();
                for (Elem s = 0; s < sum->size() && structural; ++s) {
                    if (sum->is_tangible(s) != F->is_tangible(theta.tab[s])) structural = false;
                    if (F->neg(theta.tab[s]) != theta.tab[sum->neg(s)]) structural = false;
                    for (Elem t = 0; t < sum->size() && structural; ++t)
                        if (sum->leq(s, t) != F->leq(theta.tab[s], theta.tab[t]))
                            structural = false;
                }
                if (!structural) continue;
                out.status = SearchStatus::Found;
                out.detail = "summand of " + F->name + " with complement of size " +
                             std::to_string(comp.module->size());
                return out;
            }
        }
    }
    out.status = searched_everything ? SearchStatus::None : SearchStatus::Inconclusive;
    out.detail = "no free summand presentation up to rank " + std::to_string(max_rank);
    return out;
}

VerificationReport verify_sch2(ModulePtr P, ModulePtr P1, const MapTable& pi,
                               const ModuleScope& scope, const SearchCtx& ctx) {
    VerificationReport rep;
    rep.suite = "sch2";
    rep.param("P", P->name);
    rep.param("P1", P1->name);

    if (!classify_map(pi).hom() || !is_preceq_onto(pi)) {
        rep.add("hypothesis/pi", "Sch2", Verdict::Skipped, "pi is not a preceq-onto homomorphism");
        return rep;
    }
    auto proj_p1 = is_projective(P1, ProjKind::PreceqH, scope, ctx);
    if (proj_p1.verdict != VerdictKind::True) {
        rep.add("hypothesis/P1", "Sch2", Verdict::Skipped, "P1 lacks a preceq-h certificate");
        return rep;
    }
    auto kernel = null_module_kernel(pi);
    auto K = submodule(P, kernel, "ker(" + pi.name + ")");
    auto proj_k = is_projective(K.module, ProjKind::PreceqH, scope, ctx);
    if (proj_k.verdict != VerdictKind::True) {
        rep.add("hypothesis/K", "Sch2", Verdict::Skipped, "kernel lacks a preceq-h certificate");
        return rep;
    }

    auto split = find_splitting(pi, SplitKind::Preceq, ctx);
    rep.add("lift-identity", "Sch2",
            split.status == SearchStatus::Found ? Verdict::Pass
            : split.status == SearchStatus::None ? Verdict::Fail
                                                 : Verdict::Inconclusive,
            split.status == SearchStatus::Found ? "" : "identity does not preceq-lift through pi");
    if (split.status != SearchStatus::Found) return rep;
    const MapTable& nu = split.cert->nu;
    MapTable pi2 = one_minus(compose(nu, pi));

    {
        std::set<Elem> in(kernel.begin(), kernel.end());
        bool ok = true;
        Elem bad = -1;
        for (Elem b = 0; b < P->size(); ++b)
            if (!in.count(pi2.tab[b])) {
                ok = false;
                bad = b;
                break;
            }
        rep.add("complement-in-kernel", "Sch2", ok ? Verdict::Pass : Verdict::Fail,
                ok ? "" : "escapes at " + P->ename(bad));
        bool nullok = true;
        for (Elem b = 0; b < P->size(); ++b)
            if (!P1->leq(P1->zero, pi.tab[pi2.tab[b]])) nullok = false;
        rep.add("pi-of-complement-null", "Sch2", nullok ? Verdict::Pass : Verdict::Fail,
                nullok ? "" : "complement image leaves the null set");
        if (!ok) return rep;
    }

    // replay the combined lift for each scope pair
    int replays = 0, failures = 0;
    bool inconclusive = false;
    for (const auto& M : scope.modules) {
        for (const auto& Mp : scope.modules) {
            EnumOptions hopt;
            hopt.cls = MapClass::Hom;
            auto hs = enumerate_maps(M, Mp, hopt, ctx);
            if (!hs.complete) inconclusive = true;
            for (const auto& h : hs.maps) {
                if (!is_preceq_onto(h)) continue;
                EnumOptions fopt;
                fopt.cls = MapClass::Preceq;
                auto fs = enumerate_maps(P, Mp, fopt, ctx);
                if (!fs.complete) inconclusive = true;
                for (const auto& f : fs.maps) {
                    MapTable fnu = compose(f, nu);
                    auto lift1 = lift_search(fnu, h, ProjKind::PreceqH, ctx);
                    // restrict f to the kernel
                    MapTable fk{K.module, f.dst, {}, "f|K"};
                    for (Elem x : K.embed) fk.tab.push_back(f.tab[x]);
                    auto lift2 = lift_search(fk, h, ProjKind::PreceqH, ctx);
                    if (lift1.status != SearchStatus::Found ||
                        lift2.status != SearchStatus::Found) {
                        inconclusive = true;
                        continue;
                    }
                    ++replays;
                    bool ok = true;
                    for (Elem b = 0; b < P->size(); ++b) {
                        const Elem part1 = lift1.lift->tab[pi.tab[b]];
                        const Elem sub = *K.from_parent(pi2.tab[b]);
                        const Elem part2 = lift2.lift->tab[sub];
                        const Elem total = h.tab[M->add(part1, part2)];
                        if (!Mp->leq(f.tab[b], total)) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) ++failures;
                }
            }
        }
    }
    rep.add("combined-lift", "Sch2",
            failures ? Verdict::Fail : (inconclusive ? Verdict::Inconclusive : Verdict::Pass),
            "replays=" + std::to_string(replays));

    auto conclusion = is_projective(P, ProjKind::PreceqH, scope, ctx);
    rep.add("conclusion", "Sch2",
            conclusion.verdict == VerdictKind::True    ? Verdict::Pass
            : conclusion.verdict == VerdictKind::False ? Verdict::Fail
                                                       : Verdict::Inconclusive,
            conclusion.detail);
    return rep;
}

}  // namespace sysmod
