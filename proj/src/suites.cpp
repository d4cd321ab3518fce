#include "sysmod/suites.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "sysmod/matrix.hpp"

namespace sysmod {

namespace {

struct Env {
    const Scope& scope;
    Budget budget;
    SearchCtx ctx;
    std::vector<SystemEntry> systems;

    std::mutex mu;
    std::map<std::pair<const SystemicModule*, ProjKind>, ProjVerdict> proj_cache;
    std::map<std::tuple<const SystemicModule*, const SystemicModule*, MapClass>,
             std::shared_ptr<const std::vector<MapTable>>>
        map_cache;

    explicit Env(const Scope& s) : scope(s), budget(s.budget) {
        ctx.budget = &budget;
        ctx.exec = s.exec;
        if (s.extra_system) {
            systems.push_back({s.extra_system->name, s.extra_system,
                               check_system(*s.extra_system).classification});
        } else {
            for (const auto& e : builtin_system_instances()) {
                if (!s.systems.empty() &&
                    std::find(s.systems.begin(), s.systems.end(), e.name) == s.systems.end())
                    continue;
                systems.push_back(e);
            }
        }
    }

    std::vector<ModuleEntry> roster(const std::shared_ptr<const FiniteSystem>& S, int max_size) {
        return builtin_modules(S, max_size);
    }

    ModuleScope proj_scope(const std::shared_ptr<const FiniteSystem>& S) {
        ModuleScope out;
        out.label = "builtin modules of " + S->name + " up to size " +
                    std::to_string(scope.max_module_size);
        for (const auto& e : roster(S, scope.max_module_size))
            if (e.genuine) out.modules.push_back(e.module);
        return out;
    }

    ProjVerdict proj(ModulePtr P, ProjKind kind) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = proj_cache.find({P.get(), kind});
            if (it != proj_cache.end()) return it->second;
        }
        auto scope_mods = proj_scope(P->scalars);
        auto v = is_projective(P, kind, scope_mods, ctx);
        std::lock_guard<std::mutex> lock(mu);
        proj_cache.emplace(std::make_pair(P.get(), kind), v);
        return v;
    }

    std::shared_ptr<const std::vector<MapTable>> maps(ModulePtr src, ModulePtr dst, MapClass cls) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = map_cache.find({src.get(), dst.get(), cls});
            if (it != map_cache.end()) return it->second;
        }
        auto computed =
            std::make_shared<const std::vector<MapTable>>(all_maps(src, dst, cls, ctx));
        std::lock_guard<std::mutex> lock(mu);
        map_cache.emplace(std::make_tuple(src.get(), dst.get(), cls), computed);
        return computed;
    }
};

Verdict agree_verdict(const std::vector<VerdictKind>& vs, std::string& note) {
    bool inconclusive = false;
    for (auto v : vs)
        if (v == VerdictKind::Inconclusive) inconclusive = true;
    if (inconclusive) {
        note = "budget exhausted before every criterion settled";
        return Verdict::Inconclusive;
    }
    for (size_t i = 1; i < vs.size(); ++i)
        if (vs[i] != vs[0]) {
            note = "criterion verdicts disagree:";
            for (auto v : vs) note += v == VerdictKind::True ? " true" : " false";
            return Verdict::Fail;
        }
    note = vs[0] == VerdictKind::True ? "all true" : "all false";
    return Verdict::Pass;
}

/// Deterministic parallel sweep over configs producing clause bundles.
template <class Config, class Fn>
void sweep(Env& env, VerificationReport& rep, const std::vector<Config>& configs, Fn&& fn) {
    std::vector<std::vector<Clause>> slots(configs.size());
    parallel_for(static_cast<int>(configs.size()), env.scope.exec,
                 [&](int i) { slots[i] = fn(configs[i]); });
    for (auto& bundle : slots)
        for (auto& c : bundle) rep.clauses.push_back(std::move(c));
}

// ---------------------------------------------------------------- axioms

VerificationReport suite_axioms(Env& env) {
    VerificationReport rep;
    rep.suite = "axioms";
    const std::vector<SystemEntry>* all = &builtin_systems();
    std::vector<SystemEntry> filtered;
    if (env.scope.extra_system) {
        filtered.push_back({env.scope.extra_system->name, env.scope.extra_system,
                            Classification::System});
        all = &filtered;
    } else if (!env.scope.systems.empty()) {
        for (const auto& e : builtin_systems())
            if (std::find(env.scope.systems.begin(), env.scope.systems.end(), e.name) !=
                env.scope.systems.end())
                filtered.push_back(e);
        all = &filtered;
    }

    for (const auto& entry : *all) {
        const FiniteSystem& S = *entry.system;
        auto audit = check_system(S, env.scope.exec);
        for (const auto& c : audit.checks)
            rep.add(entry.name + "/" + c.axiom, "Tsyst", c.pass ? Verdict::Pass : Verdict::Fail,
                    witness_string(S, c));
        rep.add(entry.name + "/classification", "Tsyst", Verdict::Pass,
                classification_name(audit.classification));

        // surpassing-relation lemmas, checked on the declared relation
        {
            bool ok = true;
            std::string w;
            for (Elem b = 0; b < S.size() && ok; ++b)
                for (Elem c = 0; c < S.size() && ok; ++c)
                    if (!S.leq(b, S.add(b, quasi_zero(S, c)))) {
                        ok = false;
                        w = "(" + S.ename(b) + "," + S.ename(c) + ")";
                    }
            rep.add(entry.name + "/shift-below", "circget7", ok ? Verdict::Pass : Verdict::Fail, w);
        }
        {
            bool ok = true;
            std::string w;
            for (Elem a = 0; a < S.size() && ok; ++a)
                for (Elem b = 0; b < S.size() && ok; ++b) {
                    if (!S.leq(a, b)) continue;
                    if (!S.leq(S.zero, S.add(b, S.neg(a))) ||
                        !S.leq(S.zero, S.add(a, S.neg(b)))) {
                        ok = false;
                        w = "(" + S.ename(a) + "," + S.ename(b) + ")";
                    }
                }
            rep.add(entry.name + "/difference-null", "circget", ok ? Verdict::Pass : Verdict::Fail,
                    w);
        }
        {
            const auto nulls = null_set(S);
            std::set<Elem> nullset(nulls.begin(), nulls.end());
            bool contains = true;
            for (Elem c : quasi_zero_set(S))
                if (!nullset.count(c)) contains = false;
            rep.add(entry.name + "/null-contains-quasi-zeros", "precedeq07(i)",
                    contains ? Verdict::Pass : Verdict::Fail);

            const Rel circ = build_surpass_circ(S);
            FiniteSystem probe = S;
            probe.surpass = circ;
            const auto circ_nulls = null_set(probe);
            const Rel nullrel = build_surpass_null(S, circ_nulls);
            bool contained = true;
            for (Elem a = 0; a < S.size() && contained; ++a)
                for (Elem b = 0; b < S.size() && contained; ++b)
                    if (circ.at(a, b) && !nullrel.at(a, b)) contained = false;
            rep.add(entry.name + "/circ-within-null", "precnul",
                    contained ? Verdict::Pass : Verdict::Fail);
        }
        {
            const auto circs = quasi_zero_set(S);
            std::set<Elem> cs(circs.begin(), circs.end());
            bool closed = true;
            for (Elem a : circs) {
                if (!cs.count(S.neg(a))) closed = false;  // quasi-zeros fixed by negation
                if (S.neg(quasi_zero(S, a)) != quasi_zero(S, a)) closed = false;
                for (Elem b : circs)
                    if (!cs.count(S.add(a, b))) closed = false;
                for (Elem t : S.tangibles())
                    if (!cs.count(S.mul(t, a))) closed = false;
            }
            rep.add(entry.name + "/quasi-zero-submodule", "negmap",
                    closed ? Verdict::Pass : Verdict::Fail);
        }
    }

    if (!env.scope.extra_system &&
        (env.scope.systems.empty() ||
         std::find(env.scope.systems.begin(), env.scope.systems.end(), "maxplus-st") !=
             env.scope.systems.end())) {
        MaxPlusSystem st;
        for (const auto& c : check_maxplus_window(st, -8, 8))
            rep.add("maxplus-st/" + c.axiom, "precmain(ii)", c.pass ? Verdict::Pass : Verdict::Fail,
                    c.witness);
    }
    return rep;
}

// ------------------------------------------------------------------ hyp7

VerificationReport suite_hyp7(Env& env) {
    VerificationReport rep;
    rep.suite = "hyp7";
    for (const auto& entry : env.systems) {
        const bool hyper =
            entry.name.size() > 3 && entry.name.compare(entry.name.size() - 3, 3, "-hs") == 0;
        if (!hyper && !env.scope.extra_system) continue;
        const FiniteSystem& S = *entry.system;
        bool ok = true;
        std::string w;
        for (Elem a : S.tangibles())
            for (Elem b = 0; b < S.size() && ok; ++b)
                if (S.leq(S.zero, S.add(a, b)) && !S.leq(S.neg(a), b)) {
                    ok = false;
                    w = "(" + S.ename(a) + "," + S.ename(b) + ")";
                }
        rep.add(entry.name, "hyp7", ok ? Verdict::Pass : Verdict::Fail, w);
    }
    return rep;
}

// ------------------------------------------------------------ lemma-3.14

VerificationReport suite_lemma314(Env& env) {
    VerificationReport rep;
    rep.suite = "lemma-3.14";
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    struct Config {
        std::string id;
        ModulePtr M, N;
        bool n_genuine;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems) {
        auto roster = env.roster(entry.system, env.scope.max_module_size);
        for (const auto& m : roster)
            for (const auto& n : roster)
                configs.push_back({m.name + "->" + n.name, m.module, n.module, n.genuine});
    }

    sweep(env, rep, configs, [&](const Config& cfg) {
        std::vector<Clause> out;
        const auto pre = env.maps(cfg.M, cfg.N, MapClass::Preceq);
        const auto back = env.maps(cfg.N, cfg.M, MapClass::Preceq);
        const auto pre_sup = env.maps(cfg.M, cfg.N, MapClass::Succeq);
        const auto back_sup = env.maps(cfg.N, cfg.M, MapClass::Succeq);
        const SystemicModule& N = *cfg.N;

        int qual_i = 0, qual_ii = 0, qual_iii = 0, qual_iv = 0;
        std::string w1, w2, w3, w4;
        for (const auto& pi : *pre) {
            const bool pi_hom = classify_map(pi).hom();
            for (const auto& nu : *back) {
                bool dominated = true;
                for (Elem b = 0; b < N.size() && dominated; ++b)
                    if (!N.leq(b, pi.tab[nu.tab[b]])) dominated = false;
                if (dominated) {
                    ++qual_i;
                    if (w1.empty() &&
                        (!is_preceq_onto(pi) || !is_preceq_idempotent_map(compose(nu, pi))))
                        w1 = "pi=" + map_string(pi) + " nu=" + map_string(nu);
                    if (pi_hom) {
                        ++qual_ii;
                        if (w2.empty() && !is_preceq_idempotent_map(one_minus(compose(nu, pi))))
                            w2 = "pi=" + map_string(pi) + " nu=" + map_string(nu);
                    }
                }
                if (pi_hom && cfg.n_genuine) {
                    bool fixes_tangibles = true;
                    for (Elem a : N.tangibles())
                        if (pi.tab[nu.tab[a]] != a) fixes_tangibles = false;
                    if (fixes_tangibles) {
                        ++qual_iv;
                        if (w4.empty() &&
                            (!is_onto(pi) || !is_T_idempotent_map(compose(nu, pi))))
                            w4 = "pi=" + map_string(pi) + " nu=" + map_string(nu);
                    }
                }
            }
        }
        for (const auto& pi : *pre_sup) {
            for (const auto& nu : *back_sup) {
                bool dominates = true;
                for (Elem b = 0; b < N.size() && dominates; ++b)
                    if (!N.leq(pi.tab[nu.tab[b]], b)) dominates = false;
                if (!dominates) continue;
                ++qual_iii;
                if (w3.empty() &&
                    (!is_null_monic(nu) || !is_preceq_idempotent_map(one_minus(compose(nu, pi)))))
                    w3 = "pi=" + map_string(pi) + " nu=" + map_string(nu);
            }
        }
        out.push_back({cfg.id + "/i", "3.14(i)", w1.empty() ? Verdict::Pass : Verdict::Fail,
                       w1.empty() ? "pairs=" + std::to_string(qual_i) : w1});
        out.push_back({cfg.id + "/ii", "3.14(ii)", w2.empty() ? Verdict::Pass : Verdict::Fail,
                       w2.empty() ? "pairs=" + std::to_string(qual_ii) : w2});
        out.push_back({cfg.id + "/iii", "3.14(iii)", w3.empty() ? Verdict::Pass : Verdict::Fail,
                       w3.empty() ? "pairs=" + std::to_string(qual_iii) : w3});
        if (cfg.n_genuine)
            out.push_back({cfg.id + "/iv", "3.14(iv)", w4.empty() ? Verdict::Pass : Verdict::Fail,
                           w4.empty() ? "pairs=" + std::to_string(qual_iv) : w4});
        return out;
    });
    if (env.budget.exhausted())
        rep.add("budget", "3.14", Verdict::Inconclusive, "enumeration budget exhausted");
    return rep;
}

// -------------------------------------------------------------- splitdir

VerificationReport suite_splitdir(Env& env) {
    VerificationReport rep;
    rep.suite = "splitdir";
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    struct Config {
        std::string id;
        ModulePtr M, N;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems) {
        auto roster = env.roster(entry.system, env.scope.max_module_size);
        for (const auto& m : roster)
            for (const auto& n : roster) configs.push_back({m.name + "->" + n.name, m.module, n.module});
    }

    sweep(env, rep, configs, [&](const Config& cfg) {
        std::vector<Clause> out;
        const auto homs = env.maps(cfg.M, cfg.N, MapClass::Hom);
        const auto backs = env.maps(cfg.N, cfg.M, MapClass::Preceq);
        const SystemicModule& N = *cfg.N;
        int decompositions = 0;
        std::string w;
        for (const auto& pi : *homs) {
            for (const auto& nu : *backs) {
                bool dominated = true;
                for (Elem b = 0; b < N.size() && dominated; ++b)
                    if (!N.leq(b, pi.tab[nu.tab[b]])) dominated = false;
                if (!dominated) continue;
                const bool nu_hom = classify_map(nu).hom();
                SplitCertificate cert{pi, nu, nu_hom ? SplitKind::H : SplitKind::Preceq, {}};
                for (Elem b = 0; b < N.size(); ++b)
                    cert.evidence.emplace_back(b, pi.tab[nu.tab[b]]);
                try {
                    auto certs = decompose_split(pi, cert);
                    (void)certs;
                    ++decompositions;
                } catch (const std::exception& e) {
                    if (w.empty())
                        w = std::string(e.what()) + " pi=" + map_string(pi) +
                            " nu=" + map_string(nu);
                }
            }
        }
        std::vector<Clause> res;
        res.push_back({cfg.id, "splitdir", w.empty() ? Verdict::Pass : Verdict::Fail,
                       w.empty() ? "decompositions=" + std::to_string(decompositions) : w});
        return res;
    });
    return rep;
}

// -------------------------------------------------------- free-projective

VerificationReport suite_free_projective(Env& env) {
    VerificationReport rep;
    rep.suite = "free-projective";
    rep.param("max-free-rank", std::to_string(env.scope.max_free_rank));
    const ProjKind kinds[] = {ProjKind::Plain, ProjKind::PreceqH, ProjKind::H, ProjKind::Succeq};
    for (const auto& entry : env.systems) {
        for (int rank = 1; rank <= env.scope.max_free_rank; ++rank) {
            ModulePtr F;
            try {
                F = free_module(entry.system, rank, 256);
            } catch (const BoundError&) {
                continue;
            }
            for (ProjKind k : kinds) {
                auto v = env.proj(F, k);
                const std::string id =
                    entry.name + "/rank" + std::to_string(rank) + "/" + proj_kind_name(k);
                Verdict verdict = v.verdict == VerdictKind::True    ? Verdict::Pass
                                  : v.verdict == VerdictKind::False ? Verdict::Fail
                                                                    : Verdict::Inconclusive;
                std::string note = v.detail;
                if (v.verdict == VerdictKind::True &&
                    (k == ProjKind::PreceqH || k == ProjKind::H || k == ProjKind::Succeq) &&
                    !v.certificate)
                    verdict = Verdict::Fail, note = "missing positive certificate";
                rep.add(id, "free system is projective", verdict, note);
            }
        }
    }
    return rep;
}

// ----------------------------------------------------- epicspl equivalences

struct MorSets {
    std::shared_ptr<const std::vector<MapTable>> maps_pm;  // P -> M per module
};

VerificationReport suite_epicspl(Env& env, const std::string& name) {
    // name: epicspl (preceq-h), epicspl-h (h), epicspl-succ (succeq)
    VerificationReport rep;
    rep.suite = name;
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    const bool hom_flavor = name == "epicspl-h";
    const bool succ_flavor = name == "epicspl-succ";
    const MapClass lift_cls = hom_flavor ? MapClass::Hom
                              : succ_flavor ? MapClass::Succeq
                                            : MapClass::Preceq;
    const std::string anchor = succ_flavor ? "epicspl10" : hom_flavor ? "epicspl1" : "epicspl";

    struct Config {
        std::string id;
        ModulePtr P;
        std::shared_ptr<const FiniteSystem> S;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems)
        for (const auto& e : env.roster(entry.system, env.scope.max_module_size))
            configs.push_back({e.name, e.module, entry.system});

    sweep(env, rep, configs, [&](const Config& cfg) {
        auto scope_mods = env.proj_scope(cfg.S);
        const auto& mods = scope_mods.modules;
        auto onto_pred = [&](const MapTable& h) {
            return succ_flavor ? is_succeq_onto(h) : is_preceq_onto(h);
        };
        auto covering_cls = succ_flavor ? MapClass::Succeq : MapClass::Hom;

        // (i) raw lifting definition
        VerdictKind vi = VerdictKind::True;
        std::string wi;
        for (const auto& M : mods) {
            for (const auto& Mp : mods) {
                const auto hs = env.maps(M, Mp, covering_cls);
                const auto fs = env.maps(cfg.P, Mp, lift_cls);
                for (const auto& h : *hs) {
                    if (!onto_pred(h)) continue;
                    for (const auto& f : *fs) {
                        auto lift = lift_search(
                            f, h,
                            succ_flavor ? ProjKind::Succeq
                                        : (hom_flavor ? ProjKind::H : ProjKind::PreceqH),
                            env.ctx);
                        if (lift.status == SearchStatus::None) {
                            vi = VerdictKind::False;
                            wi = "no lift against " + M->name + "->" + Mp->name;
                        } else if (lift.status == SearchStatus::Inconclusive &&
                                   vi == VerdictKind::True) {
                            vi = VerdictKind::Inconclusive;
                        }
                        if (vi == VerdictKind::False) break;
                    }
                    if (vi == VerdictKind::False) break;
                }
                if (vi == VerdictKind::False) break;
            }
            if (vi == VerdictKind::False) break;
        }

        // (ii) every covering map to P splits accordingly
        VerdictKind vii = VerdictKind::True;
        for (const auto& M : mods) {
            const auto hs = env.maps(M, cfg.P, covering_cls);
            for (const auto& h : *hs) {
                if (!onto_pred(h)) continue;
                auto split = find_splitting(
                    h, succ_flavor ? SplitKind::Succeq : (hom_flavor ? SplitKind::H : SplitKind::Preceq),
                    env.ctx);
                if (split.status == SearchStatus::None) vii = VerdictKind::False;
                if (split.status == SearchStatus::Inconclusive && vii == VerdictKind::True)
                    vii = VerdictKind::Inconclusive;
                if (vii == VerdictKind::False) break;
            }
            if (vii == VerdictKind::False) break;
        }

        // (iii) the canonical free cover splits
        auto viii = env.proj(cfg.P, succ_flavor ? ProjKind::Succeq
                                                : (hom_flavor ? ProjKind::H : ProjKind::PreceqH));

        // (iv) the induced map on morphism sets is onto up to the relation
        VerdictKind viv = VerdictKind::True;
        for (const auto& M : mods) {
            for (const auto& Mp : mods) {
                const auto hs = env.maps(M, Mp, covering_cls);
                const auto gs = env.maps(cfg.P, M, lift_cls);
                const auto fs = env.maps(cfg.P, Mp, lift_cls);
                for (const auto& h : *hs) {
                    if (!onto_pred(h)) continue;
                    for (const auto& f : *fs) {
                        bool found = false;
                        for (const auto& g : *gs) {
                            bool below = true;
                            for (Elem x = 0; x < cfg.P->size() && below; ++x) {
                                const Elem via = h.tab[g.tab[x]];
                                if (succ_flavor ? !Mp->leq(via, f.tab[x])
                                                : !Mp->leq(f.tab[x], via))
                                    below = false;
                            }
                            if (below) {
                                found = true;
                                break;
                            }
                        }
                        if (!found) {
                            viv = VerdictKind::False;
                            break;
                        }
                    }
                    if (viv == VerdictKind::False) break;
                }
                if (viv == VerdictKind::False) break;
            }
            if (viv == VerdictKind::False) break;
        }

        std::string note;
        Verdict verdict = agree_verdict({vi, vii, viii.verdict, viv}, note);
        if (!wi.empty() && verdict == Verdict::Fail) note += " ; " + wi;
        std::vector<Clause> out;
        out.push_back({cfg.id, anchor, verdict, note});
        return out;
    });
    return rep;
}

// -------------------------------------------------------- proj-direct-sum

VerificationReport suite_proj_direct_sum(Env& env) {
    VerificationReport rep;
    rep.suite = "proj-direct-sum";
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    struct Config {
        std::string id;
        ModulePtr P1, P2, sum;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems) {
        auto roster = env.roster(entry.system, env.scope.max_module_size);
        for (const auto& a : roster)
            for (const auto& b : roster) {
                if (a.module->size() * b.module->size() > 16) continue;
                configs.push_back(
                    {a.name + "+" + b.name, a.module, b.module, direct_sum({a.module, b.module})});
            }
    }

    sweep(env, rep, configs, [&](const Config& cfg) {
        std::vector<Clause> out;
        const ProjKind kinds[] = {ProjKind::Plain, ProjKind::PreceqH, ProjKind::H,
                                  ProjKind::Succeq, ProjKind::Preceq};
        for (ProjKind k : kinds) {
            if (k == ProjKind::Preceq && cfg.sum->size() > env.scope.max_module_size) continue;
            auto va = env.proj(cfg.P1, k);
            auto vb = env.proj(cfg.P2, k);
            auto vs = env.proj(cfg.sum, k);
            Verdict verdict;
            std::string note;
            if (va.verdict == VerdictKind::Inconclusive ||
                vb.verdict == VerdictKind::Inconclusive ||
                vs.verdict == VerdictKind::Inconclusive) {
                verdict = Verdict::Inconclusive;
                note = "budget";
            } else {
                const bool parts =
                    va.verdict == VerdictKind::True && vb.verdict == VerdictKind::True;
                const bool whole = vs.verdict == VerdictKind::True;
                verdict = parts == whole ? Verdict::Pass : Verdict::Fail;
                note = std::string("parts=") + (parts ? "true" : "false") + " sum=" +
                       (whole ? "true" : "false");
            }
            out.push_back({cfg.id + "/" + proj_kind_name(k), "project direct sum", verdict, note});
        }
        return out;
    });
    return rep;
}

// --------------------------------------------------------------- projspl

VerificationReport suite_projspl(Env& env) {
    VerificationReport rep;
    rep.suite = "projspl";
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    struct Config {
        std::string id;
        ModulePtr Q, P;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems) {
        auto roster = env.roster(entry.system, env.scope.max_module_size);
        for (const auto& q : roster)
            for (const auto& p : roster) configs.push_back({q.name + "->" + p.name, q.module, p.module});
    }

    sweep(env, rep, configs, [&](const Config& cfg) {
        std::vector<Clause> out;
        auto vq = env.proj(cfg.Q, ProjKind::Preceq);
        int applications = 0;
        std::string w;
        Verdict verdict = Verdict::Pass;
        if (vq.verdict == VerdictKind::True) {
            const auto pis = env.maps(cfg.Q, cfg.P, MapClass::Preceq);
            for (const auto& pi : *pis) {
                auto split = find_splitting(pi, SplitKind::Preceq, env.ctx);
                if (split.status == SearchStatus::Inconclusive) verdict = Verdict::Inconclusive;
                if (split.status != SearchStatus::Found) continue;
                ++applications;
                auto vp = env.proj(cfg.P, ProjKind::Preceq);
                if (vp.verdict == VerdictKind::False) {
                    verdict = Verdict::Fail;
                    w = "split surjection exists but target lost preceq-projectivity: " +
                        map_string(pi);
                    break;
                }
                if (vp.verdict == VerdictKind::Inconclusive) verdict = Verdict::Inconclusive;
                break;  // one certified split pair settles the implication for this target
            }
        } else if (vq.verdict == VerdictKind::Inconclusive) {
            verdict = Verdict::Inconclusive;
        } else {
            w = "source not preceq-projective; implication vacuous";
        }
        out.push_back({cfg.id, "projspl", verdict,
                       w.empty() ? "applications=" + std::to_string(applications) : w});
        return out;
    });
    return rep;
}

// ------------------------------------------------------------ retractlift

VerificationReport suite_retractlift(Env& env) {
    VerificationReport rep;
    rep.suite = "retractlift";
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    struct Config {
        std::string id;
        ModulePtr Q, P1;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems) {
        auto roster = env.roster(entry.system, env.scope.max_module_size);
        for (const auto& q : roster)
            for (const auto& p : roster) configs.push_back({q.name + "~" + p.name, q.module, p.module});
    }

    sweep(env, rep, configs, [&](const Config& cfg) {
        std::vector<Clause> out;
        auto vp1 = env.proj(cfg.P1, ProjKind::PreceqH);
        int applications = 0;
        std::string w;
        Verdict verdict = Verdict::Pass;
        if (vp1.verdict == VerdictKind::True) {
            const auto pis = env.maps(cfg.Q, cfg.P1, MapClass::Preceq);
            for (const auto& pi : *pis) {
                if (!is_quasi_isomorphism(pi, QuasiKind::Preceq)) continue;
                ++applications;
                auto vq = env.proj(cfg.Q, ProjKind::PreceqH);
                if (vq.verdict == VerdictKind::False) {
                    verdict = Verdict::Fail;
                    w = "quasi-isomorphic source misses preceq-h-projectivity: " + map_string(pi);
                } else if (vq.verdict == VerdictKind::Inconclusive) {
                    verdict = Verdict::Inconclusive;
                }
                break;
            }
        } else if (vp1.verdict == VerdictKind::Inconclusive) {
            verdict = Verdict::Inconclusive;
        } else {
            w = "target not preceq-h-projective; implication vacuous";
        }
        out.push_back({cfg.id, "retractlift", verdict,
                       w.empty() ? "applications=" + std::to_string(applications) : w});
        return out;
    });
    return rep;
}

// ------------------------------------------------------------------- sch2

VerificationReport suite_sch2(Env& env) {
    VerificationReport rep;
    rep.suite = "sch2";
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    struct Config {
        std::string id;
        ModulePtr P, P1;
        MapTable pi;
        std::shared_ptr<const FiniteSystem> S;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems) {
        auto roster = env.roster(entry.system, env.scope.max_module_size);
        for (const auto& p : roster)
            for (const auto& p1 : roster) {
                int idx = 0;
                const auto pis = env.maps(p.module, p1.module, MapClass::Hom);
                for (const auto& pi : *pis) {
                    if (!is_preceq_onto(pi)) continue;
                    configs.push_back({p.name + "->" + p1.name + "#" + std::to_string(idx++),
                                       p.module, p1.module, pi, entry.system});
                }
            }
    }

    sweep(env, rep, configs, [&](const Config& cfg) {
        auto scope_mods = env.proj_scope(cfg.S);
        auto sub = verify_sch2(cfg.P, cfg.P1, cfg.pi, scope_mods, env.ctx);
        std::vector<Clause> out;
        for (const auto& c : sub.clauses) out.push_back({cfg.id + "/" + c.id, c.anchor, c.verdict, c.witness});
        return out;
    });
    return rep;
}

// ------------------------------------------------------------- vnr-matrix

VerificationReport suite_vnr_matrix(Env& env) {
    VerificationReport rep;
    rep.suite = "vnr-matrix";
    auto S = env.scope.extra_system ? env.scope.extra_system : find_system("sym-bool");
    rep.param("system", S->name);
    FiniteScalars sc{S.get()};
    const int n = S->size();

    auto fill = [&](uint64_t code, int rows, int cols) {
        FMat A(rows, cols);
        for (int i = 0; i < rows * cols; ++i) {
            A.entries[i] = static_cast<Elem>(code % n);
            code /= n;
        }
        return A;
    };

    for (int dim = 1; dim <= 2; ++dim) {
        uint64_t total = 1;
        for (int i = 0; i < dim * dim; ++i) total *= n;
        std::vector<uint8_t> idem_ok(total, 1);
        std::vector<std::string> notes(total);
        parallel_for(static_cast<int>(total), env.scope.exec, [&](int code) {
            FMat A = fill(code, dim, dim);
            if (!is_preceq_idempotent_matrix(sc, A)) return;
            try {
                auto cert = column_space_projectivity(S, A);
                (void)cert;
                // row space via the transpose
                FMat T(dim, dim);
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) T.at(i, j) = A.at(j, i);
                auto rcert = column_space_projectivity(S, T);
                (void)rcert;
            } catch (const std::exception& e) {
                idem_ok[code] = 0;
                notes[code] = e.what();
            }
        });
        int idem_count = 0;
        std::string w;
        for (uint64_t c = 0; c < total; ++c) {
            if (!idem_ok[c] && w.empty()) w = notes[c];
            FMat A = fill(c, dim, dim);
            if (is_preceq_idempotent_matrix(sc, A)) ++idem_count;
        }
        rep.add("colspace/" + std::to_string(dim) + "x" + std::to_string(dim), "kertriv1",
                w.empty() ? Verdict::Pass : Verdict::Fail,
                w.empty() ? "idempotents=" + std::to_string(idem_count) : w);
    }

    // von Neumann regular pairs over every shape up to 2x2
    for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k) {
            uint64_t ta = 1, tb = 1;
            for (int i = 0; i < m * k; ++i) ta *= n;
            for (int i = 0; i < m * k; ++i) tb *= n;
            int vnr_pairs = 0;
            std::string w;
            std::vector<uint8_t> fails(ta, 0);
            std::vector<int> counts(ta, 0);
            std::vector<std::string> notes(ta);
            std::vector<std::set<std::vector<Elem>>> products(ta);
            parallel_for(static_cast<int>(ta), env.scope.exec, [&](int ca) {
                FMat A = fill(ca, m, k);
                for (uint64_t cb = 0; cb < tb; ++cb) {
                    FMat B = fill(cb, k, m);
                    if (!is_preceq_vnr(sc, A, B)) continue;
                    ++counts[ca];
                    FMat AB = matrix_mul(sc, A, B);
                    if (!is_preceq_idempotent_matrix(sc, AB)) {
                        fails[ca] = 1;
                        notes[ca] = "AB not preceq-idempotent";
                        return;
                    }
                    products[ca].insert(AB.entries);
                }
            });
            std::set<std::vector<Elem>> unique_products;
            for (uint64_t ca = 0; ca < ta; ++ca) {
                vnr_pairs += counts[ca];
                if (fails[ca] && w.empty()) w = notes[ca];
                unique_products.insert(products[ca].begin(), products[ca].end());
            }
            if (w.empty()) {
                const std::vector<std::vector<Elem>> todo(unique_products.begin(),
                                                          unique_products.end());
                std::vector<std::string> bad(todo.size());
                parallel_for(static_cast<int>(todo.size()), env.scope.exec, [&](int i) {
                    FMat AB(m, m);
                    AB.entries = todo[i];
                    try {
                        auto cert = column_space_projectivity(S, AB);
                        (void)cert;
                    } catch (const std::exception& e) {
                        bad[i] = e.what();
                    }
                });
                for (const auto& note : bad)
                    if (!note.empty() && w.empty()) w = note;
            }
            rep.add("vnr/" + std::to_string(m) + "x" + std::to_string(k), "vNr",
                    w.empty() ? Verdict::Pass : Verdict::Fail,
                    w.empty() ? "pairs=" + std::to_string(vnr_pairs) : w);
        }

    // exploratory: does the column space of AB match the column space of A?
    {
        const int m = 2, k = 2;
        uint64_t ta = 1;
        for (int i = 0; i < m * k; ++i) ta *= n;
        auto F = free_module(S, k);
        auto F2 = free_module(S, m);
        std::vector<int> equal_slots(ta, 0), diff_slots(ta, 0);
        parallel_for(static_cast<int>(ta), env.scope.exec, [&](int ca) {
            FMat A = fill(ca, m, k);
            for (uint64_t cb = 0; cb < ta; ++cb) {
                FMat B = fill(cb, k, m);
                if (!is_preceq_vnr(sc, A, B)) continue;
                std::set<Elem> imA, imAB;
                FMat AB = matrix_mul(sc, A, B);
                for (Elem v = 0; v < F->size(); ++v) imA.insert(apply_matrix(*S, A, *F, v));
                for (Elem v = 0; v < F2->size(); ++v) imAB.insert(apply_matrix(*S, AB, *F2, v));
                ++(imA == imAB ? equal_slots[ca] : diff_slots[ca]);
            }
        });
        int equal = 0, different = 0;
        for (uint64_t ca = 0; ca < ta; ++ca) {
            equal += equal_slots[ca];
            different += diff_slots[ca];
        }
        rep.add("colspace-alignment", "vNR remark", Verdict::Pass,
                "equal=" + std::to_string(equal) + " different=" + std::to_string(different));
    }

    // supertropical family: identity plus an idempotent matrix
    {
        MaxPlusSystem st;
        std::vector<STElem> window;
        window.push_back(st.zero());
        for (int v = -4; v <= 4; ++v) {
            window.push_back({STElem::Tangible, v});
            window.push_back({STElem::Ghost, v});
        }
        const int wn = static_cast<int>(window.size());
        std::string w;
        int families = 0;
        for (int dim = 1; dim <= 2; ++dim) {
            const int cells = dim * dim;
            uint64_t total = 1;
            for (int i = 0; i < cells; ++i) total *= wn;
            std::vector<uint8_t> bad(total, 0);
            std::vector<int> counts(total, 0);
            parallel_for(static_cast<int>(total), env.scope.exec, [&](int code) {
                STMat A(dim, dim);
                uint64_t c = code;
                for (int i = 0; i < cells; ++i) {
                    A.entries[i] = window[c % wn];
                    c /= wn;
                }
                STMat AA = matrix_mul(st, A, A);
                if (!(AA.entries == A.entries)) return;  // not multiplicatively idempotent
                ++counts[code];
                STMat IA = identity_matrix(st, dim);
                for (int i = 0; i < cells; ++i) IA.entries[i] = st.add(IA.entries[i], A.entries[i]);
                if (!is_preceq_idempotent_matrix(st, IA)) bad[code] = 1;
            });
            for (uint64_t c = 0; c < total; ++c) {
                families += counts[c];
                if (bad[c] && w.empty()) w = "window matrix index " + std::to_string(c);
            }
        }
        rep.add("idemproj-family", "idemproj", w.empty() ? Verdict::Pass : Verdict::Fail,
                w.empty() ? "idempotents=" + std::to_string(families) : w);
    }
    return rep;
}

// -------------------------------------------------------------- dual-basis

VerificationReport suite_dual_basis(Env& env, bool succ) {
    VerificationReport rep;
    rep.suite = succ ? "dual-basis-succ" : "dual-basis";
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    struct Config {
        std::string id;
        ModulePtr P;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems)
        for (const auto& e : env.roster(entry.system, env.scope.max_module_size))
            configs.push_back({e.name, e.module});

    sweep(env, rep, configs, [&](const Config& cfg) {
        std::vector<Clause> out;
        const auto kinds = succ ? std::vector<ProjKind>{ProjKind::Succeq}
                                : std::vector<ProjKind>{ProjKind::PreceqH, ProjKind::H};
        for (ProjKind k : kinds) {
            const std::string anchor = succ ? "Dualbas1" : "Dualbas";
            const std::string id = cfg.id + "/" + proj_kind_name(k);
            DualBasisResult basis;
            try {
                basis = dual_basis(cfg.P, cfg.P->tangibles(), k, env.ctx);
            } catch (const std::invalid_argument& e) {
                out.push_back({id, anchor, Verdict::Skipped, e.what()});
                continue;
            }
            auto proj = env.proj(cfg.P, k);
            if (basis.status == SearchStatus::Inconclusive ||
                proj.verdict == VerdictKind::Inconclusive) {
                out.push_back({id, anchor, Verdict::Inconclusive, "budget"});
                continue;
            }
            const bool agree = (basis.status == SearchStatus::Found) ==
                               (proj.verdict == VerdictKind::True);
            out.push_back({id, anchor, agree ? Verdict::Pass : Verdict::Fail,
                           std::string("basis=") +
                               (basis.status == SearchStatus::Found ? "found" : "none") +
                               " projective=" +
                               (proj.verdict == VerdictKind::True ? "true" : "false")});
        }
        return out;
    });
    return rep;
}

// ------------------------------------------------------------ trsh family

VerificationReport suite_trsh_family(Env& env, const std::string& which) {
    VerificationReport rep;
    rep.suite = which;
    rep.param("max-module-size", std::to_string(env.scope.max_module_size));

    struct Config {
        std::string id;
        MapTable f1, f2;
        std::shared_ptr<const FiniteSystem> S;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems) {
        auto roster = env.roster(entry.system, env.scope.max_module_size);
        for (const auto& p1 : roster)
            for (const auto& p2 : roster)
                for (const auto& mt : roster) {
                    const MapClass cls = which == "trsh" ? MapClass::Preceq : MapClass::Hom;
                    auto f1s = env.maps(p1.module, mt.module, cls);
                    auto f2s = env.maps(p2.module, mt.module, cls);
                    int idx = 0;
                    for (const auto& f1 : *f1s)
                        for (const auto& f2 : *f2s) {
                            if (which == "trsh" && (!is_onto(f1) || !is_onto(f2))) continue;
                            if (which == "trsh118" && !is_onto(f2)) continue;
                            if (which == "trsh11" && !is_preceq_onto(f2)) continue;
                            configs.push_back({p1.name + "," + p2.name + "->" + mt.name + "#" +
                                                   std::to_string(idx++),
                                               f1, f2, entry.system});
                        }
                }
    }

    sweep(env, rep, configs, [&](const Config& cfg) {
        VerificationReport sub;
        if (which == "trsh")
            sub = verify_trsh(cfg.f1, cfg.f2, env.proj_scope(cfg.S), env.ctx);
        else if (which == "trsh118")
            sub = verify_trsh118(cfg.f1, cfg.f2, env.proj_scope(cfg.S), env.ctx);
        else
            sub = verify_trsh11(cfg.f1, cfg.f2, env.ctx);
        std::vector<Clause> out;
        for (const auto& c : sub.clauses)
            out.push_back({cfg.id + "/" + c.id, c.anchor, c.verdict, c.witness});
        return out;
    });
    return rep;
}

VerificationReport suite_trsh119_family(Env& env, bool sch29) {
    VerificationReport rep;
    rep.suite = sch29 ? "sch29" : "trsh119";
    const int cap = std::min(env.scope.max_module_size, 3);
    rep.param("max-module-size", std::to_string(cap));

    struct Config {
        std::string id;
        MapTable f, fp, mu;
        std::shared_ptr<const FiniteSystem> S;
    };
    std::vector<Config> configs;
    for (const auto& entry : env.systems) {
        auto roster = env.roster(entry.system, cap);
        for (const auto& p : roster)
            for (const auto& m : roster)
                for (const auto& pp : roster)
                    for (const auto& mp : roster) {
                        auto fs = env.maps(p.module, m.module, MapClass::Preceq);
                        auto fps = env.maps(pp.module, mp.module, MapClass::Hom);
                        auto mus = env.maps(m.module, mp.module, MapClass::Preceq);
                        int idx = 0;
                        for (const auto& f : *fs) {
                            if (!is_preceq_onto(f)) continue;
                            for (const auto& fp : *fps) {
                                if (!is_preceq_onto(fp)) continue;
                                for (const auto& mu : *mus) {
                                    if (!is_preceq_onto(mu)) continue;
                                    configs.push_back({p.name + "/" + pp.name + "/" + m.name +
                                                           "/" + mp.name + "#" +
                                                           std::to_string(idx++),
                                                       f, fp, mu, entry.system});
                                }
                            }
                        }
                    }
    }

    sweep(env, rep, configs, [&](const Config& cfg) {
        auto sub = sch29 ? verify_sch29(cfg.f, cfg.fp, cfg.mu, env.proj_scope(cfg.S), env.ctx)
                         : verify_trsh119(cfg.f, cfg.fp, cfg.mu, env.proj_scope(cfg.S), env.ctx);
        std::vector<Clause> out;
        for (const auto& c : sub.clauses)
            out.push_back({cfg.id + "/" + c.id, c.anchor, c.verdict, c.witness});
        return out;
    });
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "axioms",       "lemma-3.14",  "splitdir",   "free-projective", "epicspl",
        "epicspl-h",    "epicspl-succ", "proj-direct-sum", "projspl",   "retractlift",
        "sch2",         "vnr-matrix",  "dual-basis", "dual-basis-succ", "hyp7",
        "trsh",         "trsh118",     "trsh11",     "trsh119",         "sch29"};
    return names;
}

VerificationReport run_suite(const std::string& name, const Scope& scope) {
    Env env(scope);
    VerificationReport rep;
    if (name == "axioms")
        rep = suite_axioms(env);
    else if (name == "hyp7")
        rep = suite_hyp7(env);
    else if (name == "lemma-3.14")
        rep = suite_lemma314(env);
    else if (name == "splitdir")
        rep = suite_splitdir(env);
    else if (name == "free-projective")
        rep = suite_free_projective(env);
    else if (name == "epicspl" || name == "epicspl-h" || name == "epicspl-succ")
        rep = suite_epicspl(env, name);
    else if (name == "proj-direct-sum")
        rep = suite_proj_direct_sum(env);
    else if (name == "projspl")
        rep = suite_projspl(env);
    else if (name == "retractlift")
        rep = suite_retractlift(env);
    else if (name == "sch2")
        rep = suite_sch2(env);
    else if (name == "vnr-matrix")
        rep = suite_vnr_matrix(env);
    else if (name == "dual-basis")
        rep = suite_dual_basis(env, false);
    else if (name == "dual-basis-succ")
        rep = suite_dual_basis(env, true);
    else if (name == "trsh" || name == "trsh118" || name == "trsh11")
        rep = suite_trsh_family(env, name);
    else if (name == "trsh119")
        rep = suite_trsh119_family(env, false);
    else if (name == "sch29")
        rep = suite_trsh119_family(env, true);
    else
        throw std::invalid_argument("unknown suite: " + name);

    rep.param("budget", std::to_string(scope.budget));
    if (env.budget.exhausted() && rep.count(Verdict::Inconclusive) == 0)
        rep.add("budget", "", Verdict::Inconclusive, "enumeration budget exhausted");
    return rep;
}

}  // namespace sysmod
