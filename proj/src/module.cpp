#include "sysmod/module.hpp"

#include <algorithm>
#include <map>

namespace sysmod {

std::vector<Elem> SystemicModule::tangibles() const {
    std::vector<Elem> out;
    for (Elem a = 0; a < size(); ++a)
        if (tangible[a]) out.push_back(a);
    return out;
}

std::vector<Elem> SystemicModule::generators() const { return gens.empty() ? tangibles() : gens; }

std::optional<Elem> SystemicModule::elem_by_name(const std::string& id) const {
    for (Elem a = 0; a < size(); ++a)
        if (elem_names[a] == id) return a;
    return std::nullopt;
}

bool SystemicModule::operator==(const SystemicModule& other) const {
    return elem_names == other.elem_names && zero == other.zero && add_tab == other.add_tab &&
           act_tab == other.act_tab && neg_tab == other.neg_tab && tangible == other.tangible &&
           surpass == other.surpass && *scalars == *other.scalars;
}

ModulePtr regular_module(std::shared_ptr<const FiniteSystem> S) {
    auto M = std::make_shared<SystemicModule>();
    M->name = S->name;
    M->scalars = S;
    M->elem_names = S->elem_names;
    M->zero = S->zero;
    M->add_tab = S->add_tab;
    M->act_tab = S->mul_tab;
    M->neg_tab = S->neg_tab;
    M->tangible = S->tangible;
    M->surpass = S->surpass;
    M->surpass_spec = S->surpass_spec;
    M->gens = {S->one};
    return M;
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts, int size_bound) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
    if (parts.size() == 1) return parts[0];
    auto S = parts[0]->scalars;
    size_t total = 1;
    for (const auto& p : parts) {
        if (!(*p->scalars == *S)) throw std::invalid_argument("direct_sum: mixed scalar systems");
        total *= p->size();
        if (total > static_cast<size_t>(size_bound)) throw BoundError("direct_sum: size bound exceeded");
    }
    const int k = static_cast<int>(parts.size());
    const int n = static_cast<int>(total);

    auto M = std::make_shared<SystemicModule>();
    M->scalars = S;
    {
        std::vector<std::string> names;
        for (const auto& p : parts) names.push_back(p->name);
        M->name = join_names(names, "+");
    }
    // mixed-radix packing, first part most significant
    auto decode = [&parts, k](Elem idx) {
        std::vector<Elem> out(k);
        for (int i = k - 1; i >= 0; --i) {
            out[i] = idx % parts[i]->size();
            idx /= parts[i]->size();
        }
        return out;
    };
    auto encode = [&parts, k](const std::vector<Elem>& comp) {
        Elem idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * parts[i]->size() + comp[i];
        return idx;
    };

    M->elem_names.resize(n);
    M->neg_tab.resize(n);
    M->tangible.assign(n, 0);
    M->add_tab.resize(static_cast<size_t>(n) * n);
    M->act_tab.resize(static_cast<size_t>(S->size()) * n);
    M->surpass = Rel(n);

    for (Elem x = 0; x < n; ++x) {
        auto cx = decode(x);
        std::vector<std::string> names;
        std::vector<Elem> negc(k);
        bool tang = false;
        int nonzero = 0;
        for (int i = 0; i < k; ++i) {
            names.push_back(parts[i]->ename(cx[i]));
            negc[i] = parts[i]->neg(cx[i]);
            if (cx[i] != parts[i]->zero) ++nonzero;
            if (parts[i]->is_tangible(cx[i])) tang = true;
        }
        M->elem_names[x] = "(" + join_names(names, ",") + ")";
        M->neg_tab[x] = encode(negc);
        // embedded tangibles: one tangible coordinate, zero elsewhere
        M->tangible[x] = (tang && nonzero == 1) ? 1 : 0;
        for (Elem y = 0; y < n; ++y) {
            auto cy = decode(y);
            std::vector<Elem> sum(k);
            bool le = true;
            for (int i = 0; i < k; ++i) {
                sum[i] = parts[i]->add(cx[i], cy[i]);
                if (!parts[i]->leq(cx[i], cy[i])) le = false;
            }
            M->add_tab[static_cast<size_t>(x) * n + y] = encode(sum);
            M->surpass.set(x, y, le);
        }
        for (Elem s = 0; s < S->size(); ++s) {
            std::vector<Elem> av(k);
            for (int i = 0; i < k; ++i) av[i] = parts[i]->act(s, cx[i]);
            M->act_tab[static_cast<size_t>(s) * n + x] = encode(av);
        }
    }
    {
        std::vector<Elem> zc(k), comp(k);
        for (int i = 0; i < k; ++i) zc[i] = parts[i]->zero;
        M->zero = encode(zc);
        for (int i = 0; i < k; ++i) {
            for (Elem g : parts[i]->generators()) {
                comp = zc;
                comp[i] = g;
                M->gens.push_back(encode(comp));
            }
        }
    }
    M->surpass_spec = SurpassSpec::Explicit;
    return M;
}

ModulePtr free_module(std::shared_ptr<const FiniteSystem> S, int rank, int size_bound) {
    if (rank < 1) throw std::invalid_argument("free_module: rank must be >= 1");
    std::vector<ModulePtr> copies(rank, regular_module(S));
    auto M = direct_sum(copies, size_bound);
    auto named = std::make_shared<SystemicModule>(*M);
    named->name = S->name + "^" + std::to_string(rank);
    return named;
}

std::optional<Elem> Submodule::from_parent(Elem par) const {
    for (size_t i = 0; i < embed.size(); ++i)
        if (embed[i] == par) return static_cast<Elem>(i);
    return std::nullopt;
}

bool carrier_closed(const SystemicModule& M, const std::vector<Elem>& carrier) {
    std::vector<uint8_t> in(M.size(), 0);
    for (Elem a : carrier) in[a] = 1;
    if (!in[M.zero]) return false;
    for (Elem a : carrier) {
        if (!in[M.neg(a)]) return false;
        for (Elem b : carrier)
            if (!in[M.add(a, b)]) return false;
        for (Elem s = 0; s < M.scalars->size(); ++s)
            if (!in[M.act(s, a)]) return false;
    }
    return true;
}

std::vector<Elem> submodule_closure(const SystemicModule& M, const std::vector<Elem>& seed) {
    std::vector<uint8_t> in(M.size(), 0);
    in[M.zero] = 1;
    for (Elem a : seed) in[a] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem a = 0; a < M.size(); ++a) {
            if (!in[a]) continue;
            auto touch = [&](Elem x) {
                if (!in[x]) {
                    in[x] = 1;
                    changed = true;
                }
            };
            touch(M.neg(a));
            for (Elem s = 0; s < M.scalars->size(); ++s) touch(M.act(s, a));
            for (Elem b = a; b >= 0; --b)
                if (in[b]) touch(M.add(a, b));
        }
    }
    std::vector<Elem> out;
    for (Elem a = 0; a < M.size(); ++a)
        if (in[a]) out.push_back(a);
    return out;
}

Submodule submodule(ModulePtr parent, std::vector<Elem> carrier, const std::string& name) {
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (!carrier_closed(*parent, carrier))
        throw std::invalid_argument("submodule: carrier not operation-closed");

    const int n = static_cast<int>(carrier.size());
    std::vector<Elem> pos(parent->size(), -1);
    for (int i = 0; i < n; ++i) pos[carrier[i]] = i;

    auto M = std::make_shared<SystemicModule>();
    M->name = name;
    M->scalars = parent->scalars;
    M->zero = pos[parent->zero];
    M->add_tab.resize(static_cast<size_t>(n) * n);
    M->act_tab.resize(static_cast<size_t>(parent->scalars->size()) * n);
    M->neg_tab.resize(n);
    M->tangible.resize(n);
    M->surpass = Rel(n);
    M->surpass_spec = SurpassSpec::Explicit;
    for (int i = 0; i < n; ++i) {
        M->elem_names.push_back(parent->ename(carrier[i]));
        M->neg_tab[i] = pos[parent->neg(carrier[i])];
        M->tangible[i] = parent->tangible[carrier[i]];
        for (int j = 0; j < n; ++j) {
            M->add_tab[static_cast<size_t>(i) * n + j] = pos[parent->add(carrier[i], carrier[j])];
            M->surpass.set(i, j, parent->leq(carrier[i], carrier[j]));
        }
        for (Elem s = 0; s < parent->scalars->size(); ++s)
            M->act_tab[static_cast<size_t>(s) * n + i] = pos[parent->act(s, carrier[i])];
    }
    Submodule sub;
    sub.module = M;
    sub.parent = parent;
    sub.embed = carrier;
    return sub;
}

std::vector<Elem> module_null_set(const SystemicModule& M) {
    std::vector<Elem> out;
    for (Elem a = 0; a < M.size(); ++a)
        if (M.leq(M.zero, a)) out.push_back(a);
    return out;
}

std::vector<Elem> module_quasi_zeros(const SystemicModule& M) {
    std::vector<uint8_t> seen(M.size(), 0);
    for (Elem a = 0; a < M.size(); ++a) seen[M.quasi_zero(a)] = 1;
    std::vector<Elem> out;
    for (Elem a = 0; a < M.size(); ++a)
        if (seen[a]) out.push_back(a);
    return out;
}

Submodule null_submodule(ModulePtr M) {
    return submodule(M, module_null_set(*M), "null(" + M->name + ")");
}

Rel module_surpass_circ(const SystemicModule& M) {
    Rel rel(M.size());
    for (Elem a = 0; a < M.size(); ++a)
        for (Elem b = 0; b < M.size(); ++b) rel.set(a, M.add(a, M.quasi_zero(b)));
    return rel;
}

AxiomReport check_module(const SystemicModule& M) {
    AxiomReport rep;
    const int n = M.size();
    const FiniteSystem& S = *M.scalars;
    auto push = [&rep](const std::string& axiom, std::vector<Elem> w) {
        rep.checks.push_back({axiom, w.empty(), std::move(w)});
    };

    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (M.add(a, b) != M.add(b, a)) w = {a, b};
        push("madd-commutative", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                for (Elem c = 0; c < n && w.empty(); ++c)
                    if (M.add(M.add(a, b), c) != M.add(a, M.add(b, c))) w = {a, b, c};
        push("madd-associative", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            if (M.add(M.zero, a) != a) w = {a};
        push("madd-identity", w);
    }
    {
        std::vector<Elem> w;
        for (Elem s = 0; s < S.size() && w.empty(); ++s) {
            if (M.act(s, M.zero) != M.zero) w = {s};
            for (Elem a = 0; a < n && w.empty(); ++a)
                for (Elem b = 0; b < n && w.empty(); ++b)
                    if (M.act(s, M.add(a, b)) != M.add(M.act(s, a), M.act(s, b))) w = {s, a, b};
        }
        push("action-distributive", w);
    }
    {
        std::vector<Elem> w;
        for (Elem s = 0; s < S.size() && w.empty(); ++s)
            for (Elem t = 0; t < S.size() && w.empty(); ++t)
                for (Elem a = 0; a < n && w.empty(); ++a) {
                    if (M.act(S.add(s, t), a) != M.add(M.act(s, a), M.act(t, a))) w = {s, t, a};
                    if (M.act(S.mul(s, t), a) != M.act(s, M.act(t, a))) w = {s, t, a};
                }
        for (Elem a = 0; a < n && w.empty(); ++a) {
            if (M.act(S.zero, a) != M.zero) w = {a};
            if (M.act(S.one, a) != a) w = {a};
        }
        push("action-coherent", w);
    }
    {
        std::vector<Elem> w;
        for (Elem s : S.tangibles()) {
            if (!w.empty()) break;
            for (Elem a = 0; a < n && w.empty(); ++a)
                if (M.is_tangible(a) && !M.is_tangible(M.act(s, a))) w = {s, a};
        }
        push("tangible-closure", w);
    }
    {
        std::vector<Elem> w;
        auto seed = M.tangibles();
        if (seed.empty()) {
            if (n > 1) w = {M.zero};
        } else {
            std::vector<uint8_t> in(n, 0);
            in[M.zero] = 1;
            for (Elem a : seed) in[a] = 1;
            bool changed = true;
            while (changed) {
                changed = false;
                for (Elem a = 0; a < n; ++a) {
                    if (!in[a]) continue;
                    for (Elem b = 0; b < n; ++b)
                        if (in[b] && !in[M.add(a, b)]) in[M.add(a, b)] = 1, changed = true;
                }
            }
            for (Elem a = 0; a < n && w.empty(); ++a)
                if (!in[a]) w = {a};
        }
        push("module-tangibles-generate", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a) {
            if (M.neg(M.neg(a)) != a) w = {a};
            if (M.is_tangible(a) != M.is_tangible(M.neg(a))) w = {a};
        }
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (M.neg(M.add(a, b)) != M.add(M.neg(a), M.neg(b))) w = {a, b};
        for (Elem s = 0; s < S.size() && w.empty(); ++s)
            for (Elem a = 0; a < n && w.empty(); ++a)
                if (M.act(S.neg(s), a) != M.neg(M.act(s, a))) w = {s, a};
        push("negation-compatible", w);
    }
    {
        std::vector<Elem> w;
        if (!M.surpass.reflexive()) w = {M.zero};
        if (w.empty()) w = M.surpass.transitivity_witness();
        push("msurpass-preorder", w);
    }
    {
        std::vector<Elem> w;
        for (Elem c = 0; c < n && w.empty(); ++c)
            if (!M.leq(M.zero, M.quasi_zero(c))) w = {c};
        push("msurpass-quasi-zeros-null", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (M.leq(a, b) && !M.leq(M.neg(a), M.neg(b))) w = {a, b};
        push("msurpass-negation-monotone", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b) {
                if (!M.leq(a, b)) continue;
                for (Elem c = 0; c < n && w.empty(); ++c)
                    for (Elem d = 0; d < n && w.empty(); ++d)
                        if (M.leq(c, d) && !M.leq(M.add(a, c), M.add(b, d))) w = {a, b, c, d};
            }
        push("msurpass-additive", w);
    }
    {
        // monotone action over scalar and module comparisons jointly
        std::vector<Elem> w;
        for (Elem s = 0; s < S.size() && w.empty(); ++s)
            for (Elem t = 0; t < S.size() && w.empty(); ++t) {
                if (!S.leq(s, t)) continue;
                for (Elem a = 0; a < n && w.empty(); ++a)
                    for (Elem b = 0; b < n && w.empty(); ++b)
                        if (M.leq(a, b) && !M.leq(M.act(s, a), M.act(t, b))) w = {s, t, a, b};
            }
        push("action-monotone", w);
    }
    rep.classification = rep.all_passed() ? Classification::System : Classification::PseudoTriple;
    return rep;
}

bool module_genuine(const SystemicModule& M) { return check_module(M).all_passed(); }

std::string module_witness_string(const SystemicModule& M, const AxiomCheck& check) {
    if (check.pass) return {};
    std::vector<std::string> parts;
    for (Elem a : check.witness)
        parts.push_back(a >= 0 && a < M.size() ? M.ename(a) : std::to_string(a));
    return "(" + join_names(parts, ",") + ")";
}

}  // namespace sysmod
