#include "sysmod/instances.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace sysmod {

namespace {

void finish_with_circ(FiniteSystem& S) {
    S.surpass = build_surpass_circ(S);
    S.surpass_spec = SurpassSpec::Circ;
}

size_t cell(const FiniteSystem& S, Elem a, Elem b) { return static_cast<size_t>(a) * S.size() + b; }

}  // namespace

FiniteSystem make_boolean() {
    FiniteSystem S;
    S.name = "bool";
    S.elem_names = {"0", "1"};
    S.zero = 0;
    S.one = 1;
    S.add_tab = {0, 1, 1, 1};
    S.mul_tab = {0, 0, 0, 1};
    S.neg_tab = {0, 1};
    S.tangible = {0, 1};
    finish_with_circ(S);
    return S;
}

FiniteSystem make_supertrop_boolean() {
    FiniteSystem S;
    S.name = "supertrop-B";
    S.elem_names = {"0", "1", "nu"};
    S.zero = 0;
    S.one = 1;
    // 1+1 = nu, everything else saturates at nu.
    S.add_tab = {0, 1, 2, 1, 2, 2, 2, 2, 2};
    S.mul_tab = {0, 0, 0, 0, 1, 2, 0, 2, 2};
    S.neg_tab = {0, 1, 2};
    S.tangible = {0, 1, 0};
    finish_with_circ(S);
    return S;
}

FiniteSystem symmetrize(const FiniteSystem& S) {
    const int n = S.size();
    const int m = n * n;
    FiniteSystem T;
    T.name = "sym-" + S.name;
    T.elem_names.resize(m);
    T.add_tab.resize(static_cast<size_t>(m) * m);
    T.mul_tab.resize(static_cast<size_t>(m) * m);
    T.neg_tab.resize(m);
    T.tangible.assign(m, 0);

    auto pack = [n](Elem a0, Elem a1) { return a0 * n + a1; };
    for (Elem a0 = 0; a0 < n; ++a0)
        for (Elem a1 = 0; a1 < n; ++a1) {
            const Elem p = pack(a0, a1);
            T.elem_names[p] = "(" + S.ename(a0) + "," + S.ename(a1) + ")";
            T.neg_tab[p] = pack(a1, a0);  // switch map
            if ((S.is_tangible(a0) && a1 == S.zero) || (a0 == S.zero && S.is_tangible(a1)))
                T.tangible[p] = 1;
        }
    T.zero = pack(S.zero, S.zero);
    T.one = pack(S.one, S.zero);

    for (Elem a0 = 0; a0 < n; ++a0)
        for (Elem a1 = 0; a1 < n; ++a1)
            for (Elem b0 = 0; b0 < n; ++b0)
                for (Elem b1 = 0; b1 < n; ++b1) {
                    const Elem p = pack(a0, a1), q = pack(b0, b1);
                    T.add_tab[cell(T, p, q)] = pack(S.add(a0, b0), S.add(a1, b1));
                    // twist product
                    T.mul_tab[cell(T, p, q)] =
                        pack(S.add(S.mul(a0, b0), S.mul(a1, b1)),
                             S.add(S.mul(a0, b1), S.mul(a1, b0)));
                }
    finish_with_circ(T);
    return T;
}

AxiomReport check_hyperfield(const FiniteHyperfield& H) {
    AxiomReport rep;
    const int n = H.size();
    auto push = [&rep](const std::string& axiom, std::vector<Elem> w) {
        rep.checks.push_back({axiom, w.empty(), std::move(w)});
    };

    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (H.hadd(a, b) != H.hadd(b, a)) w = {a, b};
        push("hyperadd-commutative", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            if (H.hadd(H.zero, a) != std::vector<Elem>{a}) w = {a};
        push("hyperadd-zero-identity", w);
    }
    {
        // set-lifted associativity: (a+b)+c = a+(b+c)
        std::vector<Elem> w;
        auto lift = [&H](const std::vector<Elem>& X, Elem c) {
            std::set<Elem> out;
            for (Elem x : X) {
                const auto& cellset = H.hadd(x, c);
                out.insert(cellset.begin(), cellset.end());
            }
            return out;
        };
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                for (Elem c = 0; c < n && w.empty(); ++c) {
                    std::set<Elem> lhs = lift(H.hadd(a, b), c);
                    std::set<Elem> rhs;
                    for (Elem x : H.hadd(b, c)) {
                        const auto& s = H.hadd(a, x);
                        rhs.insert(s.begin(), s.end());
                    }
                    if (lhs != rhs) w = {a, b, c};
                }
        push("hyperadd-associative", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a) {
            std::vector<Elem> partners;
            for (Elem b = 0; b < n; ++b) {
                const auto& s = H.hadd(a, b);
                if (std::find(s.begin(), s.end(), H.zero) != s.end()) partners.push_back(b);
            }
            if (partners.size() != 1 || partners[0] != H.hyperneg[a]) {
                w = {a};
                w.insert(w.end(), partners.begin(), partners.end());
            }
        }
        push("unique-hypernegation", w);
    }
    {
        // reversibility: c in a + b  iff  b in (-a) + c
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                for (Elem c = 0; c < n && w.empty(); ++c) {
                    const auto& ab = H.hadd(a, b);
                    const auto& nc = H.hadd(H.hyperneg[a], c);
                    const bool lhs = std::find(ab.begin(), ab.end(), c) != ab.end();
                    const bool rhs = std::find(nc.begin(), nc.end(), b) != nc.end();
                    if (lhs != rhs) w = {a, b, c};
                }
        push("reversibility", w);
    }
    {
        // mul distributes set-wise: a(b+c) = ab + ac
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                for (Elem c = 0; c < n && w.empty(); ++c) {
                    std::set<Elem> lhs;
                    for (Elem x : H.hadd(b, c)) lhs.insert(H.mul(a, x));
                    const auto& dist = H.hadd(H.mul(a, b), H.mul(a, c));
                    std::set<Elem> rhs(dist.begin(), dist.end());
                    if (lhs != rhs) w = {a, b, c};
                }
        push("mul-distributive", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                for (Elem c = 0; c < n && w.empty(); ++c)
                    if (H.mul(H.mul(a, b), c) != H.mul(a, H.mul(b, c))) w = {a, b, c};
        for (Elem a = 0; a < n && w.empty(); ++a)
            if (H.mul(H.one, a) != a || H.mul(a, H.one) != a) w = {a};
        // nonzero elements form a group
        for (Elem a = 0; a < n && w.empty(); ++a) {
            if (a == H.zero) continue;
            bool has_inverse = false;
            for (Elem b = 0; b < n; ++b)
                if (b != H.zero && H.mul(a, b) == H.one) has_inverse = true;
            if (!has_inverse) w = {a};
        }
        for (Elem a = 0; a < n && w.empty(); ++a)
            if (H.mul(H.zero, a) != H.zero || H.mul(a, H.zero) != H.zero) w = {a};
        push("mul-group", w);
    }
    rep.classification =
        rep.all_passed() ? Classification::TSystem : Classification::NotPseudoTriple;
    return rep;
}

FiniteSystem make_hypersystem(const FiniteHyperfield& H, int size_bound) {
    using SetT = std::vector<Elem>;  // sorted element set of H
    auto set_name = [&H](const SetT& s) {
        std::vector<std::string> parts;
        for (Elem a : s) parts.push_back(H.ename(a));
        return "{" + join_names(parts, ",") + "}";
    };
    auto lift_add = [&H](const SetT& x, const SetT& y) {
        std::set<Elem> out;
        for (Elem a : x)
            for (Elem b : y) {
                const auto& s = H.hadd(a, b);
                out.insert(s.begin(), s.end());
            }
        return SetT(out.begin(), out.end());
    };
    auto lift_mul = [&H](const SetT& x, const SetT& y) {
        std::set<Elem> out;
        for (Elem a : x)
            for (Elem b : y) out.insert(H.mul(a, b));
        return SetT(out.begin(), out.end());
    };

    std::vector<SetT> carrier;
    std::map<SetT, Elem> index;
    auto intern = [&](const SetT& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        carrier.push_back(s);
        index[s] = static_cast<Elem>(carrier.size()) - 1;
        return static_cast<Elem>(carrier.size()) - 1;
    };
    for (Elem a = 0; a < H.size(); ++a) intern({a});
    for (size_t i = 0; i < carrier.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            intern(lift_add(carrier[i], carrier[j]));
            intern(lift_mul(carrier[i], carrier[j]));
            intern(lift_mul(carrier[j], carrier[i]));
            if (static_cast<int>(carrier.size()) > size_bound)
                throw BoundError("hypersystem closure exceeds size bound");
        }
    }

    FiniteSystem S;
    S.name = H.name + "-hs";
    const int m = static_cast<int>(carrier.size());
    for (const auto& s : carrier) S.elem_names.push_back(set_name(s));
    S.zero = index.at({H.zero});
    S.one = index.at({H.one});
    S.add_tab.resize(static_cast<size_t>(m) * m);
    S.mul_tab.resize(static_cast<size_t>(m) * m);
    S.neg_tab.resize(m);
    S.tangible.assign(m, 0);
    S.surpass = Rel(m);
    for (Elem i = 0; i < m; ++i) {
        SetT negd;
        for (Elem a : carrier[i]) negd.push_back(H.hyperneg[a]);
        std::sort(negd.begin(), negd.end());
        S.neg_tab[i] = index.at(negd);
        if (carrier[i].size() == 1 && carrier[i][0] != H.zero) S.tangible[i] = 1;
        for (Elem j = 0; j < m; ++j) {
            S.add_tab[cell(S, i, j)] = index.at(lift_add(carrier[i], carrier[j]));
            S.mul_tab[cell(S, i, j)] = index.at(lift_mul(carrier[i], carrier[j]));
            const bool subset = std::includes(carrier[j].begin(), carrier[j].end(),
                                              carrier[i].begin(), carrier[i].end());
            S.surpass.set(i, j, subset);
        }
    }
    S.surpass_spec = SurpassSpec::Explicit;
    return S;
}

FiniteHyperfield krasner_hyperfield() {
    FiniteHyperfield H;
    H.name = "krasner";
    H.elem_names = {"0", "1"};
    H.zero = 0;
    H.one = 1;
    H.hyperadd = {{0}, {1}, {1}, {0, 1}};
    H.mul_tab = {0, 0, 0, 1};
    H.hyperneg = {0, 1};
    return H;
}

FiniteHyperfield sign_hyperfield() {
    FiniteHyperfield H;
    H.name = "sign";
    H.elem_names = {"0", "p", "m"};
    H.zero = 0;
    H.one = 1;
    // p + p = {p}, m + m = {m}, p + m = {0,p,m}
    H.hyperadd = {{0},       {1}, {2},  //
                  {1},       {1}, {0, 1, 2},
                  {2},       {0, 1, 2}, {2}};
    H.mul_tab = {0, 0, 0, 0, 1, 2, 0, 2, 1};
    H.hyperneg = {0, 2, 1};
    return H;
}

MaxPlusSystem make_supertrop_maxplus() { return {}; }

STElem MaxPlusSystem::add(STElem a, STElem b) const {
    if (a.kind == STElem::Zero) return b;
    if (b.kind == STElem::Zero) return a;
    if (a.value > b.value) return a;
    if (b.value > a.value) return b;
    // equal values: any ghost contamination (or a tangible collision) ghosts the sum
    if (a.kind == STElem::Tangible && b.kind == STElem::Tangible) return {STElem::Ghost, a.value};
    return {STElem::Ghost, a.value};
}

STElem MaxPlusSystem::mul(STElem a, STElem b) const {
    if (a.kind == STElem::Zero || b.kind == STElem::Zero) return {};
    constexpr int64_t kValueBound = int64_t(1) << 60;
    if (std::llabs(a.value) > kValueBound - std::llabs(b.value))
        throw BoundError("max-plus value overflow");
    const auto kind = (a.kind == STElem::Ghost || b.kind == STElem::Ghost) ? STElem::Ghost
                                                                           : STElem::Tangible;
    return {kind, a.value + b.value};
}

bool MaxPlusSystem::leq(STElem a, STElem b) const {
    if (a == b) return true;
    if (b.kind != STElem::Ghost) return false;
    return a.kind == STElem::Zero || a.value <= b.value;
}

std::string MaxPlusSystem::ename(STElem a) const {
    switch (a.kind) {
        case STElem::Zero: return "z";
        case STElem::Tangible: return "t" + std::to_string(a.value);
        case STElem::Ghost: return "g" + std::to_string(a.value);
    }
    return "?";
}

STElem MaxPlusSystem::parse(const std::string& token) {
    if (token == "z") return {};
    if (token.size() >= 2 && (token[0] == 't' || token[0] == 'g')) {
        char* end = nullptr;
        const long long v = std::strtoll(token.c_str() + 1, &end, 10);
        if (end && *end == '\0')
            return {token[0] == 't' ? STElem::Tangible : STElem::Ghost, v};
    }
    throw std::invalid_argument("bad max-plus element token: " + token);
}

std::vector<NamedCheck> check_maxplus_window(const MaxPlusSystem& S, int lo, int hi) {
    std::vector<STElem> window;
    window.push_back(S.zero());
    for (int v = lo; v <= hi; ++v) {
        window.push_back({STElem::Tangible, v});
        window.push_back({STElem::Ghost, v});
    }
    std::vector<NamedCheck> out;
    auto push = [&out, &S](const std::string& axiom, bool pass, STElem a, STElem b, STElem c) {
        NamedCheck nc{axiom, pass, ""};
        if (!pass) nc.witness = "(" + S.ename(a) + "," + S.ename(b) + "," + S.ename(c) + ")";
        out.push_back(nc);
    };

    bool comm = true, aassoc = true, massoc = true, dist = true, nullq = true, addmono = true;
    STElem wa{}, wb{}, wc{};
    for (STElem a : window)
        for (STElem b : window) {
            if (!(S.add(a, b) == S.add(b, a)) && comm) comm = false, wa = a, wb = b;
            for (STElem c : window) {
                if (aassoc && !(S.add(S.add(a, b), c) == S.add(a, S.add(b, c))))
                    aassoc = false, wa = a, wb = b, wc = c;
                if (massoc && !(S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c))))
                    massoc = false, wa = a, wb = b, wc = c;
                if (dist && !(S.mul(a, S.add(b, c)) == S.add(S.mul(a, b), S.mul(a, c))))
                    dist = false, wa = a, wb = b, wc = c;
                if (addmono && S.leq(a, b) && !S.leq(S.add(a, c), S.add(b, c)))
                    addmono = false, wa = a, wb = b, wc = c;
            }
            if (nullq && !S.leq(S.zero(), S.add(a, S.neg(a)))) nullq = false, wa = a, wb = a;
        }
    push("add-commutative", comm, wa, wb, wc);
    push("add-associative", aassoc, wa, wb, wc);
    push("mul-associative", massoc, wa, wb, wc);
    push("distributive", dist, wa, wb, wc);
    push("quasi-zeros-null", nullq, wa, wb, wc);
    push("surpass-additive", addmono, wa, wb, wc);
    return out;
}

}  // namespace sysmod
