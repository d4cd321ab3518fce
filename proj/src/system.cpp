#include "sysmod/system.hpp"

#include <algorithm>
#include <set>

namespace sysmod {

std::vector<Elem> FiniteSystem::tangibles() const {
    std::vector<Elem> out;
    for (Elem a = 0; a < size(); ++a)
        if (tangible[a]) out.push_back(a);
    return out;
}

std::optional<Elem> FiniteSystem::elem_by_name(const std::string& id) const {
    for (Elem a = 0; a < size(); ++a)
        if (elem_names[a] == id) return a;
    return std::nullopt;
}

bool FiniteSystem::operator==(const FiniteSystem& other) const {
    return elem_names == other.elem_names && zero == other.zero && one == other.one &&
           add_tab == other.add_tab && mul_tab == other.mul_tab && neg_tab == other.neg_tab &&
           tangible == other.tangible && surpass == other.surpass;
}

Elem quasi_zero(const FiniteSystem& S, Elem a) {
    if (a < 0 || a >= S.size()) throw std::out_of_range("quasi_zero: unknown element id");
    return S.add(a, S.neg(a));
}

std::vector<Elem> quasi_zero_set(const FiniteSystem& S) {
    std::vector<uint8_t> seen(S.size(), 0);
    for (Elem a = 0; a < S.size(); ++a) seen[quasi_zero(S, a)] = 1;
    std::vector<Elem> out;
    for (Elem a = 0; a < S.size(); ++a)
        if (seen[a]) out.push_back(a);
    return out;
}

std::vector<Elem> null_set(const FiniteSystem& S) {
    std::vector<Elem> out;
    for (Elem a = 0; a < S.size(); ++a)
        if (S.leq(S.zero, a)) out.push_back(a);
    return out;
}

Rel build_surpass_circ(const FiniteSystem& S) {
    const int n = S.size();
    Rel rel(n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            const Elem shift = S.add(a, S.add(b, S.neg(b)));
            rel.set(a, shift);
        }
    return rel;
}

Rel build_surpass_null(const FiniteSystem& S, const std::vector<Elem>& null_elems) {
    const int n = S.size();
    Rel rel(n);
    for (Elem b = 0; b < n; ++b)
        for (Elem c : null_elems) rel.set(b, S.add(b, c));
    return rel;
}

bool preceq_sets(const FiniteSystem& S, const std::vector<Elem>& lhs, const std::vector<Elem>& rhs) {
    for (Elem s : lhs) {
        bool covered = false;
        for (Elem t : rhs)
            if (S.leq(s, t)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::NotPseudoTriple: return "not-pseudo-triple";
        case Classification::PseudoTriple: return "pseudo-triple";
        case Classification::Triple: return "triple";
        case Classification::System: return "system";
        case Classification::TSystem: return "T-system";
    }
    return "?";
}

bool at_least_system(Classification c) {
    return c == Classification::System || c == Classification::TSystem;
}

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return &c;
    return nullptr;
}

std::vector<std::string> AxiomReport::failed() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.axiom);
    return out;
}

namespace {

struct Audit {
    const FiniteSystem& S;
    AxiomReport& rep;
    bool stratum_ok = true;

    void push(const std::string& axiom, std::vector<Elem> witness) {
        const bool pass = witness.empty();
        if (!pass) stratum_ok = false;
        rep.checks.push_back({axiom, pass, std::move(witness)});
    }
};

std::vector<Elem> scan_add_commutative(const FiniteSystem& S) {
    for (Elem a = 0; a < S.size(); ++a)
        for (Elem b = a + 1; b < S.size(); ++b)
            if (S.add(a, b) != S.add(b, a)) return {a, b};
    return {};
}

/// Parallel scan over the outer index; the reported witness is the
/// lowest-index violation under both execution policies.
template <class Fn>
std::vector<Elem> scan_rows(const FiniteSystem& S, Exec exec, Fn&& row_witness) {
    const int n = S.size();
    std::vector<std::vector<Elem>> slots(n);
    parallel_for(n, exec, [&](int a) { slots[a] = row_witness(static_cast<Elem>(a)); });
    for (int a = 0; a < n; ++a)
        if (!slots[a].empty()) return slots[a];
    return {};
}

std::vector<Elem> scan_assoc(const FiniteSystem& S, bool additive, Exec exec) {
    const int n = S.size();
    auto op = [&](Elem x, Elem y) { return additive ? S.add(x, y) : S.mul(x, y); };
    return scan_rows(S, exec, [&](Elem a) -> std::vector<Elem> {
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c))) return {a, b, c};
        return {};
    });
}

std::vector<Elem> scan_identity(const FiniteSystem& S, bool additive) {
    const Elem e = additive ? S.zero : S.one;
    for (Elem a = 0; a < S.size(); ++a) {
        const Elem l = additive ? S.add(e, a) : S.mul(e, a);
        const Elem r = additive ? S.add(a, e) : S.mul(a, e);
        if (l != a || r != a) return {a};
    }
    return {};
}

std::vector<Elem> scan_distributive(const FiniteSystem& S, bool left, Exec exec) {
    const int n = S.size();
    return scan_rows(S, exec, [&](Elem a) -> std::vector<Elem> {
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                const Elem lhs = left ? S.mul(a, S.add(b, c)) : S.mul(S.add(a, b), c);
                const Elem rhs = left ? S.add(S.mul(a, b), S.mul(a, c))
                                      : S.add(S.mul(a, c), S.mul(b, c));
                if (lhs != rhs) return {a, b, c};
            }
        return {};
    });
}

std::vector<Elem> scan_absorbing(const FiniteSystem& S) {
    for (Elem a = 0; a < S.size(); ++a)
        if (S.mul(S.zero, a) != S.zero || S.mul(a, S.zero) != S.zero) return {a};
    return {};
}

/// Additive closure of the given seed set; used for the generation axiom.
std::vector<uint8_t> additive_closure(const FiniteSystem& S, const std::vector<Elem>& seed) {
    std::vector<uint8_t> in(S.size(), 0);
    for (Elem a : seed) in[a] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem a = 0; a < S.size(); ++a) {
            if (!in[a]) continue;
            for (Elem b = 0; b < S.size(); ++b) {
                if (!in[b]) continue;
                const Elem c = S.add(a, b);
                if (!in[c]) {
                    in[c] = 1;
                    changed = true;
                }
            }
        }
    }
    return in;
}

}  // namespace

AxiomReport check_system(const FiniteSystem& S, Exec) {
    AxiomReport rep;
    Audit audit{S, rep};
    const int n = S.size();

    // Pseudo-triple stratum: monoid-module laws plus negation-map laws.
    audit.push("add-commutative", scan_add_commutative(S));
    audit.push("add-associative", scan_assoc(S, true));
    audit.push("add-identity", scan_identity(S, true));
    audit.push("mul-associative", scan_assoc(S, false));
    audit.push("mul-identity", scan_identity(S, false));
    audit.push("distributive-left", scan_distributive(S, true));
    audit.push("distributive-right", scan_distributive(S, false));
    audit.push("zero-absorbing", scan_absorbing(S));

    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            if (S.neg(S.neg(a)) != a) w = {a};
        audit.push("negation-involution", w);
    }
    audit.push("negation-fixes-zero",
               S.neg(S.zero) == S.zero ? std::vector<Elem>{} : std::vector<Elem>{S.zero});
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (S.neg(S.add(a, b)) != S.add(S.neg(a), S.neg(b))) w = {a, b};
        audit.push("negation-additive", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a) {
            if (!S.is_tangible(a)) continue;
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (S.neg(S.mul(a, b)) != S.mul(a, S.neg(b))) w = {a, b};
        }
        audit.push("negation-tangible-action", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            if (S.is_tangible(a) != S.is_tangible(S.neg(a))) w = {a};
        audit.push("negation-preserves-tangibles", w);
    }
    const bool pseudo_ok = audit.stratum_ok;

    // Triple stratum.
    audit.stratum_ok = true;
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a) {
            if (!S.is_tangible(a)) continue;
            for (Elem c = 0; c < n; ++c)
                if (quasi_zero(S, c) == a) {
                    w = {a, c};
                    break;
                }
        }
        audit.push("triple-tangibles-avoid-quasi-zeros", w);
    }
    {
        // Degenerate carriers with empty tangible sets stay pseudo-triples.
        std::vector<Elem> w;
        auto seed = S.tangibles();
        if (seed.empty()) {
            w = {S.zero};
        } else {
            seed.push_back(S.zero);
            auto closed = additive_closure(S, seed);
            for (Elem a = 0; a < n; ++a)
                if (!closed[a]) {
                    w = {a};
                    break;
                }
        }
        audit.push("triple-tangibles-generate", w);
    }
    const bool triple_ok = audit.stratum_ok;

    // Unique negation, read against the declared surpassing relation.
    audit.stratum_ok = true;
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a) {
            if (!S.is_tangible(a)) continue;
            std::vector<Elem> partners;
            for (Elem b = 0; b < n; ++b)
                if (S.is_tangible(b) && S.leq(S.zero, S.add(a, b))) partners.push_back(b);
            if (partners.size() != 1 || partners[0] != S.neg(a)) {
                w = {a};
                w.insert(w.end(), partners.begin(), partners.end());
            }
        }
        audit.push("unique-negation", w);
    }
    const bool unique_ok = audit.stratum_ok;

    // Surpassing-relation stratum.
    audit.stratum_ok = true;
    {
        std::vector<Elem> w;
        if (!S.surpass.reflexive())
            for (Elem a = 0; a < n; ++a)
                if (!S.leq(a, a)) {
                    w = {a};
                    break;
                }
        audit.push("surpass-reflexive", w);
    }
    audit.push("surpass-transitive", S.surpass.transitivity_witness());
    {
        std::vector<Elem> w;
        for (Elem c = 0; c < n && w.empty(); ++c)
            if (!S.leq(S.zero, quasi_zero(S, c))) w = {c};
        audit.push("surpass-quasi-zeros-null", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (S.leq(a, b) && !S.leq(S.neg(a), S.neg(b))) w = {a, b};
        audit.push("surpass-negation-monotone", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b) {
                if (!S.leq(a, b)) continue;
                for (Elem c = 0; c < n && w.empty(); ++c)
                    for (Elem d = 0; d < n && w.empty(); ++d)
                        if (S.leq(c, d) && !S.leq(S.add(a, c), S.add(b, d))) w = {a, b, c, d};
            }
        audit.push("surpass-additive", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a) {
            if (!S.is_tangible(a)) continue;
            for (Elem b = 0; b < n && w.empty(); ++b)
                for (Elem c = 0; c < n && w.empty(); ++c)
                    if (S.leq(b, c) && !S.leq(S.mul(a, b), S.mul(a, c))) w = {a, b, c};
        }
        audit.push("surpass-tangible-scaling", w);
    }
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a)
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (S.is_tangible(a) && S.is_tangible(b) && S.leq(a, b) && a != b) w = {a, b};
        audit.push("surpass-tangible-antisymmetry", w);
    }
    const bool surpass_ok = audit.stratum_ok;

    // Tangible surpassing (the T-system condition).
    audit.stratum_ok = true;
    {
        std::vector<Elem> w;
        for (Elem a = 0; a < n && w.empty(); ++a) {
            if (!S.is_tangible(a)) continue;
            for (Elem b = 0; b < n && w.empty(); ++b)
                if (S.leq(b, a) && b != a) w = {b, a};
        }
        audit.push("tangible-surpass-equality", w);
    }
    const bool tsys_ok = audit.stratum_ok;

    if (!pseudo_ok)
        rep.classification = Classification::NotPseudoTriple;
    else if (!triple_ok)
        rep.classification = Classification::PseudoTriple;
    else if (!surpass_ok || !unique_ok)
        rep.classification = Classification::Triple;
    else if (!tsys_ok)
        rep.classification = Classification::System;
    else
        rep.classification = Classification::TSystem;
    return rep;
}

std::string witness_string(const FiniteSystem& S, const AxiomCheck& check) {
    if (check.pass) return {};
    std::vector<std::string> parts;
    for (Elem a : check.witness) parts.push_back(S.ename(a));
    return "(" + join_names(parts, ",") + ")";
}

}  // namespace sysmod
