#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sysmod/core.hpp"

namespace sysmod {

/// How the surpassing relation of an instance was declared. Directive
/// forms are recomputed from the tables on every parse, never stored.
enum class SurpassSpec { Explicit, Circ, Null };

/// A finite ground carrier: total addition/multiplication tables, a
/// tangible subset, a negation table and a surpassing relation.
struct FiniteSystem {
    std::string name;
    std::vector<std::string> elem_names;
    Elem zero = 0;
    Elem one = 0;
    std::vector<Elem> add_tab, mul_tab;  // row-major n*n
    std::vector<Elem> neg_tab;
    std::vector<uint8_t> tangible;
    Rel surpass;
    SurpassSpec surpass_spec = SurpassSpec::Circ;
    std::vector<Elem> null_list;  // designated null set when surpass_spec == Null

    int size() const { return static_cast<int>(elem_names.size()); }
    Elem add(Elem a, Elem b) const { return add_tab[static_cast<size_t>(a) * size() + b]; }
    Elem mul(Elem a, Elem b) const { return mul_tab[static_cast<size_t>(a) * size() + b]; }
    Elem neg(Elem a) const { return neg_tab[a]; }
    bool is_tangible(Elem a) const { return tangible[a] != 0; }
    /// a ⪯ b in the declared surpassing relation.
    bool leq(Elem a, Elem b) const { return surpass.at(a, b); }

    std::vector<Elem> tangibles() const;
    std::optional<Elem> elem_by_name(const std::string& id) const;
    const std::string& ename(Elem a) const { return elem_names[a]; }

    bool operator==(const FiniteSystem& other) const;
};

/// a° = a + (−)a. Throws std::out_of_range on an unknown element id.
Elem quasi_zero(const FiniteSystem& S, Elem a);

/// All quasi-zeros {a° : a in carrier}, deduplicated, in element order.
std::vector<Elem> quasi_zero_set(const FiniteSystem& S);

/// The null set {a : 0 ⪯ a} of the declared relation.
std::vector<Elem> null_set(const FiniteSystem& S);

/// The canonical relation a1 ⪯ a2 iff a2 = a1 + b° for some b.
Rel build_surpass_circ(const FiniteSystem& S);

/// b ⪯ b' iff b + c = b' for some designated null element c.
Rel build_surpass_null(const FiniteSystem& S, const std::vector<Elem>& null_elems);

/// Existential set extension: for each s in lhs there is s' in rhs with s ⪯ s'.
bool preceq_sets(const FiniteSystem& S, const std::vector<Elem>& lhs, const std::vector<Elem>& rhs);

enum class Classification { NotPseudoTriple, PseudoTriple, Triple, System, TSystem };

const char* classification_name(Classification c);
bool at_least_system(Classification c);

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::vector<Elem> witness;  // offending tuple, empty on pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    Classification classification = Classification::NotPseudoTriple;

    bool all_passed() const;
    const AxiomCheck* find(const std::string& axiom) const;
    std::vector<std::string> failed() const;
};

/// Full audit: pseudo-triple axioms, triple axioms, unique negation,
/// surpassing axioms, tangible surpassing. Failures are data, not errors.
AxiomReport check_system(const FiniteSystem& S, Exec exec = Exec::Serial);

std::string witness_string(const FiniteSystem& S, const AxiomCheck& check);

}  // namespace sysmod
