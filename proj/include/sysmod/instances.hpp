#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sysmod/system.hpp"

namespace sysmod {

/// A finite hyperfield: multivalued addition, single-valued product.
struct FiniteHyperfield {
    std::string name;
    std::vector<std::string> elem_names;
    Elem zero = 0;
    Elem one = 0;
    std::vector<std::vector<Elem>> hyperadd;  // row-major n*n, each cell a sorted nonempty set
    std::vector<Elem> mul_tab;
    std::vector<Elem> hyperneg;

    int size() const { return static_cast<int>(elem_names.size()); }
    const std::vector<Elem>& hadd(Elem a, Elem b) const {
        return hyperadd[static_cast<size_t>(a) * size() + b];
    }
    Elem mul(Elem a, Elem b) const { return mul_tab[static_cast<size_t>(a) * size() + b]; }
    const std::string& ename(Elem a) const { return elem_names[a]; }
};

/// Audits the hyperfield laws; classification is not meaningful here,
/// use all_passed().
AxiomReport check_hyperfield(const FiniteHyperfield& H);

/// The Boolean semiring with identity negation and the quasi-zero relation.
FiniteSystem make_boolean();

/// The three-element supertropical Boolean system {0, 1, nu}.
FiniteSystem make_supertrop_boolean();

/// Pair construction with the twist product and the switch negation.
/// Ignores the negation and surpassing data of the input.
FiniteSystem symmetrize(const FiniteSystem& S);

/// Power-set system generated by the singletons of a hyperfield, with
/// set inclusion as the surpassing relation. Throws BoundError if the
/// closure exceeds size_bound.
FiniteSystem make_hypersystem(const FiniteHyperfield& H, int size_bound = 64);

FiniteHyperfield krasner_hyperfield();
FiniteHyperfield sign_hyperfield();

/// Formula-based supertropical element over max-plus integers.
struct STElem {
    enum Kind : uint8_t { Zero, Tangible, Ghost };
    Kind kind = Zero;
    int64_t value = 0;

    bool operator==(const STElem&) const = default;
};

/// The max-plus supertropical carrier. Laws are spot-checked on a
/// bounded window rather than exhaustively; used by the matrix layer.
struct MaxPlusSystem {
    using Element = STElem;

    STElem zero() const { return {}; }
    STElem one() const { return {STElem::Tangible, 0}; }
    STElem neg(STElem a) const { return a; }
    bool is_tangible(STElem a) const { return a.kind == STElem::Tangible; }

    STElem add(STElem a, STElem b) const;
    STElem mul(STElem a, STElem b) const;  // throws BoundError on overflow
    bool leq(STElem a, STElem b) const;    // quasi-zero-shift relation, decided by rule

    std::string ename(STElem a) const;
    static STElem parse(const std::string& token);  // throws std::invalid_argument
};

/// Factory matching the other instance constructors.
MaxPlusSystem make_supertrop_maxplus();

struct NamedCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;
};

/// Sampled law audit on the window [lo, hi] of values.
std::vector<NamedCheck> check_maxplus_window(const MaxPlusSystem& S, int lo, int hi);

}  // namespace sysmod
