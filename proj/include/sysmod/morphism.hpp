#pragma once

#include <optional>
#include <utility>

#include "sysmod/module.hpp"

namespace sysmod {

/// A total map between module carriers.
struct MapTable {
    ModulePtr src, dst;
    std::vector<Elem> tab;
    std::string name;

    Elem operator()(Elem x) const { return tab[x]; }
    bool operator==(const MapTable& o) const { return tab == o.tab; }
};

MapTable identity_map(ModulePtr M);
MapTable zero_map(ModulePtr M, ModulePtr N);
/// b -> b + (-)b.
MapTable quasi_zero_map(ModulePtr M);
/// g after f.
MapTable compose(const MapTable& g, const MapTable& f);
/// Pointwise sum of parallel maps.
MapTable map_add(const MapTable& f, const MapTable& g);
/// x -> x (-) f(x), the standard complement map.
MapTable one_minus(const MapTable& f);
std::string map_string(const MapTable& f);

/// Structure-map classes. Hom is the equality case of the subadditive
/// condition; every class also requires zero, negation, tangible action
/// and monotonicity.
enum class MapClass { Any, Preceq, Succeq, Hom };

struct MorphClass {
    bool zero_ok = false, neg_ok = false, act_ok = false, monotone = false;
    bool add_eq = false, add_sub = false, add_super = false;
    bool is_null = false;             // image inside the target null set
    bool tangible_preserving = false;  // reported separately, never required

    bool hom() const { return zero_ok && neg_ok && act_ok && monotone && add_eq; }
    bool preceq() const { return zero_ok && neg_ok && act_ok && monotone && add_sub; }
    bool succeq() const { return zero_ok && neg_ok && act_ok && monotone && add_super; }
    bool in_class(MapClass c) const;
    std::vector<std::string> labels() const;
};

MorphClass classify_map(const MapTable& f);

using PairSet = std::vector<std::pair<Elem, Elem>>;

/// ker_N: pairs identified by f.
PairSet congruence_kernel(const MapTable& f);
/// ker restricted to pairs whose common image is null.
PairSet null_congruence_kernel(const MapTable& f);

/// Congruence audit for pair sets produced by the kernels: symmetry,
/// transitivity, the null part of the diagonal, operation closure.
bool congruence_ok(const SystemicModule& M, const PairSet& pairs, bool require_full_diagonal);

/// Null-module kernel: closure of the union of all cyclic submodules
/// whose f-image stays inside the target null set.
std::vector<Elem> null_module_kernel(const MapTable& f);

/// Same, but with the target null membership given explicitly (used when
/// the codomain of interest is a subset of the table's codomain).
std::vector<Elem> null_module_kernel_masked(ModulePtr src, const std::vector<Elem>& tab,
                                            const std::vector<uint8_t>& dst_null_mask);

std::vector<Elem> image_preceq(const MapTable& f);
std::vector<Elem> image_succeq(const MapTable& f);

bool is_onto(const MapTable& f);
bool is_preceq_onto(const MapTable& f);
bool is_succeq_onto(const MapTable& f);
bool is_h_onto(const MapTable& f);  // preceq-onto homomorphism

bool is_null_map(const MapTable& f);
bool is_null_monic(const MapTable& f);
bool is_N_monic(const MapTable& f);

enum class QuasiKind { N, Preceq };
bool is_quasi_isomorphism(const MapTable& f, QuasiKind kind);

/// Reported, never required: do the tangible images that land tangibly
/// generate the target?
bool image_tangibles_generate(const MapTable& f);

/// Every scalar combination of the generators (each generator used once
/// with an arbitrary coefficient); the image of the canonical free cover.
std::vector<Elem> generated_cover_image(const SystemicModule& M, const std::vector<Elem>& gens);

/// Each element sits below some scalar combination of the generators.
bool preceq_generates(const std::vector<Elem>& gens, const SystemicModule& M);
/// Each element is exactly a scalar combination of the generators.
bool generates(const std::vector<Elem>& gens, const SystemicModule& M);

}  // namespace sysmod
