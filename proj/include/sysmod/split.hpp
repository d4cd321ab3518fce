#pragma once

#include <optional>

#include "sysmod/enumerate.hpp"

namespace sysmod {

/// Flavors of splitting: exact, up to the surpassing relation in either
/// direction, and the homomorphism-backed variants.
enum class SplitKind { Split, Preceq, H, Succeq, HSucceq };

const char* split_kind_name(SplitKind k);

struct SplitCertificate {
    MapTable pi, nu;
    SplitKind kind;
    /// Per element b of pi's target: (b, pi(nu(b))).
    std::vector<std::pair<Elem, Elem>> evidence;
};

enum class SearchStatus { Found, None, Inconclusive };

struct SplitSearch {
    SearchStatus status = SearchStatus::None;
    std::optional<SplitCertificate> cert;
};

/// Searches for nu of the kind-matching class with the kind's comparison
/// against pi. Returns the first certificate in canonical table order,
/// a definite None only when enumeration completed, or Inconclusive on
/// budget exhaustion. Throws std::invalid_argument when pi is not of the
/// class the kind presumes.
SplitSearch find_splitting(const MapTable& pi, SplitKind kind, const SearchCtx& ctx);

bool verify_split_certificate(const SplitCertificate& cert);

/// f∘f ⪰ f pointwise.
bool is_preceq_idempotent_map(const MapTable& f);
/// f∘f agrees with f on tangibles.
bool is_T_idempotent_map(const MapTable& f);

/// One component of a decomposition: a carrier inside an ambient module,
/// the projection into it and the section out of it.
struct DirectSumPart {
    std::string name;
    ModulePtr ambient;          // module the carrier lives in
    std::vector<Elem> carrier;  // ambient coordinates
    std::vector<Elem> pi;       // |whole| table, values in ambient coordinates
    std::vector<Elem> nu;       // |carrier| table, values in whole coordinates
};

struct DirectSumCertificate {
    ModulePtr whole;
    std::vector<DirectSumPart> parts;
    SplitKind kind;  // Preceq or H
    int variant = 1;
};

/// Violated conditions (empty when the certificate checks out).
std::vector<std::string> verify_direct_sum(const DirectSumCertificate& cert);

/// Runs the split-decomposition construction for a homomorphism pi that
/// nu preceq-splits (or h-splits): variant one splits off the image of
/// pi, variant two splits off the null-module kernel. Verification
/// failure throws std::logic_error.
std::pair<DirectSumCertificate, DirectSumCertificate> decompose_split(const MapTable& pi,
                                                                      const SplitCertificate& nu);

}  // namespace sysmod
