#pragma once

#include "sysmod/report.hpp"
#include "sysmod/split.hpp"

namespace sysmod {

enum class ProjKind { Plain, Preceq, PreceqH, H, Succeq };

const char* proj_kind_name(ProjKind k);

/// Quantification roster for the scope-relative projectivity kinds.
struct ModuleScope {
    std::vector<ModulePtr> modules;
    std::string label;
};

enum class VerdictKind { True, False, Inconclusive };

struct ProjVerdict {
    VerdictKind verdict = VerdictKind::Inconclusive;
    bool scope_free = false;  // certificate independent of the roster
    std::string detail;
    std::optional<SplitCertificate> certificate;
};

/// The free cover sending basis vectors to the listed generators.
MapTable canonical_cover(ModulePtr P, const std::vector<Elem>& gens, int size_bound = 4096);

/// Projectivity checker. The splitting-criterion kinds (PreceqH, H,
/// Succeq) are decided on the canonical cover and give scope-free
/// positive certificates; Plain and Preceq quantify over the roster.
ProjVerdict is_projective(ModulePtr P, ProjKind kind, const ModuleScope& scope,
                          const SearchCtx& ctx);

struct LiftResult {
    SearchStatus status = SearchStatus::None;
    std::optional<MapTable> lift;
};

/// Finds a lift of f through h with the kind's comparison.
LiftResult lift_search(const MapTable& f, const MapTable& h, ProjKind kind, const SearchCtx& ctx);

struct DualBasisCertificate {
    std::vector<Elem> gens;
    std::vector<MapTable> coords;                  // coordinate maps into the ground system
    std::vector<std::pair<Elem, Elem>> evidence;   // (a, combination of coordinates)
};

struct DualBasisResult {
    SearchStatus status = SearchStatus::None;
    std::optional<DualBasisCertificate> cert;
};

/// Direct dual-basis search: coordinate maps of the demanded class whose
/// generator combination dominates (kind Succeq: is dominated by) every
/// element. Throws std::invalid_argument when gens fail the generation
/// precondition.
DualBasisResult dual_basis(ModulePtr P, const std::vector<Elem>& gens, ProjKind kind,
                           const SearchCtx& ctx);

struct StrongProjResult {
    SearchStatus status = SearchStatus::None;
    std::string detail;
};

/// Searches for a complement making P a direct summand of a free module
/// of rank up to max_rank.
StrongProjResult is_strongly_projective(ModulePtr P, int max_rank, const SearchCtx& ctx,
                                        int size_bound = 4096);

bool modules_isomorphic(ModulePtr A, ModulePtr B, const SearchCtx& ctx);

/// Replays the projective-extension construction: lifts the identity
/// through pi, pushes the complement into the null-module kernel, builds
/// combined lifts for each scope pair and confirms the conclusion.
VerificationReport verify_sch2(ModulePtr P, ModulePtr P1, const MapTable& pi,
                               const ModuleScope& scope, const SearchCtx& ctx);

}  // namespace sysmod
