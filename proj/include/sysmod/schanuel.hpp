#pragma once

#include "sysmod/projective.hpp"

namespace sysmod {

enum class PullbackMode { Strict, Preceq };

/// The fiber construction over a shared target: pairs whose images agree
/// (Strict) or compare (Preceq), with the restricted projections.
struct Pullback {
    ModulePtr P;
    ModulePtr sum;             // source1 + source2
    std::vector<Elem> embed;   // P index -> sum index
    MapTable pi1, pi2;         // restricted projections
    PullbackMode mode;
};

/// Throws std::invalid_argument on mismatched targets or a Preceq mode
/// request with non-homomorphism legs; std::domain_error when the
/// carrier fails the operation-closure audit.
Pullback make_pullback(const MapTable& f1, const MapTable& f2, PullbackMode mode);

/// Does the declared surpassing relation coincide with the null-shift
/// relation b <= b + c over the module's null set?
bool module_surpass_is_null_based(const SystemicModule& M);

VerificationReport verify_trsh(const MapTable& f1, const MapTable& f2, const ModuleScope& scope,
                               const SearchCtx& ctx);
VerificationReport verify_trsh118(const MapTable& f1, const MapTable& f2,
                                  const ModuleScope& scope, const SearchCtx& ctx);
VerificationReport verify_trsh11(const MapTable& f1, const MapTable& f2, const SearchCtx& ctx);
VerificationReport verify_trsh119(const MapTable& f, const MapTable& fp, const MapTable& mu,
                                  const ModuleScope& scope, const SearchCtx& ctx);
VerificationReport verify_sch29(const MapTable& f, const MapTable& fp, const MapTable& mu,
                                const ModuleScope& scope, const SearchCtx& ctx);

}  // namespace sysmod
