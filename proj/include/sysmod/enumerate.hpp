#pragma once

#include <functional>

#include "sysmod/morphism.hpp"

namespace sysmod {

struct SearchCtx {
    Budget* budget = nullptr;
    Exec exec = Exec::Serial;
};

struct EnumOptions {
    MapClass cls = MapClass::Preceq;
    bool require_injective = false;
    size_t limit = SIZE_MAX;
    /// Incremental constraint on (x, f(x)), checked at assignment time.
    std::function<bool(Elem, Elem)> pointwise;
    /// Constraint on complete tables (e.g. ontoness).
    std::function<bool(const std::vector<Elem>&)> final_filter;
};

struct EnumResult {
    std::vector<MapTable> maps;  // lexicographic by table
    bool complete = true;        // whole space visited
    bool budget_exhausted = false;

    bool found() const { return !maps.empty(); }
};

/// Streams every total map src -> dst of the requested class, pruned by
/// zero preservation, negation equivariance, tangible-action
/// equivariance and (for homomorphisms) additivity propagation on partial
/// assignments. An incomplete enumeration must be treated as
/// inconclusive by callers, never as "none exists".
EnumResult enumerate_maps(ModulePtr src, ModulePtr dst, const EnumOptions& opt,
                          const SearchCtx& ctx);

/// Convenience: all morphisms of a class, complete enumeration expected.
std::vector<MapTable> all_maps(ModulePtr src, ModulePtr dst, MapClass cls, const SearchCtx& ctx);

}  // namespace sysmod
