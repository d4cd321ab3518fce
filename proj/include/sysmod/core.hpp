#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sysmod {

/// Index of an element inside a finite carrier (declaration order).
using Elem = int;

/// Dense binary relation on a carrier of size n.
struct Rel {
    int n = 0;
    std::vector<uint8_t> bits;

    Rel() = default;
    explicit Rel(int size) : n(size), bits(static_cast<size_t>(size) * size, 0) {}

    bool at(Elem a, Elem b) const { return bits[static_cast<size_t>(a) * n + b] != 0; }
    void set(Elem a, Elem b, bool v = true) { bits[static_cast<size_t>(a) * n + b] = v ? 1 : 0; }

    bool operator==(const Rel&) const = default;

    bool reflexive() const {
        for (Elem a = 0; a < n; ++a)
            if (!at(a, a)) return false;
        return true;
    }
    /// Returns a violating triple (a,b,c) with a<=b, b<=c but not a<=c, or empty.
    std::vector<Elem> transitivity_witness() const {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                if (!at(a, b)) continue;
                for (Elem c = 0; c < n; ++c)
                    if (at(b, c) && !at(a, c)) return {a, b, c};
            }
        return {};
    }
};

/// Execution policy for the sweep kernels. Serial is the reference
/// implementation; Parallel runs the same kernels under OpenMP.
enum class Exec { Serial, Parallel };

/// Deterministic parallel loop: iteration i writes only to slot i of
/// whatever the caller preallocated, so both policies produce identical
/// results.
template <class F>
void parallel_for(int count, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::Parallel && count > 1) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
#else
    (void)exec;
#endif
    for (int i = 0; i < count; ++i) body(i);
}

inline int worker_count(Exec exec) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) return omp_get_max_threads();
#else
    (void)exec;
#endif
    return 1;
}

/// Shared candidate-evaluation budget for enumeration searches.
/// Exhaustion is a verdict ("inconclusive"), never a silent cutoff.
struct Budget {
    uint64_t limit = 10'000'000;
    std::atomic<uint64_t> used{0};

    Budget() = default;
    explicit Budget(uint64_t lim) : limit(lim) {}

    /// Charge k evaluations; false once the budget is gone.
    bool charge(uint64_t k = 1) { return used.fetch_add(k, std::memory_order_relaxed) + k <= limit; }
    bool exhausted() const { return used.load(std::memory_order_relaxed) > limit; }
    void reset() { used.store(0, std::memory_order_relaxed); }
};

/// Default budget, overridable through SYSMOD_BUDGET.
uint64_t default_budget();

struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_names(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace sysmod
