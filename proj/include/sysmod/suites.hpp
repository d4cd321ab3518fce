#pragma once

#include <optional>

#include "sysmod/parser.hpp"
#include "sysmod/registry.hpp"
#include "sysmod/report.hpp"
#include "sysmod/schanuel.hpp"

namespace sysmod {

/// Sweep parameters shared by every named suite.
struct Scope {
    int max_module_size = 6;
    int max_free_rank = 2;
    uint64_t budget = default_budget();
    Exec exec = Exec::Parallel;
    std::vector<std::string> systems;  // empty: every audited built-in
    std::shared_ptr<const FiniteSystem> extra_system;  // replaces the registry when set
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown
/// name.
VerificationReport run_suite(const std::string& name, const Scope& scope);

}  // namespace sysmod
