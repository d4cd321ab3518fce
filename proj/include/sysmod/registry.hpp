#pragma once

#include "sysmod/module.hpp"

namespace sysmod {

struct SystemEntry {
    std::string name;
    std::shared_ptr<const FiniteSystem> system;
    Classification expected;
};

/// Built-in ground systems in registry order. The formula-based
/// max-plus carrier is not listed here; it has no finite tables.
const std::vector<SystemEntry>& builtin_systems();

std::shared_ptr<const FiniteSystem> find_system(const std::string& name);

/// Built-in systems that audit at least as systems; module sweeps
/// quantify over these.
std::vector<SystemEntry> builtin_system_instances();

struct ModuleEntry {
    std::string name;
    ModulePtr module;
    bool genuine;  // passes the full systemic-module audit
};

/// Built-in module roster over one ground system, capped by carrier
/// size: the free modules of rank one and two and the null submodule.
std::vector<ModuleEntry> builtin_modules(const std::shared_ptr<const FiniteSystem>& S,
                                         int max_size);

/// Roster entry lookup by name of the form kind:system (for example
/// free1:supertrop-B, free2:sym-bool, null1:krasner-hs).
ModulePtr find_module(const std::string& name);

bool is_known_system(const std::string& name);

}  // namespace sysmod
