#include "sysmod/registry.hpp"

#include <map>
#include <mutex>

#include "sysmod/instances.hpp"

namespace sysmod {

const std::vector<SystemEntry>& builtin_systems() {
    static const std::vector<SystemEntry> entries = [] {
        std::vector<SystemEntry> out;
        auto add = [&out](FiniteSystem s, Classification expected) {
            out.push_back({s.name, std::make_shared<FiniteSystem>(std::move(s)), expected});
        };
        add(make_boolean(), Classification::PseudoTriple);
        add(make_supertrop_boolean(), Classification::TSystem);
        add(symmetrize(make_boolean()), Classification::TSystem);
        add(symmetrize(make_supertrop_boolean()), Classification::TSystem);
        add(make_hypersystem(krasner_hyperfield()), Classification::TSystem);
        add(make_hypersystem(sign_hyperfield()), Classification::TSystem);
        return out;
    }();
    return entries;
}

std::shared_ptr<const FiniteSystem> find_system(const std::string& name) {
    for (const auto& e : builtin_systems())
        if (e.name == name) return e.system;
    return nullptr;
}

bool is_known_system(const std::string& name) { return find_system(name) != nullptr; }

std::vector<SystemEntry> builtin_system_instances() {
    std::vector<SystemEntry> out;
    for (const auto& e : builtin_systems())
        if (at_least_system(e.expected)) out.push_back(e);
    return out;
}

std::vector<ModuleEntry> builtin_modules(const std::shared_ptr<const FiniteSystem>& S,
                                         int max_size) {
    static std::mutex mu;
    static std::map<std::string, std::vector<ModuleEntry>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(S->name);
    if (it == cache.end()) {
        std::vector<ModuleEntry> all;
        auto free1 = free_module(S, 1);
        all.push_back({"free1:" + S->name, free1, module_genuine(*free1)});
        try {
            auto free2 = free_module(S, 2, 256);
            all.push_back({"free2:" + S->name, free2, module_genuine(*free2)});
        } catch (const BoundError&) {
        }
        auto nul = null_submodule(free1);
        auto named = std::make_shared<SystemicModule>(*nul.module);
        named->name = "null1:" + S->name;
        all.push_back({"null1:" + S->name, named, module_genuine(*named)});
        it = cache.emplace(S->name, std::move(all)).first;
    }
    std::vector<ModuleEntry> out;
    for (const auto& e : it->second)
        if (e.module->size() <= max_size) out.push_back(e);
    return out;
}

ModulePtr find_module(const std::string& name) {
    const auto colon = name.find(':');
    if (colon == std::string::npos) return nullptr;
    const std::string sys = name.substr(colon + 1);
    auto S = find_system(sys);
    if (!S) return nullptr;
    for (const auto& e : builtin_modules(S, 1 << 20))
        if (e.name == name) return e.module;
    return nullptr;
}

}  // namespace sysmod
