#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sysmod/system.hpp"

namespace sysmod {

/// A finite module carrier over a FiniteSystem. The action table covers
/// every scalar; constructors extend tangible-scalar actions additively.
struct SystemicModule {
    std::string name;
    std::shared_ptr<const FiniteSystem> scalars;
    std::vector<std::string> elem_names;
    Elem zero = 0;
    std::vector<Elem> add_tab;  // n*n
    std::vector<Elem> act_tab;  // |scalars| * n
    std::vector<Elem> neg_tab;
    std::vector<uint8_t> tangible;
    Rel surpass;
    SurpassSpec surpass_spec = SurpassSpec::Circ;
    std::vector<Elem> null_list;  // designated null set when surpass_spec == Null
    std::vector<Elem> gens;       // declared generator list (defaults to tangibles)

    int size() const { return static_cast<int>(elem_names.size()); }
    Elem add(Elem a, Elem b) const { return add_tab[static_cast<size_t>(a) * size() + b]; }
    Elem act(Elem s, Elem m) const { return act_tab[static_cast<size_t>(s) * size() + m]; }
    Elem neg(Elem a) const { return neg_tab[a]; }
    bool is_tangible(Elem a) const { return tangible[a] != 0; }
    bool leq(Elem a, Elem b) const { return surpass.at(a, b); }
    const std::string& ename(Elem a) const { return elem_names[a]; }
    Elem quasi_zero(Elem a) const { return add(a, neg(a)); }

    std::vector<Elem> tangibles() const;
    std::vector<Elem> generators() const;  // gens if declared, else tangibles
    std::optional<Elem> elem_by_name(const std::string& id) const;

    bool operator==(const SystemicModule& other) const;
};

using ModulePtr = std::shared_ptr<const SystemicModule>;

/// The ground system viewed as a module over itself.
ModulePtr regular_module(std::shared_ptr<const FiniteSystem> S);

/// Free module of the given rank: tuples with componentwise structure,
/// tangibles concentrated in one coordinate, unit basis as generators.
ModulePtr free_module(std::shared_ptr<const FiniteSystem> S, int rank, int size_bound = 4096);

/// Componentwise direct sum. A single part is returned unchanged.
ModulePtr direct_sum(const std::vector<ModulePtr>& parts, int size_bound = 4096);

/// A submodule cut out of a parent carrier, remembering the embedding.
struct Submodule {
    ModulePtr module;
    ModulePtr parent;
    std::vector<Elem> embed;  // submodule index -> parent element

    Elem to_parent(Elem sub) const { return embed[sub]; }
    std::optional<Elem> from_parent(Elem par) const;
};

/// Cuts the given carrier out of the parent. Throws std::invalid_argument
/// when the carrier is not closed under add, scalar action and negation,
/// or omits zero.
Submodule submodule(ModulePtr parent, std::vector<Elem> carrier, const std::string& name);

/// Smallest carrier containing the seed and closed under the module
/// operations (including every scalar action and negation).
std::vector<Elem> submodule_closure(const SystemicModule& M, const std::vector<Elem>& seed);

/// Whether the carrier subset is operation-closed and contains zero.
bool carrier_closed(const SystemicModule& M, const std::vector<Elem>& carrier);

std::vector<Elem> module_null_set(const SystemicModule& M);
std::vector<Elem> module_quasi_zeros(const SystemicModule& M);

/// The null set of M as a submodule (tangibles usually empty).
Submodule null_submodule(ModulePtr M);

Rel module_surpass_circ(const SystemicModule& M);

/// Systemic-module audit: monoid laws, action laws, tangible closure and
/// generation, negation compatibility, surpassing axioms, monotone action.
AxiomReport check_module(const SystemicModule& M);

/// All audit checks pass, including tangible generation; sweeps quantify
/// over these.
bool module_genuine(const SystemicModule& M);

std::string module_witness_string(const SystemicModule& M, const AxiomCheck& check);

}  // namespace sysmod
