#pragma once

#include "sysmod/matrix.hpp"
#include "sysmod/morphism.hpp"

namespace sysmod {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct ParsedMap {
    std::string name, src_ref, dst_ref;
    MapTable map;
};

/// One instance file: a ground system (inline or by registry reference),
/// optional module blocks, optional map blocks, optional matrices.
struct ParsedInstance {
    enum class Kind { System, Module, Map, Matrix };

    Kind kind = Kind::System;
    std::shared_ptr<const FiniteSystem> system;  // null only for max-plus matrix files
    std::string scalars_ref;                     // registry name when referenced
    bool maxplus = false;
    std::vector<std::pair<std::string, ModulePtr>> modules;
    std::vector<ParsedMap> maps;
    std::vector<std::pair<std::string, FMat>> matrices;
    std::vector<std::pair<std::string, STMat>> st_matrices;

    ModulePtr module_by_ref(const std::string& ref) const;
};

/// Line-oriented grammar; see the shipped instance files. Throws
/// ParseError with a position for syntax and semantic violations.
ParsedInstance parse_instance(const std::string& text);

/// Canonical form: fixed section order, declaration-order tables, one
/// space between tokens. Directive-declared surpassing relations stay
/// directives.
std::string serialize_instance(const ParsedInstance& inst);

bool instances_equal(const ParsedInstance& a, const ParsedInstance& b);

std::string read_file(const std::string& path);

}  // namespace sysmod
