#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>

#include "sysmod/instances.hpp"
#include "sysmod/parser.hpp"
#include "sysmod/registry.hpp"

using namespace sysmod;

namespace {

std::string instance_dir() {
    if (const char* env = std::getenv("SYSMOD_INSTANCE_DIR")) return env;
    return "instances";
}

}  // namespace

TEST_CASE("the shipped supertropical file parses to the built-in tables") {
    auto inst = parse_instance(read_file(instance_dir() + "/supertrop-B.system"));
    REQUIRE(inst.kind == ParsedInstance::Kind::System);
    auto builtin = make_supertrop_boolean();
    CHECK(*inst.system == builtin);
}

TEST_CASE("a circ directive reproduces the generated relation") {
    auto inst = parse_instance(read_file(instance_dir() + "/sym-bool.system"));
    REQUIRE(inst.system);
    CHECK(inst.system->surpass == build_surpass_circ(*inst.system));
    CHECK(*inst.system == *find_system("sym-bool"));
}

TEST_CASE("missing table rows are semantic errors with positions") {
    const std::string text =
        "elem 0 1\nzero 0\none 1\ntangible 1\nneg 0 -> 0\nneg 1 -> 1\n"
        "add 0 0 -> 0\nadd 0 1 -> 1\nadd 1 0 -> 1\n"  // add 1 1 missing
        "mul 0 0 -> 0\nmul 0 1 -> 0\nmul 1 0 -> 0\nmul 1 1 -> 1\nsurpass: circ\n";
    try {
        parse_instance(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("non-total table") != std::string::npos);
        CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry line numbers") {
    try {
        parse_instance("elem a b\nzero a\nbogus line here\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("round-trip on every shipped instance file") {
    for (const auto& entry : std::filesystem::directory_iterator(instance_dir())) {
        const std::string path = entry.path().string();
        INFO(path);
        auto first = parse_instance(read_file(path));
        const std::string canon = serialize_instance(first);
        auto second = parse_instance(canon);
        CHECK(instances_equal(first, second));
        // canonical form is a fixed point
        CHECK(serialize_instance(second) == canon);
    }
}

TEST_CASE("shipped files are already canonical up to comments") {
    for (const auto& entry : std::filesystem::directory_iterator(instance_dir())) {
        const std::string text = read_file(entry.path().string());
        std::string stripped;
        for (size_t pos = 0; pos < text.size();) {
            size_t eol = text.find('\n', pos);
            if (eol == std::string::npos) eol = text.size();
            const std::string line = text.substr(pos, eol - pos);
            if (!line.empty() && line[0] != '#') stripped += line + "\n";
            pos = eol + 1;
        }
        INFO(entry.path().string());
        CHECK(serialize_instance(parse_instance(text)) == stripped);
    }
}

TEST_CASE("module files parse with the additive action extension") {
    auto inst = parse_instance(read_file(instance_dir() + "/null-supertrop-B.module"));
    REQUIRE(inst.kind == ParsedInstance::Kind::Module);
    REQUIRE(inst.modules.size() == 1);
    auto M = inst.modules.front().second;
    CHECK(M->size() == 2);
    // the ghost scalar acts like the extended sum 1 + 1
    const Elem nu_scalar = *inst.system->elem_by_name("nu");
    const Elem nu_mod = *M->elem_by_name("nu");
    CHECK(M->act(nu_scalar, nu_mod) == nu_mod);
    CHECK(M->act(inst.system->zero, nu_mod) == M->zero);
}

TEST_CASE("map files resolve derived module references") {
    auto inst = parse_instance(read_file(instance_dir() + "/ghost-supertrop-B.map"));
    REQUIRE(inst.kind == ParsedInstance::Kind::Map);
    REQUIRE(inst.maps.size() == 1);
    const auto& f = inst.maps.front().map;
    auto cls = classify_map(f);
    CHECK(cls.hom());
    CHECK(cls.is_null);
}

TEST_CASE("matrix files over both carriers") {
    auto fin = parse_instance(read_file(instance_dir() + "/allpairs-sym-bool.matrix"));
    REQUIRE(fin.kind == ParsedInstance::Kind::Matrix);
    CHECK(fin.matrices.size() == 2);
    auto st = parse_instance(read_file(instance_dir() + "/idem-maxplus.matrix"));
    REQUIRE(st.maxplus);
    REQUIRE(st.st_matrices.size() == 1);
    MaxPlusSystem sys;
    CHECK(st.st_matrices.front().second.at(0, 0) == sys.one());
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(parse_instance("scalars mystery\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("scalars supertrop-B\nmap f @free1 -> @free9\nsend 0 -> 0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("scalars supertrop-B\nmatrix A 2x2\nrow 1 1\nrow 1 oops\n"),
                    ParseError);
}
