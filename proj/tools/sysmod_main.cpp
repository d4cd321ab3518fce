#include <iostream>

#include "CLI11.hpp"
#include "sysmod/suites.hpp"

using namespace sysmod;

namespace {

int exit_for(const VerificationReport& rep, const std::string& format) {
    std::cout << (format == "structured" ? to_structured(rep) : to_text(rep));
    return report_exit_code(rep);
}

VerificationReport audit_report(const std::string& name, const FiniteSystem& S) {
    VerificationReport rep;
    rep.suite = "validate";
    auto audit = check_system(S);
    for (const auto& c : audit.checks)
        rep.add(name + "/" + c.axiom, "Tsyst", c.pass ? Verdict::Pass : Verdict::Fail,
                witness_string(S, c));
    rep.add(name + "/classification", "Tsyst", Verdict::Pass,
            classification_name(audit.classification));
    return rep;
}

VerificationReport module_report(const std::string& name, const SystemicModule& M) {
    VerificationReport rep;
    rep.suite = "validate";
    auto audit = check_module(M);
    for (const auto& c : audit.checks)
        rep.add(name + "/" + c.axiom, "modu2", c.pass ? Verdict::Pass : Verdict::Fail,
                module_witness_string(M, c));
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite workbench for semiring systems, systemic modules and their splitting "
                 "and projectivity theory"};
    app.require_subcommand(1);

    std::string file, format = "text", kind = "preceq-h", check = "idem", mode = "strict";
    std::string suite_name, instance, exec = "parallel";
    std::string f2file;
    int scope_size = 6;
    uint64_t budget = default_budget();

    auto* validate = app.add_subcommand("validate", "parse an instance file and audit it");
    validate->add_option("file", file)->required();
    validate->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

    auto* suite = app.add_subcommand("suite", "run a named verification suite");
    suite->add_option("name", suite_name)->required();
    suite->add_option("--scope", scope_size);
    suite->add_option("--instance", instance);
    suite->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));
    suite->add_option("--budget", budget);
    suite->add_option("--exec", exec)->check(CLI::IsMember({"serial", "parallel"}));

    auto* projective = app.add_subcommand("projective", "projectivity verdict for a module file");
    projective->add_option("file", file)->required();
    projective->add_option("--kind", kind)
        ->check(CLI::IsMember({"plain", "preceq", "preceq-h", "h", "succeq"}));
    projective->add_option("--scope", scope_size);
    projective->add_option("--budget", budget);
    projective->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

    auto* matrix = app.add_subcommand("matrix", "matrix checks over a finite or max-plus carrier");
    matrix->add_option("file", file)->required();
    matrix->add_option("--check", check)->check(CLI::IsMember({"idem", "vnr", "colspace"}));
    matrix->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

    auto* schanuel = app.add_subcommand("schanuel", "pullback verification for two map files");
    schanuel->add_option("f1", file)->required();
    schanuel->add_option("f2", f2file)->required();
    schanuel->add_option("--mode", mode)->check(CLI::IsMember({"strict", "preceq"}));
    schanuel->add_option("--scope", scope_size);
    schanuel->add_option("--budget", budget);
    schanuel->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

    auto* list = app.add_subcommand("list", "built-in instance registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (validate->parsed()) {
            auto inst = parse_instance(read_file(file));
            VerificationReport rep;
            rep.suite = "validate";
            if (inst.system) rep.merge(audit_report("system", *inst.system), "");
            for (const auto& [name, M] : inst.modules) rep.merge(module_report(name, *M), "");
            for (const auto& m : inst.maps) {
                auto cls = classify_map(m.map);
                rep.add("map/" + m.name, "mor", Verdict::Pass,
                        join_names(cls.labels(), ",") + (cls.is_null ? ",null" : "") +
                            (cls.tangible_preserving ? ",tangible-preserving" : "") +
                            (image_tangibles_generate(m.map) ? ",image-tangibles-generate" : ""));
            }
            if (inst.maxplus) {
                MaxPlusSystem st;
                for (const auto& c : check_maxplus_window(st, -8, 8))
                    rep.add("maxplus-st/" + c.axiom, "precmain(ii)",
                            c.pass ? Verdict::Pass : Verdict::Fail, c.witness);
            }
            for (const auto& [name, A] : inst.matrices)
                rep.add("matrix/" + name, "", Verdict::Pass,
                        std::to_string(A.rows) + "x" + std::to_string(A.cols));
            return exit_for(rep, format);
        }

        if (suite->parsed()) {
            Scope scope;
            scope.max_module_size = scope_size;
            scope.budget = budget;
            scope.exec = exec == "serial" ? Exec::Serial : Exec::Parallel;
            if (!instance.empty()) {
                if (is_known_system(instance) || instance == "maxplus-st") {
                    scope.systems = {instance};
                } else {
                    auto inst = parse_instance(read_file(instance));
                    if (!inst.system) throw std::runtime_error("instance file has no system");
                    scope.extra_system = inst.system;
                }
            }
            return exit_for(run_suite(suite_name, scope), format);
        }

        if (projective->parsed()) {
            auto inst = parse_instance(read_file(file));
            ModulePtr P;
            if (!inst.modules.empty())
                P = inst.modules.front().second;
            else if (inst.system)
                P = free_module(inst.system, 1);
            if (!P) throw std::runtime_error("no module in file");
            Budget b(budget);
            SearchCtx ctx{&b, Exec::Parallel};
            ModuleScope ms;
            ms.label = "builtin modules up to size " + std::to_string(scope_size);
            for (const auto& e : builtin_modules(P->scalars, scope_size))
                if (e.genuine) ms.modules.push_back(e.module);
            ProjKind k = kind == "plain"      ? ProjKind::Plain
                         : kind == "preceq"   ? ProjKind::Preceq
                         : kind == "preceq-h" ? ProjKind::PreceqH
                         : kind == "h"        ? ProjKind::H
                                              : ProjKind::Succeq;
            auto v = is_projective(P, k, ms, ctx);
            VerificationReport rep;
            rep.suite = "projective";
            rep.param("kind", kind);
            rep.param("module", P->name);
            if (!v.scope_free && (k == ProjKind::Plain || k == ProjKind::Preceq))
                rep.param("scope", ms.label);
            rep.add("verdict", "precproj",
                    v.verdict == VerdictKind::True    ? Verdict::Pass
                    : v.verdict == VerdictKind::False ? Verdict::Fail
                                                      : Verdict::Inconclusive,
                    v.detail);
            return exit_for(rep, format);
        }

        if (matrix->parsed()) {
            auto inst = parse_instance(read_file(file));
            VerificationReport rep;
            rep.suite = "matrix";
            rep.param("check", check);
            if (inst.maxplus) {
                MaxPlusSystem st;
                if (check != "idem")
                    throw std::runtime_error("only --check idem applies to the max-plus carrier");
                for (const auto& [name, A] : inst.st_matrices)
                    rep.add(name, "4.1.2", is_preceq_idempotent_matrix(st, A) ? Verdict::Pass
                                                                              : Verdict::Fail);
            } else {
                if (inst.matrices.empty()) throw std::runtime_error("no matrix in file");
                FiniteScalars sc{inst.system.get()};
                if (check == "idem") {
                    for (const auto& [name, A] : inst.matrices)
                        rep.add(name, "4.1.2", is_preceq_idempotent_matrix(sc, A) ? Verdict::Pass
                                                                                  : Verdict::Fail);
                } else if (check == "vnr") {
                    if (inst.matrices.size() < 2)
                        throw std::runtime_error("vnr check needs matrices A and B");
                    const auto& A = inst.matrices[0].second;
                    const auto& B = inst.matrices[1].second;
                    const bool vnr = is_preceq_vnr(sc, A, B);
                    rep.add("vnr", "4.1.2", vnr ? Verdict::Pass : Verdict::Fail);
                    if (vnr) {
                        auto AB = matrix_mul(sc, A, B);
                        rep.add("AB-idempotent", "vNr",
                                is_preceq_idempotent_matrix(sc, AB) ? Verdict::Pass : Verdict::Fail);
                    }
                } else {
                    const auto& A = inst.matrices[0].second;
                    try {
                        auto cert = column_space_projectivity(inst.system, A);
                        rep.add("colspace", "kertriv1", Verdict::Pass,
                                "column space size " + std::to_string(cert.colspace.module->size()));
                    } catch (const std::invalid_argument& e) {
                        rep.add("colspace", "kertriv1", Verdict::Fail, e.what());
                    }
                }
            }
            return exit_for(rep, format);
        }

        if (schanuel->parsed()) {
            auto i1 = parse_instance(read_file(file));
            auto i2 = parse_instance(read_file(f2file));
            if (i1.maps.empty() || i2.maps.empty())
                throw std::runtime_error("schanuel needs one map per file");
            const MapTable& f1 = i1.maps.front().map;
            const MapTable& f2 = i2.maps.front().map;
            Budget b(budget);
            SearchCtx ctx{&b, Exec::Parallel};
            ModuleScope ms;
            for (const auto& e : builtin_modules(f1.src->scalars, scope_size))
                if (e.genuine) ms.modules.push_back(e.module);
            VerificationReport rep;
            rep.suite = "schanuel";
            rep.param("mode", mode);
            if (mode == "strict") {
                rep.merge(verify_trsh(f1, f2, ms, ctx), "trsh");
                rep.merge(verify_trsh118(f1, f2, ms, ctx), "trsh118");
            } else {
                rep.merge(verify_trsh11(f1, f2, ctx), "trsh11");
            }
            return exit_for(rep, format);
        }

        if (list->parsed()) {
            for (const auto& e : builtin_systems()) {
                auto audit = check_system(*e.system);
                std::cout << e.name << "  size=" << e.system->size()
                          << "  classification=" << classification_name(audit.classification)
                          << "\n";
                for (const auto& m : builtin_modules(e.system, 1 << 20))
                    std::cout << "  " << m.name << "  size=" << m.module->size()
                              << (m.genuine ? "" : "  (no tangible generation)") << "\n";
            }
            std::cout << "maxplus-st  formula-based max-plus supertropical carrier\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
