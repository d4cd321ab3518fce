#include "sysmod/parser.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "sysmod/registry.hpp"

namespace sysmod {

namespace {

struct Line {
    int no;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{no, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

struct TableBuilder {
    int line_declared = 0;
    std::vector<std::string> names;
    std::map<std::string, Elem> index;
    std::string zero, one;
    std::vector<std::string> tangibles;
    std::map<std::pair<std::string, std::string>, std::string> add, mul;
    std::map<std::string, std::string> neg;
    std::vector<std::pair<std::string, std::string>> surpass_pairs;
    SurpassSpec spec = SurpassSpec::Explicit;
    bool spec_seen = false;
    std::vector<std::string> null_list;

    // module extras
    std::map<std::pair<std::string, std::string>, std::string> action;  // (scalar, elem) -> elem

    void declare(const std::vector<std::string>& toks, int ln) {
        for (const auto& t : toks) {
            if (t == "->" || t == "<=") throw ParseError(ln, "reserved token used as element id");
            if (index.count(t)) throw ParseError(ln, "element redeclared: " + t);
            index[t] = static_cast<Elem>(names.size());
            names.push_back(t);
        }
    }
    Elem resolve(const std::string& t, int ln) const {
        auto it = index.find(t);
        if (it == index.end()) throw ParseError(ln, "unknown element id: " + t);
        return it->second;
    }
};

void expect_arrow(const Line& l, size_t pos) {
    if (l.tokens.size() <= pos || l.tokens[pos] != "->")
        throw ParseError(l.no, "expected '->' in " + l.tokens[0] + " line");
}

void fill_system_tables(const TableBuilder& b, FiniteSystem& S) {
    const int n = static_cast<int>(b.names.size());
    if (n == 0) throw ParseError(b.line_declared, "no elements declared");
    S.elem_names = b.names;
    if (b.zero.empty()) throw ParseError(b.line_declared, "missing zero declaration");
    if (b.one.empty()) throw ParseError(b.line_declared, "missing one declaration");
    S.zero = b.resolve(b.zero, b.line_declared);
    S.one = b.resolve(b.one, b.line_declared);
    S.tangible.assign(n, 0);
    for (const auto& t : b.tangibles) S.tangible[b.resolve(t, b.line_declared)] = 1;
    S.neg_tab.assign(n, -1);
    for (const auto& [a, v] : b.neg) S.neg_tab[b.resolve(a, b.line_declared)] = b.resolve(v, b.line_declared);
    for (int a = 0; a < n; ++a)
        if (S.neg_tab[a] < 0)
            throw ParseError(b.line_declared, "non-total table: neg missing " + b.names[a]);
    auto fill = [&](const std::map<std::pair<std::string, std::string>, std::string>& src,
                    std::vector<Elem>& dst, const char* what) {
        dst.assign(static_cast<size_t>(n) * n, -1);
        for (const auto& [key, v] : src)
            dst[static_cast<size_t>(b.resolve(key.first, b.line_declared)) * n +
                b.resolve(key.second, b.line_declared)] = b.resolve(v, b.line_declared);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (dst[static_cast<size_t>(x) * n + y] < 0)
                    throw ParseError(b.line_declared, std::string("non-total table: ") + what +
                                                          " missing (" + b.names[x] + "," +
                                                          b.names[y] + ")");
    };
    fill(b.add, S.add_tab, "add");
    fill(b.mul, S.mul_tab, "mul");

    S.surpass_spec = b.spec_seen ? b.spec : SurpassSpec::Circ;
    if (S.surpass_spec == SurpassSpec::Circ) {
        S.surpass = build_surpass_circ(S);
    } else if (S.surpass_spec == SurpassSpec::Null) {
        S.null_list.clear();
        for (const auto& t : b.null_list) S.null_list.push_back(b.resolve(t, b.line_declared));
        S.surpass = build_surpass_null(S, S.null_list);
    } else {
        S.surpass = Rel(n);
        for (const auto& [x, y] : b.surpass_pairs)
            S.surpass.set(b.resolve(x, b.line_declared), b.resolve(y, b.line_declared));
    }
}

/// Extends the tangible-scalar action additively to every scalar.
void extend_action(const TableBuilder& b, const FiniteSystem& S, SystemicModule& M, int ln) {
    const int n = M.size();
    M.act_tab.assign(static_cast<size_t>(S.size()) * n, -1);
    for (Elem m = 0; m < n; ++m) M.act_tab[static_cast<size_t>(S.zero) * n + m] = M.zero;
    for (const auto& [key, v] : b.action) {
        auto sIt = S.elem_by_name(key.first);
        if (!sIt) throw ParseError(ln, "unknown scalar id: " + key.first);
        if (!S.is_tangible(*sIt)) throw ParseError(ln, "action rows are for tangible scalars: " + key.first);
        M.act_tab[static_cast<size_t>(*sIt) * n + b.resolve(key.second, ln)] = b.resolve(v, ln);
    }
    for (Elem s : S.tangibles())
        for (Elem m = 0; m < n; ++m)
            if (M.act_tab[static_cast<size_t>(s) * n + m] < 0)
                throw ParseError(ln, "non-total table: action missing (" + S.ename(s) + "," +
                                         M.elem_names[m] + ")");
    // decompose the remaining scalars into sums of tangibles and zero
    std::map<Elem, std::vector<Elem>> decomp;
    decomp[S.zero] = {};
    for (Elem s : S.tangibles()) decomp[s] = {s};
    bool grown = true;
    while (grown) {
        grown = false;
        for (const auto& [have, parts] : std::map<Elem, std::vector<Elem>>(decomp)) {
            for (Elem t : S.tangibles()) {
                const Elem next = S.add(have, t);
                if (!decomp.count(next)) {
                    auto np = parts;
                    np.push_back(t);
                    decomp[next] = np;
                    grown = true;
                }
            }
        }
    }
    for (Elem s = 0; s < S.size(); ++s) {
        if (M.act_tab[static_cast<size_t>(s) * n] >= 0 && s != S.zero) continue;
        auto it = decomp.find(s);
        if (it == decomp.end())
            throw ParseError(ln, "scalar " + S.ename(s) + " is not a sum of tangibles; action undefined");
        for (Elem m = 0; m < n; ++m) {
            Elem acc = M.zero;
            for (Elem t : it->second) acc = M.add(acc, M.act_tab[static_cast<size_t>(t) * n + m]);
            M.act_tab[static_cast<size_t>(s) * n + m] = acc;
        }
    }
}

}  // namespace

ModulePtr ParsedInstance::module_by_ref(const std::string& ref) const {
    for (const auto& [name, mod] : modules)
        if (name == ref) return mod;
    if (!system) return nullptr;
    if (ref == "@free1") return free_module(system, 1);
    if (ref == "@free2") return free_module(system, 2);
    if (ref == "@null1") {
        auto nul = null_submodule(free_module(system, 1));
        auto named = std::make_shared<SystemicModule>(*nul.module);
        named->name = "@null1";
        return named;
    }
    return nullptr;
}

ParsedInstance parse_instance(const std::string& text) {
    const auto lines = tokenize(text);
    ParsedInstance inst;

    TableBuilder sys;
    bool sys_lines = false;

    struct ModuleBlock {
        std::string name;
        int line = 0;
        TableBuilder b;
    };
    struct MapBlock {
        std::string name, src, dst;
        int line = 0;
        std::map<std::string, std::string> sends;
    };
    struct MatrixBlock {
        std::string name;
        int rows = 0, cols = 0, line = 0;
        std::vector<std::vector<std::string>> row_tokens;
    };
    std::vector<ModuleBlock> modules;
    std::vector<MapBlock> maps;
    std::vector<MatrixBlock> matrices;
    enum class Section { System, Module, Map, Matrix } section = Section::System;

    auto need = [](const Line& l, size_t k) {
        if (l.tokens.size() < k) throw ParseError(l.no, "truncated " + l.tokens[0] + " line");
    };

    for (const auto& l : lines) {
        const std::string& head = l.tokens[0];
        if (head == "scalars") {
            need(l, 2);
            inst.scalars_ref = l.tokens[1];
            if (inst.scalars_ref == "maxplus-st") {
                inst.maxplus = true;
            } else {
                auto S = find_system(inst.scalars_ref);
                if (!S) throw ParseError(l.no, "unknown scalar system: " + inst.scalars_ref);
                inst.system = S;
            }
            continue;
        }
        if (head == "module") {
            need(l, 2);
            modules.push_back({l.tokens[1], l.no, {}});
            modules.back().b.line_declared = l.no;
            section = Section::Module;
            continue;
        }
        if (head == "map") {
            need(l, 4);
            expect_arrow(l, 3);
            need(l, 5);
            maps.push_back({l.tokens[1], l.tokens[2], l.tokens[4], l.no, {}});
            section = Section::Map;
            continue;
        }
        if (head == "matrix") {
            need(l, 3);
            const auto& shape = l.tokens[2];
            const auto x = shape.find('x');
            if (x == std::string::npos) throw ParseError(l.no, "matrix shape must be RxC");
            MatrixBlock mb;
            mb.name = l.tokens[1];
            mb.line = l.no;
            try {
                mb.rows = std::stoi(shape.substr(0, x));
                mb.cols = std::stoi(shape.substr(x + 1));
            } catch (...) {
                throw ParseError(l.no, "bad matrix shape: " + shape);
            }
            if (mb.rows < 1 || mb.cols < 1) throw ParseError(l.no, "bad matrix shape: " + shape);
            matrices.push_back(std::move(mb));
            section = Section::Matrix;
            continue;
        }
        if (head == "send") {
            if (section != Section::Map || maps.empty())
                throw ParseError(l.no, "send outside a map block");
            need(l, 4);
            expect_arrow(l, 2);
            maps.back().sends[l.tokens[1]] = l.tokens[3];
            continue;
        }
        if (head == "row") {
            if (section != Section::Matrix || matrices.empty())
                throw ParseError(l.no, "row outside a matrix block");
            matrices.back().row_tokens.emplace_back(l.tokens.begin() + 1, l.tokens.end());
            continue;
        }

        TableBuilder* tb = nullptr;
        std::string key = head;
        if (head.rfind("module-", 0) == 0) {
            if (section != Section::Module || modules.empty())
                throw ParseError(l.no, head + " outside a module block");
            tb = &modules.back().b;
            key = head.substr(7);
        } else if (head == "action") {
            if (section != Section::Module || modules.empty())
                throw ParseError(l.no, "action outside a module block");
            need(l, 5);
            expect_arrow(l, 3);
            modules.back().b.action[{l.tokens[1], l.tokens[2]}] = l.tokens[4];
            continue;
        } else {
            tb = &sys;
            sys_lines = true;
            if (sys.line_declared == 0) sys.line_declared = l.no;
        }

        if (key == "elem") {
            need(l, 2);
            tb->declare({l.tokens.begin() + 1, l.tokens.end()}, l.no);
        } else if (key == "zero") {
            need(l, 2);
            tb->zero = l.tokens[1];
        } else if (key == "one") {
            need(l, 2);
            tb->one = l.tokens[1];
        } else if (key == "tangible") {
            tb->tangibles.insert(tb->tangibles.end(), l.tokens.begin() + 1, l.tokens.end());
        } else if (key == "neg") {
            need(l, 4);
            expect_arrow(l, 2);
            tb->neg[l.tokens[1]] = l.tokens[3];
        } else if (key == "add" || key == "mul") {
            need(l, 5);
            expect_arrow(l, 3);
            auto& table = key == "add" ? tb->add : tb->mul;
            table[{l.tokens[1], l.tokens[2]}] = l.tokens[4];
        } else if (key == "surpass:" || (key == "surpass" && l.tokens.size() >= 2 &&
                                         (l.tokens[1] == "circ" || l.tokens[1] == "null"))) {
            need(l, 2);
            tb->spec_seen = true;
            if (l.tokens[1] == "circ") {
                tb->spec = SurpassSpec::Circ;
            } else if (l.tokens[1] == "null") {
                tb->spec = SurpassSpec::Null;
                tb->null_list.assign(l.tokens.begin() + 2, l.tokens.end());
            } else {
                throw ParseError(l.no, "unknown surpass directive: " + l.tokens[1]);
            }
        } else if (key == "surpass") {
            need(l, 4);
            if (l.tokens[2] != "<=") throw ParseError(l.no, "expected '<=' in surpass line");
            tb->spec_seen = true;
            tb->spec = SurpassSpec::Explicit;
            tb->surpass_pairs.emplace_back(l.tokens[1], l.tokens[3]);
        } else {
            throw ParseError(l.no, "unknown directive: " + head);
        }
    }

    if (sys_lines) {
        if (inst.system) throw ParseError(1, "both inline system and scalars reference given");
        FiniteSystem S;
        S.name = "instance";
        fill_system_tables(sys, S);
        inst.system = std::make_shared<FiniteSystem>(std::move(S));
    }
    if (!inst.system && !inst.maxplus)
        throw ParseError(1, "no system tables and no scalars reference");

    for (auto& mb : modules) {
        if (!inst.system) throw ParseError(mb.line, "module over the formula-based carrier");
        const FiniteSystem& S = *inst.system;
        auto M = std::make_shared<SystemicModule>();
        M->name = mb.name;
        M->scalars = inst.system;
        const auto& b = mb.b;
        const int n = static_cast<int>(b.names.size());
        if (n == 0) throw ParseError(mb.line, "module has no elements");
        M->elem_names = b.names;
        if (b.zero.empty()) throw ParseError(mb.line, "module missing zero");
        M->zero = b.resolve(b.zero, mb.line);
        M->tangible.assign(n, 0);
        for (const auto& t : b.tangibles) M->tangible[b.resolve(t, mb.line)] = 1;
        M->neg_tab.assign(n, -1);
        for (const auto& [a, v] : b.neg) M->neg_tab[b.resolve(a, mb.line)] = b.resolve(v, mb.line);
        for (int a = 0; a < n; ++a)
            if (M->neg_tab[a] < 0)
                throw ParseError(mb.line, "non-total table: module-neg missing " + b.names[a]);
        M->add_tab.assign(static_cast<size_t>(n) * n, -1);
        for (const auto& [keyp, v] : b.add)
            M->add_tab[static_cast<size_t>(b.resolve(keyp.first, mb.line)) * n +
                       b.resolve(keyp.second, mb.line)] = b.resolve(v, mb.line);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (M->add_tab[static_cast<size_t>(x) * n + y] < 0)
                    throw ParseError(mb.line, "non-total table: module-add missing (" + b.names[x] +
                                                  "," + b.names[y] + ")");
        extend_action(b, S, *M, mb.line);
        if (!b.spec_seen || b.spec == SurpassSpec::Circ) {
            M->surpass = module_surpass_circ(*M);
            M->surpass_spec = SurpassSpec::Circ;
        } else if (b.spec == SurpassSpec::Null) {
            Rel rel(n);
            std::vector<Elem> nulls;
            for (const auto& t : b.null_list) nulls.push_back(b.resolve(t, mb.line));
            for (Elem x = 0; x < n; ++x)
                for (Elem c : nulls) rel.set(x, M->add(x, c));
            M->surpass = rel;
            M->surpass_spec = SurpassSpec::Null;
            M->null_list = nulls;
        } else {
            M->surpass = Rel(n);
            for (const auto& [x, y] : b.surpass_pairs)
                M->surpass.set(b.resolve(x, mb.line), b.resolve(y, mb.line));
            M->surpass_spec = SurpassSpec::Explicit;
        }
        inst.modules.emplace_back(mb.name, M);
    }

    for (auto& mb : maps) {
        auto src = inst.module_by_ref(mb.src);
        auto dst = inst.module_by_ref(mb.dst);
        if (!src) throw ParseError(mb.line, "unknown map source: " + mb.src);
        if (!dst) throw ParseError(mb.line, "unknown map target: " + mb.dst);
        MapTable f{src, dst, std::vector<Elem>(src->size(), -1), mb.name};
        for (const auto& [from, to] : mb.sends) {
            auto x = src->elem_by_name(from);
            if (!x) throw ParseError(mb.line, "unknown element id: " + from);
            auto y = dst->elem_by_name(to);
            if (!y) throw ParseError(mb.line, "unknown element id: " + to);
            f.tab[*x] = *y;
        }
        for (Elem x = 0; x < src->size(); ++x)
            if (f.tab[x] < 0)
                throw ParseError(mb.line, "non-total table: send missing " + src->ename(x));
        inst.maps.push_back({mb.name, mb.src, mb.dst, std::move(f)});
    }

    for (auto& mb : matrices) {
        if (static_cast<int>(mb.row_tokens.size()) != mb.rows)
            throw ParseError(mb.line, "matrix " + mb.name + " expects " + std::to_string(mb.rows) +
                                          " rows");
        for (const auto& row : mb.row_tokens)
            if (static_cast<int>(row.size()) != mb.cols)
                throw ParseError(mb.line, "matrix " + mb.name + " row width mismatch");
        if (inst.maxplus) {
            STMat A(mb.rows, mb.cols);
            for (int i = 0; i < mb.rows; ++i)
                for (int j = 0; j < mb.cols; ++j) {
                    try {
                        A.at(i, j) = MaxPlusSystem::parse(mb.row_tokens[i][j]);
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(mb.line, e.what());
                    }
                }
            inst.st_matrices.emplace_back(mb.name, std::move(A));
        } else {
            FMat A(mb.rows, mb.cols);
            for (int i = 0; i < mb.rows; ++i)
                for (int j = 0; j < mb.cols; ++j) {
                    auto e = inst.system->elem_by_name(mb.row_tokens[i][j]);
                    if (!e) throw ParseError(mb.line, "unknown element id: " + mb.row_tokens[i][j]);
                    A.at(i, j) = *e;
                }
            inst.matrices.emplace_back(mb.name, std::move(A));
        }
    }

    if (!inst.matrices.empty() || !inst.st_matrices.empty())
        inst.kind = ParsedInstance::Kind::Matrix;
    else if (!inst.maps.empty())
        inst.kind = ParsedInstance::Kind::Map;
    else if (!inst.modules.empty())
        inst.kind = ParsedInstance::Kind::Module;
    else
        inst.kind = ParsedInstance::Kind::System;
    return inst;
}

std::string serialize_instance(const ParsedInstance& inst) {
    std::string out;
    auto line = [&out](std::initializer_list<std::string> toks) {
        bool first = true;
        for (const auto& t : toks) {
            if (!first) out += " ";
            out += t;
            first = false;
        }
        out += "\n";
    };

    if (!inst.scalars_ref.empty()) {
        line({"scalars", inst.scalars_ref});
    } else if (inst.system) {
        const FiniteSystem& S = *inst.system;
        out += "elem";
        for (const auto& n : S.elem_names) out += " " + n;
        out += "\n";
        line({"zero", S.ename(S.zero)});
        line({"one", S.ename(S.one)});
        if (!S.tangibles().empty()) {
            out += "tangible";
            for (Elem t : S.tangibles()) out += " " + S.ename(t);
            out += "\n";
        }
        for (Elem a = 0; a < S.size(); ++a) line({"neg", S.ename(a), "->", S.ename(S.neg(a))});
        for (Elem a = 0; a < S.size(); ++a)
            for (Elem b = 0; b < S.size(); ++b)
                line({"add", S.ename(a), S.ename(b), "->", S.ename(S.add(a, b))});
        for (Elem a = 0; a < S.size(); ++a)
            for (Elem b = 0; b < S.size(); ++b)
                line({"mul", S.ename(a), S.ename(b), "->", S.ename(S.mul(a, b))});
        if (S.surpass_spec == SurpassSpec::Circ) {
            line({"surpass:", "circ"});
        } else if (S.surpass_spec == SurpassSpec::Null) {
            out += "surpass: null";
            for (Elem c : S.null_list) out += " " + S.ename(c);
            out += "\n";
        } else {
            for (Elem a = 0; a < S.size(); ++a)
                for (Elem b = 0; b < S.size(); ++b)
                    if (S.leq(a, b)) line({"surpass", S.ename(a), "<=", S.ename(b)});
        }
    }

    for (const auto& [name, M] : inst.modules) {
        line({"module", name});
        out += "module-elem";
        for (const auto& n : M->elem_names) out += " " + n;
        out += "\n";
        line({"module-zero", M->ename(M->zero)});
        if (!M->tangibles().empty()) {
            out += "module-tangible";
            for (Elem t : M->tangibles()) out += " " + M->ename(t);
            out += "\n";
        }
        for (Elem a = 0; a < M->size(); ++a)
            line({"module-neg", M->ename(a), "->", M->ename(M->neg(a))});
        for (Elem a = 0; a < M->size(); ++a)
            for (Elem b = 0; b < M->size(); ++b)
                line({"module-add", M->ename(a), M->ename(b), "->", M->ename(M->add(a, b))});
        for (Elem s : M->scalars->tangibles())
            for (Elem a = 0; a < M->size(); ++a)
                line({"action", M->scalars->ename(s), M->ename(a), "->", M->ename(M->act(s, a))});
        if (M->surpass_spec == SurpassSpec::Circ) {
            line({"module-surpass:", "circ"});
        } else if (M->surpass_spec == SurpassSpec::Null) {
            out += "module-surpass: null";
            for (Elem c : M->null_list) out += " " + M->ename(c);
            out += "\n";
        } else {
            for (Elem a = 0; a < M->size(); ++a)
                for (Elem b = 0; b < M->size(); ++b)
                    if (M->leq(a, b)) line({"module-surpass", M->ename(a), "<=", M->ename(b)});
        }
    }

    for (const auto& m : inst.maps) {
        line({"map", m.name, m.src_ref, "->", m.dst_ref});
        for (Elem x = 0; x < m.map.src->size(); ++x)
            line({"send", m.map.src->ename(x), "->", m.map.dst->ename(m.map.tab[x])});
    }

    auto emit_matrix = [&](const std::string& name, int rows, int cols,
                           const std::function<std::string(int, int)>& ename) {
        line({"matrix", name, std::to_string(rows) + "x" + std::to_string(cols)});
        for (int i = 0; i < rows; ++i) {
            out += "row";
            for (int j = 0; j < cols; ++j) out += " " + ename(i, j);
            out += "\n";
        }
    };
    for (const auto& [name, A] : inst.matrices)
        emit_matrix(name, A.rows, A.cols,
                    [&](int i, int j) { return inst.system->ename(A.at(i, j)); });
    MaxPlusSystem st;
    for (const auto& [name, A] : inst.st_matrices)
        emit_matrix(name, A.rows, A.cols, [&](int i, int j) { return st.ename(A.at(i, j)); });

    return out;
}

bool instances_equal(const ParsedInstance& a, const ParsedInstance& b) {
    if (a.kind != b.kind || a.maxplus != b.maxplus || a.scalars_ref != b.scalars_ref) return false;
    if ((a.system == nullptr) != (b.system == nullptr)) return false;
    if (a.system && !(*a.system == *b.system)) return false;
    if (a.modules.size() != b.modules.size() || a.maps.size() != b.maps.size() ||
        a.matrices.size() != b.matrices.size() || a.st_matrices.size() != b.st_matrices.size())
        return false;
    for (size_t i = 0; i < a.modules.size(); ++i) {
        if (a.modules[i].first != b.modules[i].first) return false;
        if (!(*a.modules[i].second == *b.modules[i].second)) return false;
    }
    for (size_t i = 0; i < a.maps.size(); ++i) {
        const auto& x = a.maps[i];
        const auto& y = b.maps[i];
        if (x.name != y.name || x.src_ref != y.src_ref || x.dst_ref != y.dst_ref ||
            x.map.tab != y.map.tab)
            return false;
    }
    for (size_t i = 0; i < a.matrices.size(); ++i) {
        if (a.matrices[i].first != b.matrices[i].first) return false;
        const auto& x = a.matrices[i].second;
        const auto& y = b.matrices[i].second;
        if (x.rows != y.rows || x.cols != y.cols || x.entries != y.entries) return false;
    }
    for (size_t i = 0; i < a.st_matrices.size(); ++i) {
        if (a.st_matrices[i].first != b.st_matrices[i].first) return false;
        const auto& x = a.st_matrices[i].second;
        const auto& y = b.st_matrices[i].second;
        if (x.rows != y.rows || x.cols != y.cols || !(x.entries == y.entries)) return false;
    }
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace sysmod
