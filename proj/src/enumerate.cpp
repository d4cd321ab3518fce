#include "sysmod/enumerate.hpp"

#include <algorithm>

namespace sysmod {

namespace {

struct Searcher {
    const SystemicModule& M;
    const SystemicModule& N;
    const EnumOptions& opt;
    Budget* budget;
    std::vector<Elem> tangible_scalars;
    std::vector<Elem> order;  // generator-major variable order

    bool aborted = false;

    void build_order() {
        std::vector<uint8_t> seen(M.size(), 0);
        auto take = [&](Elem x) {
            if (!seen[x]) {
                seen[x] = 1;
                order.push_back(x);
            }
        };
        take(M.zero);
        for (Elem t : M.tangibles()) take(t);
        for (Elem g : M.generators()) take(g);
        for (Elem x = 0; x < M.size(); ++x) take(x);
    }

    bool structural() const { return opt.cls != MapClass::Any; }

    /// Assign tab[x] = y and run forced propagation; false on conflict.
    bool assign(std::vector<Elem>& tab, std::vector<uint8_t>& used, Elem x0, Elem y0) {
        std::vector<std::pair<Elem, Elem>> queue{{x0, y0}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            if (tab[x] != -1) {
                if (tab[x] != y) return false;
                continue;
            }
            if (opt.pointwise && !opt.pointwise(x, y)) return false;
            if (opt.require_injective) {
                if (used[y]) return false;
                used[y] = 1;
            }
            tab[x] = y;
            if (!structural()) continue;

            // forced images
            queue.emplace_back(M.neg(x), N.neg(y));
            for (Elem s : tangible_scalars) queue.emplace_back(M.act(s, x), N.act(s, y));
            if (opt.cls == MapClass::Hom) {
                for (Elem u = 0; u < M.size(); ++u)
                    if (tab[u] != -1) queue.emplace_back(M.add(x, u), N.add(y, tab[u]));
            }

            // incremental checks against already-assigned values
            for (Elem u = 0; u < M.size(); ++u) {
                if (tab[u] == -1) continue;
                if (M.leq(x, u) && !N.leq(y, tab[u])) return false;
                if (M.leq(u, x) && !N.leq(tab[u], y)) return false;
            }
            if (opt.cls == MapClass::Preceq || opt.cls == MapClass::Succeq) {
                for (Elem u = 0; u < M.size(); ++u) {
                    if (tab[u] == -1) continue;
                    const Elem w = M.add(x, u);
                    if (tab[w] != -1 && !add_ok(tab[w], N.add(y, tab[u]))) return false;
                    for (Elem v = 0; v < M.size(); ++v) {
                        if (tab[v] == -1) continue;
                        if (M.add(u, v) == x && !add_ok(y, N.add(tab[u], tab[v]))) return false;
                    }
                }
            }
        }
        return true;
    }

    bool add_ok(Elem sum_image, Elem parts) const {
        if (opt.cls == MapClass::Preceq) return N.leq(sum_image, parts);
        if (opt.cls == MapClass::Succeq) return N.leq(parts, sum_image);
        return true;
    }

    void dfs(std::vector<Elem> tab, std::vector<uint8_t> used, std::vector<MapTable>& out,
             ModulePtr srcp, ModulePtr dstp, size_t limit, bool& complete) {
        if (aborted || out.size() >= limit) {
            complete = false;
            return;
        }
        Elem next = -1;
        for (Elem x : order)
            if (tab[x] == -1) {
                next = x;
                break;
            }
        if (next == -1) {
            if (accept(tab)) out.push_back(MapTable{srcp, dstp, tab, ""});
            return;
        }
        for (Elem y = 0; y < N.size(); ++y) {
            if (budget && !budget->charge()) {
                aborted = true;
                complete = false;
                return;
            }
            auto t2 = tab;
            auto u2 = used;
            if (!assign(t2, u2, next, y)) continue;
            dfs(std::move(t2), std::move(u2), out, srcp, dstp, limit, complete);
            if (aborted || out.size() >= limit) {
                complete = false;
                return;
            }
        }
    }

    bool accept(const std::vector<Elem>& tab) const {
        if (structural()) {
            // full classification as a guard behind the incremental pruning
            MapTable f{nullptr, nullptr, tab, ""};
            const SystemicModule* m = &M;
            const SystemicModule* n = &N;
            MorphClass c;
            c.zero_ok = tab[m->zero] == n->zero;
            c.neg_ok = c.act_ok = c.monotone = true;
            c.add_eq = c.add_sub = c.add_super = true;
            for (Elem x = 0; x < m->size(); ++x) {
                if (n->neg(tab[x]) != tab[m->neg(x)]) c.neg_ok = false;
                for (Elem s : tangible_scalars)
                    if (tab[m->act(s, x)] != n->act(s, tab[x])) c.act_ok = false;
                for (Elem y = 0; y < m->size(); ++y) {
                    const Elem sum = tab[m->add(x, y)];
                    const Elem parts = n->add(tab[x], tab[y]);
                    if (sum != parts) c.add_eq = false;
                    if (!n->leq(sum, parts)) c.add_sub = false;
                    if (!n->leq(parts, sum)) c.add_super = false;
                    if (m->leq(x, y) && !n->leq(tab[x], tab[y])) c.monotone = false;
                }
            }
            if (!c.in_class(opt.cls)) return false;
        }
        return !opt.final_filter || opt.final_filter(tab);
    }
};

}  // namespace

EnumResult enumerate_maps(ModulePtr src, ModulePtr dst, const EnumOptions& opt,
                          const SearchCtx& ctx) {
    EnumResult result;
    Searcher searcher{*src, *dst, opt, ctx.budget, src->scalars->tangibles(), {}};
    searcher.build_order();

    std::vector<Elem> tab(src->size(), -1);
    std::vector<uint8_t> used(dst->size(), 0);
    if (searcher.structural()) {
        if (!searcher.assign(tab, used, src->zero, dst->zero)) return result;
    }

    Elem first = -1;
    for (Elem x : searcher.order)
        if (tab[x] == -1) {
            first = x;
            break;
        }
    if (first == -1) {
        bool complete = true;
        if (searcher.accept(tab)) result.maps.push_back(MapTable{src, dst, tab, ""});
        result.complete = complete;
        return result;
    }

    const int m = dst->size();
    std::vector<std::vector<MapTable>> branch_maps(m);
    std::vector<uint8_t> branch_complete(m, 1);
    std::atomic<bool> any_abort{false};

    parallel_for(m, ctx.exec, [&](int y) {
        Searcher local{*src, *dst, opt, ctx.budget, searcher.tangible_scalars, searcher.order};
        if (ctx.budget && !ctx.budget->charge()) {
            any_abort = true;
            branch_complete[y] = 0;
            return;
        }
        auto t2 = tab;
        auto u2 = used;
        if (!local.assign(t2, u2, first, y)) return;
        bool complete = true;
        local.dfs(std::move(t2), std::move(u2), branch_maps[y], src, dst, opt.limit, complete);
        if (local.aborted) any_abort = true;
        branch_complete[y] = complete ? 1 : 0;
    });

    size_t total = 0;
    bool limited = false;
    for (int y = 0; y < m; ++y) {
        if (!branch_complete[y]) result.complete = false;
        if (limited) continue;
        for (auto& f : branch_maps[y]) {
            if (total >= opt.limit) {
                limited = true;
                break;
            }
            result.maps.push_back(std::move(f));
            ++total;
        }
    }
    if (limited) result.complete = false;
    if (any_abort) {
        result.complete = false;
        result.budget_exhausted = true;
    }
    // full enumerations come out in canonical table order
    if (opt.limit == SIZE_MAX)
        std::sort(result.maps.begin(), result.maps.end(),
                  [](const MapTable& a, const MapTable& b) { return a.tab < b.tab; });
    return result;
}

std::vector<MapTable> all_maps(ModulePtr src, ModulePtr dst, MapClass cls, const SearchCtx& ctx) {
    EnumOptions opt;
    opt.cls = cls;
    auto r = enumerate_maps(src, dst, opt, ctx);
    return std::move(r.maps);
}

}  // namespace sysmod
