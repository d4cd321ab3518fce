#include "sysmod/split.hpp"

#include <algorithm>
#include <set>

namespace sysmod {

const char* split_kind_name(SplitKind k) {
    switch (k) {
        case SplitKind::Split: return "split";
        case SplitKind::Preceq: return "preceq-split";
        case SplitKind::H: return "h-split";
        case SplitKind::Succeq: return "succeq-split";
        case SplitKind::HSucceq: return "h-succeq-split";
    }
    return "?";
}

SplitSearch find_splitting(const MapTable& pi, SplitKind kind, const SearchCtx& ctx) {
    const MorphClass cls = classify_map(pi);
    switch (kind) {
        case SplitKind::Split:
            if (!cls.hom() || !is_onto(pi))
                throw std::invalid_argument("find_splitting: pi must be an onto homomorphism");
            break;
        case SplitKind::Preceq:
        case SplitKind::H:
            if (!cls.preceq())
                throw std::invalid_argument("find_splitting: pi must be a preceq-morphism");
            break;
        case SplitKind::Succeq:
        case SplitKind::HSucceq:
            if (!cls.succeq())
                throw std::invalid_argument("find_splitting: pi must be a succeq-morphism");
            break;
    }

    const SystemicModule& N = *pi.dst;
    EnumOptions opt;
    switch (kind) {
        case SplitKind::Split:
        case SplitKind::H:
        case SplitKind::HSucceq: opt.cls = MapClass::Hom; break;
        case SplitKind::Preceq: opt.cls = MapClass::Preceq; break;
        case SplitKind::Succeq: opt.cls = MapClass::Succeq; break;
    }
    opt.limit = 1;
    opt.pointwise = [&pi, &N, kind](Elem x, Elem nux) {
        const Elem round = pi.tab[nux];
        switch (kind) {
            case SplitKind::Split: return round == x;
            case SplitKind::Preceq:
            case SplitKind::H: return N.leq(x, round);
            case SplitKind::Succeq:
            case SplitKind::HSucceq: return N.leq(round, x);
        }
        return false;
    };

    EnumResult r;
    if (kind == SplitKind::Preceq || kind == SplitKind::Succeq) {
        // homomorphism sections qualify and propagate much better: probe
        // the hom-restricted space first, fall back to the full relation
        // classes only when it comes up empty
        EnumOptions probe = opt;
        probe.cls = MapClass::Hom;
        r = enumerate_maps(pi.dst, pi.src, probe, ctx);
        if (!r.found()) r = enumerate_maps(pi.dst, pi.src, opt, ctx);
    } else {
        r = enumerate_maps(pi.dst, pi.src, opt, ctx);
    }
    SplitSearch out;
    if (r.found()) {
        SplitCertificate cert{pi, r.maps.front(), kind, {}};
        cert.nu.name = "nu";
        for (Elem b = 0; b < N.size(); ++b) cert.evidence.emplace_back(b, pi.tab[cert.nu.tab[b]]);
        out.status = SearchStatus::Found;
        out.cert = std::move(cert);
    } else if (r.complete) {
        out.status = SearchStatus::None;
    } else {
        out.status = SearchStatus::Inconclusive;
    }
    return out;
}

bool verify_split_certificate(const SplitCertificate& cert) {
    const SystemicModule& N = *cert.pi.dst;
    const MorphClass nu_cls = classify_map(cert.nu);
    switch (cert.kind) {
        case SplitKind::Split:
        case SplitKind::H:
        case SplitKind::HSucceq:
            if (!nu_cls.hom()) return false;
            break;
        case SplitKind::Preceq:
            if (!nu_cls.preceq()) return false;
            break;
        case SplitKind::Succeq:
            if (!nu_cls.succeq()) return false;
            break;
    }
    for (Elem b = 0; b < N.size(); ++b) {
        const Elem round = cert.pi.tab[cert.nu.tab[b]];
        switch (cert.kind) {
            case SplitKind::Split:
                if (round != b) return false;
                break;
            case SplitKind::Preceq:
            case SplitKind::H:
                if (!N.leq(b, round)) return false;
                break;
            case SplitKind::Succeq:
            case SplitKind::HSucceq:
                if (!N.leq(round, b)) return false;
                break;
        }
    }
    return true;
}

bool is_preceq_idempotent_map(const MapTable& f) {
    for (Elem b = 0; b < f.src->size(); ++b)
        if (!f.src->leq(f.tab[b], f.tab[f.tab[b]])) return false;
    return true;
}

bool is_T_idempotent_map(const MapTable& f) {
    for (Elem b : f.src->tangibles())
        if (f.tab[f.tab[b]] != f.tab[b]) return false;
    return true;
}

namespace {

std::vector<Elem> image_set(const std::vector<Elem>& tab) {
    std::set<Elem> s(tab.begin(), tab.end());
    return {s.begin(), s.end()};
}

int position_of(const std::vector<Elem>& carrier, Elem x) {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), x);
    if (it == carrier.end() || *it != x) return -1;
    return static_cast<int>(it - carrier.begin());
}

/// Structure-map conditions for a part projection |whole| -> ambient.
void check_projection(const DirectSumCertificate& cert, const DirectSumPart& part,
                      std::vector<std::string>& bad) {
    const SystemicModule& M = *cert.whole;
    const SystemicModule& A = *part.ambient;
    const bool need_hom = cert.kind == SplitKind::H;
    if (part.pi[M.zero] != A.zero) bad.push_back(part.name + ": pi drops zero");
    for (Elem b = 0; b < M.size(); ++b) {
        if (A.neg(part.pi[b]) != part.pi[M.neg(b)])
            bad.push_back(part.name + ": pi not negation-equivariant");
        for (Elem s : M.scalars->tangibles())
            if (part.pi[M.act(s, b)] != A.act(s, part.pi[b]))
                bad.push_back(part.name + ": pi not action-equivariant");
        for (Elem c = 0; c < M.size(); ++c) {
            const Elem sum = part.pi[M.add(b, c)];
            const Elem parts = A.add(part.pi[b], part.pi[c]);
            if (need_hom ? (sum != parts) : !A.leq(sum, parts))
                bad.push_back(part.name + ": pi additivity");
            if (M.leq(b, c) && !A.leq(part.pi[b], part.pi[c]))
                bad.push_back(part.name + ": pi not monotone");
        }
    }
}

/// Section conditions, partial on the carrier.
void check_section(const DirectSumCertificate& cert, const DirectSumPart& part,
                   std::vector<std::string>& bad) {
    const SystemicModule& M = *cert.whole;
    const SystemicModule& A = *part.ambient;
    const bool need_hom = cert.kind == SplitKind::H;
    const int k = static_cast<int>(part.carrier.size());
    const int zpos = position_of(part.carrier, A.zero);
    if (zpos < 0 || part.nu[zpos] != M.zero) bad.push_back(part.name + ": nu drops zero");
    for (int i = 0; i < k; ++i) {
        const Elem x = part.carrier[i];
        const int ni = position_of(part.carrier, A.neg(x));
        if (ni >= 0 && part.nu[ni] != M.neg(part.nu[i]))
            bad.push_back(part.name + ": nu not negation-equivariant");
        for (Elem s : M.scalars->tangibles()) {
            const int si = position_of(part.carrier, A.act(s, x));
            if (si >= 0 && part.nu[si] != M.act(s, part.nu[i]))
                bad.push_back(part.name + ": nu not action-equivariant");
        }
        for (int j = 0; j < k; ++j) {
            const Elem y = part.carrier[j];
            const int sij = position_of(part.carrier, A.add(x, y));
            if (sij >= 0) {
                const Elem sum = part.nu[sij];
                const Elem parts = M.add(part.nu[i], part.nu[j]);
                if (need_hom ? (sum != parts) : !M.leq(sum, parts))
                    bad.push_back(part.name + ": nu additivity");
            }
            if (A.leq(x, y) && !M.leq(part.nu[i], part.nu[j]))
                bad.push_back(part.name + ": nu not monotone");
        }
    }
}

}  // namespace

std::vector<std::string> verify_direct_sum(const DirectSumCertificate& cert) {
    std::vector<std::string> bad;
    const SystemicModule& M = *cert.whole;
    const int nparts = static_cast<int>(cert.parts.size());

    for (const auto& part : cert.parts) {
        for (Elem b = 0; b < M.size(); ++b)
            if (position_of(part.carrier, part.pi[b]) < 0) {
                bad.push_back(part.name + ": pi image escapes the carrier");
                break;
            }
        check_projection(cert, part, bad);
        check_section(cert, part, bad);
    }
    if (!bad.empty()) return bad;

    for (Elem b = 0; b < M.size(); ++b) {
        Elem sum = M.zero;
        for (const auto& part : cert.parts) {
            const int pos = position_of(part.carrier, part.pi[b]);
            sum = M.add(sum, part.nu[pos]);
        }
        if (!M.leq(b, sum)) {
            bad.push_back("identity not below the recombined sum at " + M.ename(b));
            break;
        }
    }
    for (int i = 0; i < nparts; ++i) {
        const auto& pi_part = cert.parts[i];
        const SystemicModule& A = *pi_part.ambient;
        for (size_t pos = 0; pos < pi_part.carrier.size(); ++pos) {
            const Elem x = pi_part.carrier[pos];
            const Elem round = pi_part.pi[pi_part.nu[pos]];
            if (!A.leq(x, round)) {
                bad.push_back(pi_part.name + ": component identity not below pi(nu) at " +
                              A.ename(x));
                break;
            }
        }
        for (int j = 0; j < nparts; ++j) {
            if (i == j) continue;
            const auto& other = cert.parts[j];
            const SystemicModule& B = *other.ambient;
            for (size_t pos = 0; pos < cert.parts[i].carrier.size(); ++pos) {
                const Elem v = other.pi[cert.parts[i].nu[pos]];
                if (!B.leq(B.zero, v)) {
                    bad.push_back("cross composite " + other.name + "(nu_" + cert.parts[i].name +
                                  ") not null");
                    break;
                }
            }
        }
    }
    return bad;
}

std::pair<DirectSumCertificate, DirectSumCertificate> decompose_split(const MapTable& pi,
                                                                      const SplitCertificate& nu) {
    if (!classify_map(pi).hom())
        throw std::invalid_argument("decompose_split: pi must be a homomorphism");
    if (!(nu.pi == pi)) throw std::invalid_argument("decompose_split: certificate targets another map");
    if (nu.kind != SplitKind::Preceq && nu.kind != SplitKind::H)
        throw std::invalid_argument("decompose_split: need a preceq- or h-splitting");
    if (!verify_split_certificate(nu)) throw std::invalid_argument("decompose_split: stale certificate");

    const MapTable& section = nu.nu;  // N -> M
    MapTable nupi = compose(section, pi);
    MapTable complement = one_minus(nupi);  // b -> b (-) nu(pi(b))

    DirectSumCertificate one;
    one.whole = pi.src;
    one.kind = nu.kind;
    one.variant = 1;
    {
        DirectSumPart p1;
        p1.name = "image(pi)";
        p1.ambient = pi.dst;
        p1.carrier = image_set(pi.tab);
        p1.pi = pi.tab;
        for (Elem x : p1.carrier) p1.nu.push_back(section.tab[x]);
        DirectSumPart p2;
        p2.name = "complement";
        p2.ambient = pi.src;
        p2.carrier = image_set(complement.tab);
        p2.pi = complement.tab;
        p2.nu = p2.carrier;  // inclusion
        one.parts = {std::move(p1), std::move(p2)};
    }

    DirectSumCertificate two;
    two.whole = pi.src;
    two.kind = nu.kind;
    two.variant = 2;
    {
        DirectSumPart p1;
        p1.name = "image(nu.pi)";
        p1.ambient = pi.src;
        p1.carrier = image_set(nupi.tab);
        p1.pi = nupi.tab;
        p1.nu = p1.carrier;
        DirectSumPart p2;
        p2.name = "nullkernel(pi)";
        p2.ambient = pi.src;
        p2.carrier = null_module_kernel(pi);
        std::sort(p2.carrier.begin(), p2.carrier.end());
        p2.pi = complement.tab;
        p2.nu = p2.carrier;
        two.parts = {std::move(p1), std::move(p2)};
    }

    for (const auto* cert : {&one, &two}) {
        auto bad = verify_direct_sum(*cert);
        if (!bad.empty())
            throw std::logic_error("decompose_split: certificate verification failed: " + bad.front());
    }
    return {one, two};
}

}  // namespace sysmod
