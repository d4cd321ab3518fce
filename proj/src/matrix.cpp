#include "sysmod/matrix.hpp"

#include <algorithm>
#include <set>

namespace sysmod {

Elem apply_matrix(const FiniteSystem& S, const FMat& A, const SystemicModule& F, Elem v) {
    const int n = A.cols;
    std::vector<Elem> comp(n);
    Elem idx = v;
    for (int i = n - 1; i >= 0; --i) {
        comp[i] = idx % S.size();
        idx /= S.size();
    }
    std::vector<Elem> image(A.rows, S.zero);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < n; ++j) image[i] = S.add(image[i], S.mul(A.at(i, j), comp[j]));
    Elem out = 0;
    for (int i = 0; i < A.rows; ++i) out = out * S.size() + image[i];
    (void)F;
    return out;
}

ColumnSpaceCert column_space_projectivity(std::shared_ptr<const FiniteSystem> S, const FMat& A) {
    FiniteScalars sc{S.get()};
    if (!is_preceq_idempotent_matrix(sc, A))
        throw std::invalid_argument("column_space_projectivity: matrix is not preceq-idempotent");

    auto F = free_module(S, A.cols);
    std::set<Elem> image;
    std::vector<Elem> applied(F->size());
    for (Elem v = 0; v < F->size(); ++v) {
        applied[v] = apply_matrix(*S, A, *F, v);
        image.insert(applied[v]);
    }
    std::vector<Elem> carrier(image.begin(), image.end());
    auto col = submodule(F, carrier, "colspace");

    MapTable pi{F, col.module, std::vector<Elem>(F->size()), "A*"};
    for (Elem v = 0; v < F->size(); ++v) pi.tab[v] = *col.from_parent(applied[v]);
    MapTable nu{col.module, F, col.embed, "incl"};

    SplitCertificate cert{pi, nu, SplitKind::Preceq, {}};
    for (Elem w = 0; w < col.module->size(); ++w) {
        const Elem round = pi.tab[nu.tab[w]];
        if (!col.module->leq(w, round))
            throw std::logic_error("column_space_projectivity: certificate fails at " +
                                   col.module->ename(w));
        cert.evidence.emplace_back(w, round);
    }
    if (!verify_split_certificate(cert))
        throw std::logic_error("column_space_projectivity: inclusion is not a valid splitting");
    return {std::move(col), std::move(pi), std::move(cert)};
}

}  // namespace sysmod
