#pragma once

#include "sysmod/instances.hpp"
#include "sysmod/split.hpp"

namespace sysmod {

/// Scalar adapter over a finite ground system.
struct FiniteScalars {
    const FiniteSystem* S = nullptr;
    using Element = Elem;

    Element zero() const { return S->zero; }
    Element one() const { return S->one; }
    Element add(Element a, Element b) const { return S->add(a, b); }
    Element mul(Element a, Element b) const { return S->mul(a, b); }
    bool leq(Element a, Element b) const { return S->leq(a, b); }
    std::string ename(Element a) const { return S->ename(a); }
};

template <class Sys>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<typename Sys::Element> entries;

    Mat() = default;
    Mat(int r, int c, typename Sys::Element fill = {})
        : rows(r), cols(c), entries(static_cast<size_t>(r) * c, fill) {}

    typename Sys::Element& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const typename Sys::Element& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * cols + j];
    }
};

template <class Sys>
Mat<Sys> matrix_mul(const Sys& S, const Mat<Sys>& A, const Mat<Sys>& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix_mul: shape mismatch");
    Mat<Sys> C(A.rows, B.cols, S.zero());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) {
            auto acc = S.zero();
            for (int k = 0; k < A.cols; ++k) acc = S.add(acc, S.mul(A.at(i, k), B.at(k, j)));
            C.at(i, j) = acc;
        }
    return C;
}

template <class Sys>
bool matrix_preceq(const Sys& S, const Mat<Sys>& A, const Mat<Sys>& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::invalid_argument("matrix_preceq: shape mismatch");
    for (size_t i = 0; i < A.entries.size(); ++i)
        if (!S.leq(A.entries[i], B.entries[i])) return false;
    return true;
}

template <class Sys>
Mat<Sys> identity_matrix(const Sys& S, int n) {
    Mat<Sys> I(n, n, S.zero());
    for (int i = 0; i < n; ++i) I.at(i, i) = S.one();
    return I;
}

template <class Sys>
bool is_preceq_idempotent_matrix(const Sys& S, const Mat<Sys>& A) {
    if (A.rows != A.cols) throw std::invalid_argument("idempotency needs a square matrix");
    return matrix_preceq(S, A, matrix_mul(S, A, A));
}

template <class Sys>
bool is_preceq_vnr(const Sys& S, const Mat<Sys>& A, const Mat<Sys>& B) {
    if (B.rows != A.cols || B.cols != A.rows)
        throw std::invalid_argument("is_preceq_vnr: B must be transposed-conformable to A");
    return matrix_preceq(S, A, matrix_mul(S, matrix_mul(S, A, B), A));
}

using FMat = Mat<FiniteScalars>;
using STMat = Mat<MaxPlusSystem>;

struct ColumnSpaceCert {
    Submodule colspace;      // image of v -> Av inside the free column module
    MapTable pi;             // free module -> column space
    SplitCertificate cert;   // inclusion preceq-splits pi
};

/// Builds the column space of a square preceq-idempotent matrix together
/// with the splitting certificate that makes it preceq-projective.
/// Throws std::invalid_argument when A is not preceq-idempotent.
ColumnSpaceCert column_space_projectivity(std::shared_ptr<const FiniteSystem> S, const FMat& A);

/// Applies A to a vector of the free column module (index encoding of
/// free_module(S, n)).
Elem apply_matrix(const FiniteSystem& S, const FMat& A, const SystemicModule& F, Elem v);

}  // namespace sysmod
