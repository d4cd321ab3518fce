#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sysmod/matrix.hpp"
#include "sysmod/registry.hpp"

using namespace sysmod;

TEST_CASE("entrywise comparison and the supertropical square") {
    MaxPlusSystem st;
    STMat A(2, 2, STElem{STElem::Tangible, 0});
    CHECK(matrix_preceq(st, A, A));
    auto A2 = matrix_mul(st, A, A);
    for (const auto& e : A2.entries) CHECK(e == STElem{STElem::Ghost, 0});
    CHECK(matrix_preceq(st, A, A2));
    CHECK(is_preceq_idempotent_matrix(st, A));

    STMat B(2, 3);
    CHECK_THROWS_AS(matrix_mul(st, B, A), std::invalid_argument);
    CHECK_THROWS_AS(matrix_preceq(st, A, B), std::invalid_argument);
    CHECK_THROWS_AS(is_preceq_idempotent_matrix(st, B), std::invalid_argument);
}

TEST_CASE("idempotent matrices over the symmetrized Booleans") {
    auto S = find_system("sym-bool");
    FiniteScalars sc{S.get()};
    CHECK(is_preceq_idempotent_matrix(sc, identity_matrix(sc, 2)));
    const Elem e = *S->elem_by_name("(1,1)");
    FMat allpairs(2, 2, e);
    CHECK(is_preceq_idempotent_matrix(sc, allpairs));
}

TEST_CASE("identity-plus-idempotent stays preceq-idempotent over max-plus") {
    MaxPlusSystem st;
    STMat A(2, 2);
    A.at(0, 0) = {STElem::Tangible, 0};
    A.at(0, 1) = {STElem::Tangible, -1};
    A.at(1, 0) = st.zero();
    A.at(1, 1) = st.zero();
    REQUIRE(matrix_mul(st, A, A).entries == A.entries);  // multiplicatively idempotent
    STMat IA = identity_matrix(st, 2);
    for (size_t i = 0; i < IA.entries.size(); ++i)
        IA.entries[i] = st.add(IA.entries[i], A.entries[i]);
    CHECK(is_preceq_idempotent_matrix(st, IA));
}

TEST_CASE("column space of the identity is the whole free module") {
    auto S = find_system("sym-bool");
    FiniteScalars sc{S.get()};
    auto cert = column_space_projectivity(S, identity_matrix(sc, 2));
    CHECK(cert.colspace.module->size() == 16);
    CHECK(verify_split_certificate(cert.cert));
}

TEST_CASE("column space certificate for the all-pairs matrix") {
    auto S = find_system("sym-bool");
    const Elem e = *S->elem_by_name("(1,1)");
    FMat A(2, 2, e);
    auto cert = column_space_projectivity(S, A);
    CHECK(cert.colspace.module->size() == 2);
    CHECK(verify_split_certificate(cert.cert));

    // exhaustive column-span oracle: the carrier is exactly the image set
    auto F = free_module(S, 2);
    std::set<Elem> image;
    for (Elem v = 0; v < F->size(); ++v) image.insert(apply_matrix(*S, A, *F, v));
    std::set<Elem> carrier(cert.colspace.embed.begin(), cert.colspace.embed.end());
    CHECK(image == carrier);
}

TEST_CASE("non-idempotent input is rejected") {
    auto S = find_system("sym-bool");
    const Elem swapped = *S->elem_by_name("(0,1)");
    FMat A(1, 1, swapped);
    FiniteScalars sc{S.get()};
    CHECK_FALSE(is_preceq_idempotent_matrix(sc, A));
    CHECK_THROWS_AS(column_space_projectivity(S, A), std::invalid_argument);
}

TEST_CASE("regular pairs yield idempotent products with projective column spaces") {
    auto S = find_system("sym-bool");
    FiniteScalars sc{S.get()};
    const int n = S->size();
    int pairs = 0;
    for (int ca = 0; ca < n * n; ++ca) {
        FMat A(1, 2);
        A.entries = {ca % n, ca / n};
        for (int cb = 0; cb < n * n; ++cb) {
            FMat B(2, 1);
            B.entries = {cb % n, cb / n};
            if (!is_preceq_vnr(sc, A, B)) continue;
            ++pairs;
            auto AB = matrix_mul(sc, A, B);
            CHECK(is_preceq_idempotent_matrix(sc, AB));
            auto cert = column_space_projectivity(S, AB);
            CHECK(verify_split_certificate(cert.cert));
        }
    }
    CHECK(pairs > 0);
}
