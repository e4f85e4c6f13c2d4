#include "spinorlab/clifford.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/random.hpp"

#include <doctest.h>

using namespace spinorlab;

TEST_SUITE("clifford") {

TEST_CASE("spinor module dimensions") {
    CHECK(SpinorSpace::get(3).dim() == 2);
    CHECK(SpinorSpace::get(4).dim() == 4);
    CHECK(SpinorSpace::get(5).dim() == 4);
    CHECK(SpinorSpace::get(8).dim() == 16);
    CHECK_THROWS_AS(SpinorSpace::get(0), UsageError);
    CHECK_THROWS_AS(SpinorSpace::get(9), UsageError);
}

TEST_CASE("generators square to -1 and anticommute") {
    for (int m = 1; m <= 8; ++m) {
        const auto& S = SpinorSpace::get(m);
        const Matrix minus_id = Scalar(-1) * Matrix::identity(S.dim());
        for (int i = 0; i < m; ++i) {
            const Matrix gi = S.gamma(i);
            CHECK(gi * gi == minus_id);
            for (int j = i + 1; j < m; ++j) {
                const Matrix gj = S.gamma(j);
                CHECK((gi * gj + gj * gi).is_zero());
            }
        }
    }
}

TEST_CASE("chirality is an involution anticommuting with every generator") {
    for (int m = 2; m <= 8; m += 2) {
        const auto& S = SpinorSpace::get(m);
        REQUIRE(S.has_chirality());
        const Matrix w = S.chirality_matrix();
        CHECK(w * w == Matrix::identity(S.dim()));
        for (int i = 0; i < m; ++i) CHECK((w * S.gamma(i) + S.gamma(i) * w).is_zero());
        int plus = 0;
        for (std::size_t a = 0; a < S.dim(); ++a) plus += S.chirality(a) > 0 ? 1 : 0;
        CHECK(2 * plus == static_cast<int>(S.dim()));
    }
    CHECK_FALSE(SpinorSpace::get(5).has_chirality());
}

TEST_CASE("clifford_apply agrees with the generator matrices") {
    Rng rng(5);
    for (int m = 3; m <= 6; ++m) {
        const auto& S = SpinorSpace::get(m);
        const SpinorVec s = rng.spinor(m);
        for (int i = 0; i < m; ++i) CHECK(clifford_apply(i, s).coords == S.gamma(i).apply(s.coords));
    }
    CHECK_THROWS_AS(clifford_apply(3, SpinorVec::zero(3)), UsageError);
}

TEST_CASE("embedding and multiplication are inverse on spinors") {
    Rng rng(17);
    for (int m = 3; m <= 8; ++m) {
        for (int t = 0; t < 10; ++t) {
            const SpinorVec s = rng.spinor(m);
            CHECK(mu(iota(s)) == s);
            CHECK(project_half(iota(s)) == iota(s));
            CHECK(project_threehalf(iota(s)).is_zero());
        }
    }
}

TEST_CASE("projections are complementary idempotents") {
    Rng rng(23);
    for (int m = 3; m <= 6; ++m) {
        for (int t = 0; t < 10; ++t) {
            const AlgebraicOneForm psi = rng.algebraic_one_form(m);
            const AlgebraicOneForm h = project_half(psi);
            const AlgebraicOneForm th = project_threehalf(psi);
            CHECK(project_half(h) == h);
            CHECK(project_threehalf(th) == th);
            CHECK(mu(th).is_zero());
            CHECK(project_half(th).is_zero());
            AlgebraicOneForm sum = h;
            for (int i = 0; i < m; ++i)
                for (std::size_t a = 0; a < sum.components[i].coords.size(); ++a)
                    sum.components[i].coords[a] += th.components[i].coords[a];
            CHECK(sum == psi);
        }
    }
}

TEST_CASE("ranks of the projection matrices") {
    for (int m = 3; m <= 6; ++m) {
        const std::size_t d = SpinorSpace::get(m).dim();
        const Matrix p12 = one_form_operator_matrix(m, project_half);
        const Matrix p32 = one_form_operator_matrix(m, project_threehalf);
        CHECK(rank(p12) == d);
        CHECK(rank(p32) == (static_cast<std::size_t>(m) - 1) * d);
        CHECK(p12 * p12 == p12);
        CHECK((p12 * p32).is_zero());
        CHECK(p12 + p32 == Matrix::identity(static_cast<std::size_t>(m) * d));
    }
}

}  // TEST_SUITE
