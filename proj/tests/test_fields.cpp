#include "spinorlab/errors.hpp"
#include "spinorlab/fields.hpp"
#include "spinorlab/random.hpp"
#include "spinorlab/solutions.hpp"

#include <doctest.h>

using namespace spinorlab;

namespace {

SpinorField x_times(int m, int var, const SpinorVec& s) {
    return MultiPoly::variable(m, var) * SpinorField::constant(s);
}

SpinorField clifford_const(int i, const SpinorVec& s) { return SpinorField::constant(clifford_apply(i, s)); }

}  // namespace

TEST_SUITE("fields") {

TEST_CASE("Dirac operator on x times a constant spinor") {
    for (int m = 3; m <= 6; ++m) {
        const SpinorVec s = SpinorVec::basis(m, 1);
        const SpinorField f = clifford_x(SpinorField::constant(s));
        CHECK(dirac(f) == Scalar(-m) * SpinorField::constant(s));
    }
}

TEST_CASE("a simple monogenic of degree one") {
    const int m = 4;
    const SpinorVec s = SpinorVec::basis(m, 0);
    const SpinorField f = MultiPoly::variable(m, 0) * clifford_const(1, s) +
                          MultiPoly::variable(m, 1) * clifford_const(0, s);
    CHECK(dirac(f).is_zero());
}

TEST_CASE("gradient of a linear field") {
    const int m = 3;
    const SpinorVec s = SpinorVec::basis(m, 1);
    const OneFormField g = gradient(x_times(m, 0, s));
    CHECK(g[0] == SpinorField::constant(s));
    CHECK(g[1].is_zero());
    CHECK(g[2].is_zero());
}

TEST_CASE("Dirac squares to minus the Laplacian") {
    Rng rng(31);
    for (int m = 3; m <= 6; ++m) {
        for (int t = 0; t < 5; ++t) {
            const SpinorField f = rng.spinor_field(m, 4, 3);
            CHECK(dirac(dirac(f)) == Scalar(-1) * laplacian(f));
        }
    }
}

TEST_CASE("twistor and Rarita-Schwinger are the projected operators") {
    Rng rng(37);
    for (int m = 3; m <= 5; ++m) {
        for (int t = 0; t < 5; ++t) {
            const SpinorField phi = rng.spinor_field(m, 3);
            const OneFormField tw = twistor(phi);
            CHECK(tw == project_threehalf(gradient(phi)));
            CHECK(mu(tw).is_zero());

            const OneFormField psi = project_threehalf(rng.one_form(m, 3));
            REQUIRE(psi.is_rs_admissible());
            const OneFormField r = rarita_schwinger(psi);
            CHECK(r == project_threehalf(twisted_dirac(psi)));
            CHECK(mu(r).is_zero());
        }
    }
}

TEST_CASE("Rarita-Schwinger rejects fields outside the admissible subspace") {
    const int m = 3;
    const OneFormField psi = iota(x_times(m, 0, SpinorVec::basis(m, 0)));
    CHECK_FALSE(psi.is_rs_admissible());
    CHECK_THROWS_AS(rarita_schwinger(psi), PreconditionError);
}

TEST_CASE("divergence of a gradient is minus the Laplacian") {
    Rng rng(41);
    for (int m = 3; m <= 5; ++m) {
        const SpinorField f = rng.spinor_field(m, 3);
        CHECK(delta_div(gradient(f)) == Scalar(-1) * laplacian(f));
    }
}

TEST_CASE("Clifford contraction on one-forms is minus mu") {
    Rng rng(43);
    for (int m = 3; m <= 6; ++m) {
        const OneFormField psi = rng.one_form(m, 2);
        const KFormField y = y_contract(KFormField::from_one_form(psi));
        CHECK(y.degree() == 0);
        CHECK(y.to_spinor() == Scalar(-1) * mu(psi));
    }
    CHECK_THROWS_AS(y_contract(KFormField::from_spinor(SpinorField(3))), UsageError);
}

TEST_CASE("form gradient and Dirac on 0-forms agree with the spinor versions") {
    Rng rng(47);
    const int m = 4;
    const SpinorField f = rng.spinor_field(m, 3);
    CHECK(form_gradient(KFormField::from_spinor(f)).to_one_form() == gradient(f));
    CHECK(twisted_dirac(KFormField::from_spinor(f)).to_spinor() == dirac(f));
    // d^2 = 0 on forms
    const KFormField w = rng.k_form(m, 1, 3);
    CHECK(form_gradient(form_gradient(w)).is_zero());
}

TEST_CASE("Xi of zero is zero") {
    CHECK(xi_map(SpinorField(4), 2).is_zero());
}

TEST_CASE("Xi solves the twisted equation on monogenic seeds") {
    for (int m = 3; m <= 5; ++m) {
        for (int k = 1; k <= 3; ++k) {
            const auto seeds = monogenic_basis(m, k - 1);
            for (const auto& psi0 : seeds.monogenics) {
                const OneFormField xi = xi_map(psi0, k);
                CHECK(xi.homogeneous_degree() == k);
                CHECK(mu(xi).is_zero());
                CHECK(twisted_dirac(xi) == clifford_coframe(psi0));
            }
        }
    }
}

TEST_CASE("Xi rejects a non-monogenic seed") {
    const int m = 3;
    const SpinorField f = x_times(m, 0, SpinorVec::basis(m, 0));
    CHECK_THROWS_AS(xi_map(f, 2), PreconditionError);
}

TEST_CASE("L pairs components with coordinates") {
    const int m = 3;
    const SpinorVec s = SpinorVec::basis(m, 0);
    const OneFormField psi = iota(SpinorField::constant(s));
    SpinorField expected(m);
    for (int i = 0; i < m; ++i)
        expected += MultiPoly::variable(m, i) * clifford_const(i, s) * Scalar::frac(-1, m);
    CHECK(L_map(psi) == expected);
}

}  // TEST_SUITE
