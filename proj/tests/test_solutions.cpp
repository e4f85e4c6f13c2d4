#include "spinorlab/errors.hpp"
#include "spinorlab/random.hpp"
#include "spinorlab/solutions.hpp"
#include "spinorlab/spectra.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace spinorlab;

namespace {

std::size_t as_size(const BigInt& v) { return static_cast<std::size_t>(v.get_ui()); }

// Rank of the positive-chirality parts of a family of spinor fields.
std::size_t plus_rank(int m, int k, const std::vector<SpinorField>& fields) {
    const auto& S = SpinorSpace::get(m);
    const HomogeneousCoords coords(m, k, false);
    std::vector<SparseVector> rows;
    for (auto f : fields) {
        for (std::size_t a = 0; a < S.dim(); ++a)
            if (S.chirality(a) < 0) f[a] = MultiPoly(m);
        rows.push_back(coords.flatten(f));
    }
    return rank(rows);
}

OneFormField combine(const std::vector<OneFormField>& fs, Rng& rng, int m) {
    OneFormField out(m);
    for (const auto& f : fs) out += rng.small_scalar(2) * f;
    return out;
}

}  // namespace

TEST_SUITE("solutions") {

TEST_CASE("dimension formula values") {
    CHECK(monogenic_dimension_formula(3, 0) == 2);
    CHECK(monogenic_dimension_formula(4, 1) == 12);
    CHECK(monogenic_dimension_formula(5, 2) == 40);
    CHECK(monogenic_dimension_formula(6, 3) == 280);
}

TEST_CASE("monogenic bases have the predicted dimension") {
    CHECK(monogenic_basis(3, 0).dim() == 2);
    CHECK(monogenic_basis(4, 1).dim() == 12);
    for (int m = 3; m <= 6; ++m) {
        for (int k = 0; k <= 3; ++k) {
            const auto sp = monogenic_basis(m, k);
            CHECK(sp.dim() == as_size(monogenic_dimension_formula(m, k)));
            for (const auto& f : sp.monogenics) {
                CHECK(dirac(f).is_zero());
                CHECK(f.homogeneous_degree() == k);
            }
        }
    }
}

TEST_CASE("monogenic bases are deterministic") {
    const auto a = monogenic_basis(4, 2);
    const auto b = monogenic_basis(4, 2);
    REQUIRE(a.dim() == b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) CHECK(a.monogenics[i] == b.monogenics[i]);
}

TEST_CASE("even dimensions split into chiral halves matching the sphere multiplicity") {
    const int m = 4;
    for (int k = 0; k <= 3; ++k) {
        const auto sp = monogenic_basis(m, k);
        const std::size_t sphere = as_size(dirac_multiplicity(m - 1, k));
        CHECK(plus_rank(m, k, sp.monogenics) == sphere);
        CHECK(sp.dim() == 2 * sphere);
    }
    // odd m: no splitting, the dimension equals the multiplicity
    for (int k = 0; k <= 3; ++k) CHECK(monogenic_basis(5, k).dim() == as_size(dirac_multiplicity(4, k)));
}

TEST_CASE("solver parameter limits") {
    CHECK_THROWS_AS(monogenic_basis(2, 1), UsageError);
    CHECK_THROWS_AS(monogenic_basis(9, 1), UsageError);
    CHECK_THROWS_AS(monogenic_basis(3, 6), UsageError);
    CHECK_THROWS_AS(rs_solution_basis(3, 0), UsageError);
    CHECK_THROWS_AS(rs_solution_basis(7, 1), UsageError);
    SolverLimits raised;
    raised.max_k_monogenic = 6;
    CHECK(monogenic_basis(3, 6, raised).dim() == as_size(monogenic_dimension_formula(3, 6)));
}

TEST_CASE("limits read from the environment") {
    ::setenv("SPINORLAB_MAX_DEGREE", "7", 1);
    CHECK(SolverLimits::from_env().max_k_monogenic == 7);
    CHECK(SolverLimits::from_env().max_k_rs == 7);
    ::setenv("SPINORLAB_MAX_DEGREE", "junk", 1);
    CHECK(SolverLimits::from_env().max_k_monogenic == SolverLimits{}.max_k_monogenic);
    ::unsetenv("SPINORLAB_MAX_DEGREE");
}

TEST_CASE("coordinates round trip") {
    Rng rng(53);
    const HomogeneousCoords c(3, 2, true);
    const OneFormField f = [&] {
        OneFormField g(3);
        for (int i = 0; i < 3; ++i) {
            SpinorField s(3);
            for (std::size_t a = 0; a < 2; ++a) s[a] = rng.homogeneous_poly(3, 2, 3);
            g[static_cast<std::size_t>(i)] = s;
        }
        return g;
    }();
    CHECK(c.one_form_field(c.flatten(f)) == f);
    CHECK(c.dim() == 3 * 2 * 6);
}

TEST_CASE("RS solution space is the sum of the three pieces") {
    for (int m = 3; m <= 5; ++m) {
        for (int k = 1; k <= 2; ++k) {
            const DirectSumReport r = verify_direct_sum(m, k);
            INFO("m=" << m << " k=" << k);
            CHECK(r.passed());
            CHECK(r.dim_M2 == as_size(monogenic_dimension_formula(m, k + 1)));
            CHECK(r.dim_M3 == as_size(monogenic_dimension_formula(m, k - 1)));
            const auto w = rs_kernel_weight(m, k);
            CHECK(r.dim_M1 == (w ? as_size(weyl_dim_pm(m, *w)) : 0));
            CHECK(r.dim_P1 == r.dim_M1 + r.dim_M2 + r.dim_M3);
            CHECK(r.phi_monogenic);
        }
    }
}

TEST_CASE("known RS dimensions") {
    CHECK(rs_solution_basis(3, 1).dim() == 8);
    CHECK(rs_solution_basis(4, 1).dim() == 36);
    CHECK(rs_solution_basis(5, 1).dim() == 64);
}

TEST_CASE("decomposition isolates each piece") {
    const RSDecomposer dec(4, 2);
    REQUIRE(dec.is_direct());
    for (const auto& psi0 : dec.monogenics_down().monogenics) {
        const OneFormField xi = xi_map(psi0, 2);
        const RSDecomposition d = dec.decompose(xi);
        CHECK(d.psi1.is_zero());
        CHECK(d.psi2.is_zero());
        CHECK(d.psi3 == xi);
        CHECK(d.seed3_monogenic);
    }
    for (const auto& phi : dec.monogenics_up().monogenics) {
        const OneFormField t = twistor(phi);
        const RSDecomposition d = dec.decompose(t);
        CHECK(d.psi1.is_zero());
        CHECK(d.psi2 == t);
        CHECK(d.psi3.is_zero());
        CHECK(twistor(d.seed2) == t);
    }
}

TEST_CASE("random RS solutions reassemble from their pieces") {
    Rng rng(59);
    for (int m = 3; m <= 5; ++m) {
        const RSDecomposer dec(m, 2);
        for (int t = 0; t < 5; ++t) {
            const OneFormField psi = combine(dec.solutions().rs_solutions, rng, m);
            const RSDecomposition d = dec.decompose(psi);
            CHECK(d.psi1 + d.psi2 + d.psi3 == psi);
            CHECK(L_map(d.psi1).is_zero());
            CHECK(twistor(d.seed2) == d.psi2);
            CHECK(xi_map(d.seed3, 2) == d.psi3);
            CHECK(d.psi1_L_zero);
            CHECK(d.seed2_monogenic);
            CHECK(d.seed3_monogenic);
            CHECK(rarita_schwinger(d.psi1).is_zero());
        }
    }
}

TEST_CASE("decomposition rejects non-solutions") {
    const RSDecomposer dec(3, 1);
    Rng rng(61);
    const OneFormField junk = project_threehalf(rng.one_form(3, 1));
    CHECK_FALSE(dec.is_solution(junk));
    CHECK_THROWS_AS(dec.decompose(junk), PreconditionError);
    CHECK_THROWS_AS(decompose_rs(OneFormField(3)), PreconditionError);
}

}  // TEST_SUITE
