#include "spinorlab/errors.hpp"
#include "spinorlab/spectra.hpp"

#include <doctest.h>

using namespace spinorlab;

namespace {

HighestWeight hw(std::initializer_list<Rational> e) { return HighestWeight{std::vector<Rational>(e)}; }

Rational half(long p) { return Rational(p, 2); }

// Binomial coefficient as an exact rational, for the independent
// multiplicity oracle below.
BigInt binom(long n, long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("Weyl dimensions of small representations") {
    CHECK(weyl_dim(5, hw({half(1), half(1)})) == 4);
    CHECK(weyl_dim(5, hw({half(3), half(1)})) == 16);
    CHECK(weyl_dim(4, hw({Rational(1), Rational(0)})) == 4);
    CHECK(weyl_dim(3, hw({Rational(1)})) == 3);
    CHECK(weyl_dim(3, hw({half(1)})) == 2);
    CHECK(weyl_dim(6, hw({Rational(1), Rational(0), Rational(0)})) == 6);
    CHECK(weyl_dim(7, hw({Rational(1), Rational(1), Rational(0)})) == 21);
    CHECK(weyl_dim(8, hw({half(1), half(1), half(1), half(1)})) == 8);
    CHECK(weyl_dim_pm(8, hw({half(1), half(1), half(1), half(1)})) == 16);
}

TEST_CASE("the spinor representation has dimension 2^floor(N/2) for odd N") {
    for (int N = 3; N <= 11; N += 2) {
        std::vector<Rational> e(static_cast<std::size_t>(N / 2), half(1));
        CHECK(weyl_dim(N, HighestWeight{e}) == BigInt(1) << (N / 2));
    }
}

TEST_CASE("non-dominant weights are rejected") {
    CHECK_THROWS_AS(check_dominant(5, hw({Rational(0), Rational(1)})), UsageError);
    CHECK_THROWS_AS(check_dominant(5, hw({Rational(1), half(1)})), UsageError);
    CHECK_THROWS_AS(check_dominant(5, hw({Rational(1)})), UsageError);
    CHECK_NOTHROW(check_dominant(6, hw({Rational(1), Rational(1), Rational(-1)})));
    CHECK_THROWS_AS(check_dominant(7, hw({Rational(1), Rational(1), Rational(-1)})), UsageError);
}

TEST_CASE("kernel weight exists from rank two on") {
    CHECK_FALSE(rs_kernel_weight(3, 1).has_value());
    const auto w = rs_kernel_weight(5, 1);
    REQUIRE(w.has_value());
    CHECK(*w == hw({half(3), half(3)}));
    CHECK(weyl_dim(5, *w) == 20);
}

TEST_CASE("Dirac spectrum of the 3-sphere") {
    const auto rows = dirac_spectrum(3, 2);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].eigenvalue() == half(3));
    CHECK(rows[0].multiplicity == 2);
    CHECK(rows[1].eigenvalue() == -half(3));
    CHECK(rows[1].multiplicity == 2);
    CHECK(rows[2].eigenvalue_abs == half(5));
    CHECK(rows[2].multiplicity == 6);
}

TEST_CASE("Dirac spectrum of the 4-sphere, lowest level") {
    const auto rows = dirac_spectrum(4, 0);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].eigenvalue_abs == 2);
    CHECK(rows[0].multiplicity == 4);
}

TEST_CASE("Dirac multiplicity closed form") {
    for (int n = 2; n <= 10; ++n)
        for (int l = 0; l <= 6; ++l)
            CHECK(dirac_multiplicity(n, l) == (BigInt(1) << (n / 2)) * binom(l + n - 1, l));
}

TEST_CASE("higher spin spectrum on the 4-sphere") {
    const auto rows = hsd_spectrum(4, 1, 1);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].series == Series::Mu1);
    CHECK(rows[0].eigenvalue_abs == 3);
    CHECK(rows[0].multiplicity == 20);
    CHECK(rows[2].series == Series::Mu2);
    CHECK(rows[2].eigenvalue_abs == half(3));
    CHECK(rows[2].multiplicity == 16);
}

TEST_CASE("second series on the 3-sphere") {
    CHECK(hsd_eigenvalue_abs(3, 1, 1, Series::Mu2) == Rational(5, 6));
    CHECK(hsd_multiplicity(3, 1, 1, Series::Mu2) == 6);
}

TEST_CASE("higher spin parameter range") {
    CHECK_THROWS_AS(hsd_spectrum(4, 2, 1), UsageError);
    CHECK_THROWS_AS(hsd_spectrum(4, 0, 1), UsageError);
    CHECK_NOTHROW(hsd_spectrum(5, 2, 1));
}

TEST_CASE("multiplicities are positive integers with both signs") {
    for (int n = 3; n <= 12; ++n) {
        for (int j = 1; 2 * j < n; ++j) {
            const auto rows = hsd_spectrum(n, j, 5);
            REQUIRE(rows.size() % 2 == 0);
            for (std::size_t r = 0; r < rows.size(); r += 2) {
                CHECK(rows[r].multiplicity > 0);
                CHECK(rows[r].sign == 1);
                CHECK(rows[r + 1].sign == -1);
                CHECK(rows[r].eigenvalue_abs == rows[r + 1].eigenvalue_abs);
                CHECK(rows[r].multiplicity == rows[r + 1].multiplicity);
            }
        }
    }
}

TEST_CASE("specialized j = 1 expressions agree with the general ones") {
    for (int n = 3; n <= 10; ++n)
        for (int l = 1; l <= 6; ++l)
            for (Series s : {Series::Mu1, Series::Mu2})
                CHECK(rs_specialized_multiplicity(n, l, s) == hsd_multiplicity(n, 1, l, s));
    CHECK(rs_spectrum(5, 3) == hsd_spectrum(5, 1, 3));
}

TEST_CASE("first series multiplicity equals the Weyl dimension on the sphere") {
    // Spin(n+1) weight (l + 1/2, 3/2, 1/2, ...) is the j = 1, mu1 eigenspace.
    for (int n = 3; n <= 8; ++n) {
        for (int l = 1; l <= 4; ++l) {
            std::vector<Rational> e((n + 1) / 2, half(1));
            e[0] = half(2 * l + 1);
            e[1] = half(3);
            CHECK(hsd_multiplicity(n, 1, l, Series::Mu1) == Rational(weyl_dim(n + 1, HighestWeight{e})));
        }
    }
}

TEST_CASE("CSV and JSON round trip") {
    const auto rows = hsd_spectrum(6, 2, 3);
    CHECK(parse_spectrum_csv(spectrum_to_csv(rows)) == rows);
    CHECK(parse_spectrum_json(spectrum_to_json(rows)) == rows);
    const auto d = dirac_spectrum(7, 4);
    CHECK(parse_spectrum_csv(spectrum_to_csv(d)) == d);
    CHECK(parse_spectrum_json(spectrum_to_json(d)) == d);
}

TEST_CASE("CSV layout") {
    const std::string csv = spectrum_to_csv(dirac_spectrum(3, 0));
    CHECK(csv == "n,j,l,series,sign,eigenvalue,multiplicity\n3,0,0,dirac,+,3/2,2\n3,0,0,dirac,-,3/2,2\n");
}

TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(parse_spectrum_csv("n,j\n1,2\n"), InputError);
    CHECK_THROWS_AS(parse_spectrum_csv("n,j,l,series,sign,eigenvalue,multiplicity\n3,0,0,dirac,+,3/0,2\n"),
                    InputError);
    CHECK_THROWS_AS(parse_spectrum_csv("n,j,l,series,sign,eigenvalue,multiplicity\n3,0,0,spin,+,3/2,2\n"),
                    InputError);
    CHECK_THROWS_AS(parse_spectrum_json("{\"rows\": 3}"), InputError);
    CHECK_THROWS_AS(parse_spectrum_json("not json"), InputError);
}

}  // TEST_SUITE
