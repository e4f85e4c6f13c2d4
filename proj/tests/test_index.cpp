#include "spinorlab/charclass.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/index.hpp"
#include "spinorlab/random.hpp"

#include <doctest.h>

using namespace spinorlab;

namespace {

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

const PMonomial kP1({1});
const PMonomial kP1Sq({2});
const PMonomial kP2({0, 1});

ManifoldDescriptor k3() { return ManifoldDescriptor::from_json(R"({"dim": 4, "pontryagin_numbers": {"p1": -48}})"); }

CharClass random_class(Rng& rng, int dim) {
    CharClass c(dim);
    c.add_term(PMonomial(), rng.small_rational());
    c.add_term(kP1, rng.small_rational());
    if (dim >= 8) {
        c.add_term(kP1Sq, rng.small_rational());
        c.add_term(kP2, rng.small_rational());
    }
    return c;
}

}  // namespace

TEST_SUITE("charclass") {

TEST_CASE("monomial degrees and text") {
    CHECK(kP1.degree() == 4);
    CHECK(kP2.degree() == 8);
    CHECK(PMonomial({1, 1}).degree() == 12);
    CHECK(PMonomial({2, 1}).to_string() == "p1^2*p2");
    CHECK(PMonomial::parse("p1*p1") == kP1Sq);
    CHECK(PMonomial::parse("1") == PMonomial());
    CHECK_THROWS_AS(PMonomial::parse("q3"), InputError);
}

TEST_CASE("A-hat genus coefficients") {
    const CharClass a4 = ahat_series(4);
    CHECK(a4.coeff(PMonomial()) == 1);
    CHECK(a4.coeff(kP1) == q(-1, 24));
    const CharClass a8 = ahat_series(8);
    CHECK(a8.coeff(kP1Sq) == q(7, 5760));
    CHECK(a8.coeff(kP2) == q(-4, 5760));
    CHECK(a8.top().to_string() == "7/5760*p1^2 - 1/1440*p2");
    const CharClass a12 = ahat_series(12).top();
    CHECK(a12.coeff(PMonomial({3})) == q(-31, 967680));
    CHECK(a12.coeff(PMonomial({1, 1})) == q(11, 241920));
    CHECK(a12.coeff(PMonomial({0, 0, 1})) == q(-1, 60480));
}

TEST_CASE("Chern character of the cotangent bundle") {
    const CharClass c = ch_cotangent(8);
    CHECK(c.coeff(PMonomial()) == 8);
    CHECK(c.coeff(kP1) == 1);
    CHECK(c.coeff(kP1Sq) == q(1, 12));
    CHECK(c.coeff(kP2) == q(-1, 6));
    CHECK(ch_cotangent(4).coeff(PMonomial()) == 4);
    CHECK(ch_exterior_cotangent(4, 2).coeff(PMonomial()) == 6);
    for (int j = 0; j <= 8; ++j) {
        BigInt rank;
        mpz_bin_uiui(rank.get_mpz_t(), 8, static_cast<unsigned long>(j));
        CHECK(ch_exterior_cotangent(8, j).coeff(PMonomial()) == Rational(rank));
    }
}

TEST_CASE("two routes agree") {
    for (int dim = 4; dim <= 12; ++dim) {
        CHECK(ahat_series(dim) == chern_roots::ahat_series(dim));
        CHECK(ch_cotangent(dim) == chern_roots::ch_cotangent(dim));
        for (int j = 0; j <= dim; ++j) CHECK(ch_exterior_cotangent(dim, j) == chern_roots::ch_exterior_cotangent(dim, j));
    }
}

TEST_CASE("ring axioms on random classes") {
    Rng rng(67);
    for (int t = 0; t < 30; ++t) {
        const CharClass a = random_class(rng, 8), b = random_class(rng, 8), c = random_class(rng, 8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    CharClass x = CharClass::generator(8, 1) * q(1, 3);
    CHECK(CharClass::exp(x) * CharClass::exp(x * Rational(-1)) == CharClass::constant(8, 1));
    CHECK_THROWS_AS(CharClass::exp(CharClass::constant(8, 1)), UsageError);
    CHECK_THROWS_AS(CharClass(4) + CharClass(8), UsageError);
}

TEST_CASE("unsupported dimensions") {
    CHECK_FALSE(supported_dim(3));
    CHECK_FALSE(supported_dim(16));
    CHECK_THROWS_AS(ahat_series(16), UsageError);
}

}  // TEST_SUITE

TEST_SUITE("index") {

TEST_CASE("descriptor parsing") {
    const ManifoldDescriptor m = ManifoldDescriptor::from_json(
        R"({"dim": 8, "name": "x", "pontryagin_numbers": {"p1^2": 0, "p2": "-1440"}})");
    CHECK(m.dim == 8);
    CHECK(m.pontryagin_numbers.at(kP2) == -1440);
    CHECK(ManifoldDescriptor::from_json(m.to_json()).pontryagin_numbers == m.pontryagin_numbers);
    const auto frac = ManifoldDescriptor::from_json(R"({"dim": 4, "pontryagin_numbers": {"p1": {"num": 3, "den": 2}}})");
    CHECK(frac.pontryagin_numbers.at(kP1) == q(3, 2));
}

TEST_CASE("malformed descriptors") {
    CHECK_THROWS_AS(ManifoldDescriptor::from_json("{"), InputError);
    CHECK_THROWS_AS(ManifoldDescriptor::from_json("[]"), InputError);
    CHECK_THROWS_AS(ManifoldDescriptor::from_json(R"({"pontryagin_numbers": {}})"), InputError);
    CHECK_THROWS_AS(ManifoldDescriptor::from_json(R"({"dim": 8, "pontryagin_numbers": {"p1": 1}})"), InputError);
    CHECK_THROWS_AS(ManifoldDescriptor::from_json(R"({"dim": 4, "pontryagin_numbers": {"p1": 1}, "x": 1})"),
                    InputError);
    CHECK_THROWS_AS(ManifoldDescriptor::from_json(R"({"dim": 4, "pontryagin_numbers": {"p1": 1, "p1^1": 2}})"),
                    InputError);
    CHECK_THROWS_AS(ManifoldDescriptor::from_json(R"({"dim": 14, "pontryagin_numbers": {}})"), InputError);
    CHECK_THROWS_AS(ManifoldDescriptor::from_json(R"({"dim": 4, "pontryagin_numbers": {"p1": "a/b"}})"), InputError);
}

TEST_CASE("K3 surface") {
    const ManifoldDescriptor m = k3();
    CHECK(index_dirac(m).index == 2);
    CHECK(index_rarita_schwinger(m).index == -38);
    CHECK(index_twisted_cotangent(m).index == -40);
    CHECK(index_hsd(m, 1).index == -38);
    CHECK(index_dirac(m).integral);
}

TEST_CASE("dimension 4 integrands") {
    CHECK(symbolic_index_class(4, OperatorTag::Dirac).coeff(kP1) == q(-1, 24));
    CHECK(symbolic_index_class(4, OperatorTag::TwistedCotangent).coeff(kP1) == q(5, 6));
    CHECK(symbolic_index_class(4, OperatorTag::RaritaSchwinger).coeff(kP1) == q(19, 24));
    CHECK(symbolic_index_class(4, OperatorTag::RaritaSchwinger) ==
          symbolic_index_class(4, OperatorTag::Dirac) * Rational(-19));
}

TEST_CASE("non-integral value on a non-spin manifold") {
    const auto r = index_dirac(ManifoldDescriptor::from_json(R"({"dim": 4, "pontryagin_numbers": {"p1": 3}})"));
    CHECK(r.index == q(-1, 8));
    CHECK_FALSE(r.integral);
}

TEST_CASE("dimension 8") {
    const auto m = ManifoldDescriptor::from_json(R"({"dim": 8, "pontryagin_numbers": {"p1^2": 0, "p2": -1440}})");
    CHECK(index_dirac(m).index == 1);
    // quaternionic projective plane: A-hat vanishes
    const auto hp2 = ManifoldDescriptor::from_json(R"({"dim": 8, "pontryagin_numbers": {"p1^2": 4, "p2": 7}})");
    CHECK(index_dirac(hp2).index == 0);
    const CharClass rs = symbolic_index_class(8, OperatorTag::RaritaSchwinger);
    CHECK(rs.coeff(kP1Sq) == q(303, 5760));
    CHECK(rs.coeff(kP2) == q(-996, 5760));
    CHECK(rs == symbolic_index_class(8, OperatorTag::Dirac) * Rational(249) +
                    CharClass::generator(8, 1) * CharClass::generator(8, 1) * q(-1, 4));
}

TEST_CASE("higher spin operators") {
    for (int dim = 4; dim <= 12; dim += 4)
        CHECK(symbolic_index_class(dim, OperatorTag::HigherSpin, 1) ==
              symbolic_index_class(dim, OperatorTag::RaritaSchwinger));
    const auto m = ManifoldDescriptor::from_json(R"({"dim": 8, "pontryagin_numbers": {"p1^2": 4, "p2": 7}})");
    const IndexReport r = index_hsd(m, 2);
    CHECK(r.difference_form_symbolic.has_value());
    CHECK(r.difference_form_index.has_value());
    CHECK_THROWS_AS(index_hsd(m, 4), UsageError);
    CHECK_THROWS_AS(index_hsd(m, 0), UsageError);
}

TEST_CASE("odd dimensions have zero index") {
    CHECK(symbolic_index_class(5, OperatorTag::Dirac).is_zero());
    CHECK(symbolic_index_class(7, OperatorTag::RaritaSchwinger).is_zero());
}

TEST_CASE("operator tags") {
    CHECK(parse_operator_tag("D_1/2") == OperatorTag::Dirac);
    CHECK(parse_operator_tag("rs") == OperatorTag::RaritaSchwinger);
    CHECK(to_string(OperatorTag::TwistedCotangent) == "D_T");
    CHECK_THROWS_AS(parse_operator_tag("D_5/2"), UsageError);
}

TEST_CASE("audit of the degree 8 integrand") {
    const Dim8Audit a = dim8_audit();
    CHECK(a.ahat_matches_reference);
    CHECK(a.p2_matches_reference);
    CHECK(a.self_consistent);
    CHECK(a.rs_p1sq == a.rs_p1sq_roots);
    CHECK(a.rs_p1sq == q(303, 5760));
    CHECK(a.relation_dirac == 249);
    CHECK(a.relation_p1sq == q(-1, 4));
}

TEST_CASE("report JSON is stable") {
    const IndexReport r = index_dirac(k3());
    CHECK(r.to_json() == index_dirac(k3()).to_json());
    CHECK(r.to_json().find("\"index\"") != std::string::npos);
}

}  // TEST_SUITE
