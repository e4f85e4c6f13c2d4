#include "spinorlab/errors.hpp"
#include "spinorlab/linalg.hpp"
#include "spinorlab/poly.hpp"
#include "spinorlab/random.hpp"

#include <doctest.h>

using namespace spinorlab;

namespace {

MultiPoly x(int m, int i) { return MultiPoly::variable(m, i); }

Vector matvec(const Matrix& a, const Vector& v) { return a.apply(v); }

bool is_zero_vector(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("gaussian rational arithmetic") {
    const Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
    CHECK(Scalar(1) / i == -i);
    CHECK(Scalar::frac(2, 4) == Scalar::frac(1, 2));
    CHECK((Scalar::frac(1, 2) + Scalar(3) * i).to_string() == "(1/2+3i)");
    CHECK((-i).to_string() == "(-i)");
    CHECK(Scalar::frac(3, 2).to_string() == "3/2");
    CHECK((Scalar(2) + i).conj() == Scalar(2) - i);
}

TEST_CASE("random scalars obey field axioms") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const Scalar a = rng.small_scalar(5), b = rng.small_scalar(5), c = rng.small_scalar(5);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("product of conjugate linear forms") {
    const int m = 2;
    const MultiPoly p = x(m, 0) + Scalar::i() * x(m, 1);
    const MultiPoly q = x(m, 0) - Scalar::i() * x(m, 1);
    CHECK(poly_mul(p, q) == MultiPoly::norm_squared(m));
}

TEST_CASE("partial derivative of the squared norm") {
    const int m = 3;
    CHECK(partial_derivative(MultiPoly::norm_squared(m), 0) == Scalar(2) * x(m, 0));
    CHECK(partial_derivative(MultiPoly::constant(m, 5), 1).is_zero());
}

TEST_CASE("homogeneity and degree") {
    const int m = 3;
    const MultiPoly p = x(m, 0) * x(m, 1) + x(m, 2) * x(m, 2);
    CHECK(p.homogeneous_degree() == 2);
    CHECK_FALSE((p + x(m, 0)).homogeneous_degree().has_value());
    CHECK((p + x(m, 0)).degree() == 2);
    CHECK(MultiPoly(m).is_zero());
}

TEST_CASE("monomials of a degree are listed in graded lex order") {
    const auto mons = monomials_of_degree(3, 2);
    CHECK(mons.size() == 6);
    for (std::size_t a = 1; a < mons.size(); ++a) CHECK(grlex_less(mons[a - 1], mons[a]));
    CHECK(monomials_of_degree(4, 3).size() == 20);
}

TEST_CASE("polynomial ring laws on random input") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        const MultiPoly a = rng.poly(3, 3, 4), b = rng.poly(3, 3, 4), c = rng.poly(3, 2, 3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        // Leibniz rule
        CHECK(partial_derivative(a * b, 1) == partial_derivative(a, 1) * b + a * partial_derivative(b, 1));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(partial_derivative(partial_derivative(a, i), j) ==
                      partial_derivative(partial_derivative(a, j), i));
    }
}

TEST_CASE("kernel of a single complex row") {
    const Matrix a{{Scalar(1), Scalar::i()}};
    const auto k = kernel_basis(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{-Scalar::i(), Scalar(1)});
}

TEST_CASE("kernel of identity and zero matrices") {
    CHECK(kernel_basis(Matrix::identity(4)).empty());
    const auto k = kernel_basis(Matrix(2, 3));
    CHECK(k.size() == 3);
    CHECK(rank(Matrix(2, 3)) == 0);
    CHECK(rank(Matrix::identity(5)) == 5);
}

TEST_CASE("rank nullity and kernel correctness on random matrices") {
    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
        const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 7));
        Matrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng.uniform(0, 2) != 0) a(i, j) = rng.small_scalar(3);
        const auto k = kernel_basis(a);
        CHECK(rank(a) + k.size() == c);
        for (const auto& v : k) CHECK(is_zero_vector(matvec(a, v)));
        const auto sk = kernel_basis(SparseMatrix::from_dense(a));
        CHECK(sk.size() == k.size());
        CHECK(rank(SparseMatrix::from_dense(a)) == rank(a));
    }
}

TEST_CASE("solve returns a particular solution or nothing") {
    const Matrix a{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}};
    const auto x0 = solve(a, Vector{Scalar(2), Scalar(0)});
    REQUIRE(x0.has_value());
    CHECK(*x0 == Vector{Scalar(1), Scalar(1)});
    const Matrix b{{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}};
    CHECK_FALSE(solve(b, Vector{Scalar(1), Scalar(3)}).has_value());
}

TEST_CASE("span solver coordinates") {
    const std::size_t dim = 4;
    std::vector<SparseVector> basis = {
        to_sparse(Vector{Scalar(1), Scalar(1), 0, 0}),
        to_sparse(Vector{0, Scalar(1), Scalar::i(), 0}),
        to_sparse(Vector{0, 0, 0, Scalar(2)}),
    };
    const SpanSolver solver(basis, dim);
    CHECK(solver.independent());
    CHECK(solver.rank() == 3);
    const Vector target{Scalar(2), Scalar(5), Scalar(3) * Scalar::i(), Scalar(-4)};
    const auto c = solver.coordinates(to_sparse(target));
    REQUIRE(c.has_value());
    CHECK(sparse_get(*c, 0) == Scalar(2));
    CHECK(sparse_get(*c, 1) == Scalar(3));
    CHECK(sparse_get(*c, 2) == Scalar(-2));
    CHECK_FALSE(solver.coordinates(to_sparse(Vector{Scalar(1), 0, 0, 0})).has_value());

    basis.push_back(axpy(basis[0], Scalar(2), basis[1]));
    CHECK_FALSE(SpanSolver(basis, dim).independent());
}

TEST_CASE("mismatched shapes are rejected") {
    const Matrix a(2, 3);
    CHECK_THROWS_AS(a.apply(Vector(2)), UsageError);
    CHECK_THROWS_AS(a * Matrix(2, 2), UsageError);
}

}  // TEST_SUITE
