#pragma once

#include "spinorlab/fields.hpp"

#include <cstdint>
#include <random>

namespace spinorlab {

/// Seeded generator for random exact test data. Only the raw 64-bit engine
/// output is used (no std distributions), so sequences are identical across
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    /// Gaussian integer with parts in [-range, range]; real only if !complex.
    Scalar small_scalar(long range = 2, bool complex = true);
    /// Nonzero rational p/q with |p| <= range, 1 <= q <= range.
    Rational small_rational(long range = 5);

    MultiPoly poly(int m, int max_degree, int terms);
    MultiPoly homogeneous_poly(int m, int degree, int terms);

    SpinorVec spinor(int m);
    AlgebraicOneForm algebraic_one_form(int m);
    /// Each spinor coordinate gets up to `terms` random monomials of degree
    /// <= max_degree.
    SpinorField spinor_field(int m, int max_degree, int terms = 2);
    OneFormField one_form(int m, int max_degree, int terms = 2);
    KFormField k_form(int m, int degree, int max_poly_degree, int components = 3, int terms = 2);

private:
    std::mt19937_64 eng_;
};

}  // namespace spinorlab
