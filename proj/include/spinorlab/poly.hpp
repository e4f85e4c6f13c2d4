#pragma once

#include "spinorlab/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinorlab {

inline constexpr int kMaxVars = 12;

/// Exponent multi-index of a monomial in at most kMaxVars variables.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(const std::vector<int>& powers);

    static Exponent unit(int var);

    int operator[](int var) const { return e_[static_cast<std::size_t>(var)]; }
    void set(int var, int power);
    int degree() const { return degree_; }

    Exponent& operator+=(const Exponent& o);
    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

    /// Graded lexicographic order: total degree first, then x1 > x2 > ...
    friend bool grlex_less(const Exponent& a, const Exponent& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.e_ < b.e_;
    }

private:
    std::array<std::uint8_t, kMaxVars> e_{};
    int degree_ = 0;
};

struct GrLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_less(a, b); }
};

/// All exponents of total degree `degree` in `num_vars` variables, in
/// ascending graded lexicographic order.
std::vector<Exponent> monomials_of_degree(int num_vars, int degree);

/// Sparse multivariate polynomial over the Gaussian rationals. No stored term
/// has a zero coefficient.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Scalar, GrLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(int num_vars);

    static MultiPoly constant(int num_vars, const Scalar& c);
    static MultiPoly variable(int num_vars, int var);
    static MultiPoly monomial(int num_vars, const Exponent& e, const Scalar& c);
    /// x1^2 + ... + xm^2
    static MultiPoly norm_squared(int num_vars);

    int num_vars() const { return num_vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of x^e (zero when absent).
    Scalar coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Scalar& c);

    /// Maximal total degree; -1 for the zero polynomial.
    int degree() const;
    /// Common total degree of all terms, if there is one. Empty for zero.
    std::optional<int> homogeneous_degree() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Multiply by x^e.
    MultiPoly shifted(const Exponent& e) const;

    /// Canonical form "coeff*x1^a1*...*xm^am + ...", highest grlex term
    /// first, "0" for the zero polynomial.
    std::string to_string(const std::string& var_prefix = "x") const;

private:
    int num_vars_ = 0;
    Terms terms_;
};

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly partial_derivative(const MultiPoly& p, int var);

}  // namespace spinorlab
