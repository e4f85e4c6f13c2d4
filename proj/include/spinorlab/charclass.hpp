#pragma once

#include "spinorlab/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace spinorlab {

/// Monomial p1^a1 * p2^a2 * ... in the Pontrjagin generators. Trailing zero
/// exponents are not stored.
class PMonomial {
public:
    PMonomial() = default;
    explicit PMonomial(std::vector<int> exps);
    static PMonomial generator(int i);  // p_i, i >= 1

    const std::vector<int>& exponents() const { return e_; }
    int exponent(int i) const { return i >= 1 && i <= static_cast<int>(e_.size()) ? e_[static_cast<std::size_t>(i - 1)] : 0; }
    /// Real degree, 4 * sum(i * a_i).
    int degree() const;

    friend PMonomial operator*(const PMonomial& a, const PMonomial& b);
    friend bool operator==(const PMonomial& a, const PMonomial& b) { return a.e_ == b.e_; }
    friend bool operator<(const PMonomial& a, const PMonomial& b);

    /// "1", "p1", "p1^2*p2"
    std::string to_string() const;
    /// Inverse of to_string (also accepts "p1*p1"); throws InputError.
    static PMonomial parse(const std::string& s);

private:
    void trim();
    std::vector<int> e_;
};

/// Element of the rational cohomology ring in the Pontrjagin generators of a
/// manifold of dimension `dim`, truncated above degree `dim`.
class CharClass {
public:
    using Terms = std::map<PMonomial, Rational>;

    CharClass() = default;
    explicit CharClass(int dim);
    static CharClass constant(int dim, const Rational& c);
    static CharClass generator(int dim, int i);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const PMonomial& m) const;
    void add_term(const PMonomial& m, const Rational& c);

    /// Homogeneous component of real degree `degree`.
    CharClass component(int degree) const;
    CharClass top() const { return component(dim_); }

    CharClass& operator+=(const CharClass& o);
    CharClass& operator-=(const CharClass& o);
    CharClass& operator*=(const Rational& c);
    friend CharClass operator+(CharClass a, const CharClass& b) { return a += b; }
    friend CharClass operator-(CharClass a, const CharClass& b) { return a -= b; }
    friend CharClass operator*(CharClass a, const Rational& c) { return a *= c; }
    friend CharClass operator*(const Rational& c, CharClass a) { return a *= c; }
    friend CharClass operator*(const CharClass& a, const CharClass& b);
    friend bool operator==(const CharClass& a, const CharClass& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }
    friend bool operator!=(const CharClass& a, const CharClass& b) { return !(a == b); }

    /// exp(c) for c without constant term.
    static CharClass exp(const CharClass& c);

    /// Canonical string, higher degree first, within a degree p1^a.. descending:
    /// "7/5760*p1^2 - 1/1440*p2". "0" for zero.
    std::string to_string() const;

private:
    void check_same(const CharClass& o) const;
    int dim_ = 0;
    Terms terms_;
};

/// Dimensions with a characteristic-class engine.
bool supported_dim(int dim);

/// Primary route: power sums of the squared Chern roots via Newton's
/// identities, A-hat through exp of the logarithmic series.
CharClass ahat_series(int dim);
CharClass ch_cotangent(int dim);
CharClass ch_exterior_cotangent(int dim, int j);

/// Power sum s_r = sum x_i^(2r) of the squared formal roots, in p_i.
CharClass root_power_sum(int dim, int r);

/// Independent route: expand explicit products over formal Chern roots as
/// polynomials and reduce the symmetric result to p_i.
namespace chern_roots {
CharClass ahat_series(int dim);
CharClass ch_cotangent(int dim);
CharClass ch_exterior_cotangent(int dim, int j);
/// Ch(L^j (T* + T*)) from the doubled root set.
CharClass ch_exterior_double(int dim, int j);
/// Ch(T* (x) T*) from the pairwise root sums.
CharClass ch_tensor_square(int dim);
/// prod_i (1 - e^{x_i})(1 - e^{-x_i})
CharClass euler_product(int dim);
}  // namespace chern_roots

}  // namespace spinorlab
