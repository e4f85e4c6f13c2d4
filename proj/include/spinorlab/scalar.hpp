#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace spinorlab {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact Gaussian rational re + im*i with arbitrary precision parts.
///
/// Both parts are kept in canonical form (positive denominators, reduced),
/// so equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return {Rational(0), Rational(1)}; }
    static Scalar frac(long num, long den) { return Scalar(Rational(num, den)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return {re_, -im_}; }
    Scalar operator-() const { return {-re_, -im_}; }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text: "3/2", "(-i)", "(1/2+3i)".
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_to_string(const Rational& q);

/// num/den in canonical form (GMP arithmetic requires canonical operands).
inline Rational ratio(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace spinorlab
