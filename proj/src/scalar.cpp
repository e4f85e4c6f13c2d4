#include "spinorlab/scalar.hpp"

#include "spinorlab/errors.hpp"

#include <ostream>

namespace spinorlab {

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw UsageError("Scalar: division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
    Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Scalar::to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "i";
    }
    if (sgn(re_) == 0) return "(" + imag + ")";
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0) out += "+";
    return out + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace spinorlab
