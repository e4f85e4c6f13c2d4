#include "spinorlab/poly.hpp"

#include "spinorlab/errors.hpp"

#include <sstream>

namespace spinorlab {

Exponent::Exponent(const std::vector<int>& powers) {
    if (powers.size() > static_cast<std::size_t>(kMaxVars))
        throw UsageError("Exponent: too many variables");
    for (std::size_t i = 0; i < powers.size(); ++i) set(static_cast<int>(i), powers[i]);
}

Exponent Exponent::unit(int var) {
    Exponent e;
    e.set(var, 1);
    return e;
}

void Exponent::set(int var, int power) {
    if (var < 0 || var >= kMaxVars) throw UsageError("Exponent: variable index out of range");
    if (power < 0 || power > 255) throw UsageError("Exponent: power out of range");
    auto& slot = e_[static_cast<std::size_t>(var)];
    degree_ += power - slot;
    slot = static_cast<std::uint8_t>(power);
}

Exponent& Exponent::operator+=(const Exponent& o) {
    for (int i = 0; i < kMaxVars; ++i) {
        if (o[i] != 0) set(i, (*this)[i] + o[i]);
    }
    return *this;
}

namespace {

void enumerate(int num_vars, int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
    if (var == num_vars - 1) {
        cur.set(var, remaining);
        out.push_back(cur);
        cur.set(var, 0);
        return;
    }
    for (int p = remaining; p >= 0; --p) {
        cur.set(var, p);
        enumerate(num_vars, var + 1, remaining - p, cur, out);
    }
    cur.set(var, 0);
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int num_vars, int degree) {
    if (num_vars < 1 || num_vars > kMaxVars) throw UsageError("monomials_of_degree: bad variable count");
    std::vector<Exponent> out;
    if (degree < 0) return out;
    Exponent cur;
    enumerate(num_vars, 0, degree, cur, out);
    // enumerate() walks x1-descending, which is grlex-descending
    std::vector<Exponent> asc(out.rbegin(), out.rend());
    return asc;
}

MultiPoly::MultiPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0 || num_vars > kMaxVars) throw UsageError("MultiPoly: bad variable count");
}

MultiPoly MultiPoly::constant(int num_vars, const Scalar& c) {
    return monomial(num_vars, Exponent{}, c);
}

MultiPoly MultiPoly::variable(int num_vars, int var) {
    if (var < 0 || var >= num_vars) throw UsageError("MultiPoly::variable: index out of range");
    return monomial(num_vars, Exponent::unit(var), Scalar(1));
}

MultiPoly MultiPoly::monomial(int num_vars, const Exponent& e, const Scalar& c) {
    MultiPoly p(num_vars);
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::norm_squared(int num_vars) {
    MultiPoly p(num_vars);
    for (int i = 0; i < num_vars; ++i) {
        Exponent e;
        e.set(i, 2);
        p.add_term(e, Scalar(1));
    }
    return p;
}

Scalar MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int lo = terms_.begin()->first.degree();
    const int hi = terms_.rbegin()->first.degree();
    if (lo != hi) return std::nullopt;
    return lo;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (num_vars_ != o.num_vars_) throw UsageError("MultiPoly: mismatched num_vars");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (num_vars_ != o.num_vars_) throw UsageError("MultiPoly: mismatched num_vars");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_) throw UsageError("poly_mul: mismatched num_vars");
    MultiPoly out(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

MultiPoly MultiPoly::shifted(const Exponent& e) const {
    MultiPoly out(num_vars_);
    for (const auto& [t, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), t + e, c);
    return out;
}

std::string MultiPoly::to_string(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Scalar& c = it->second;
        std::string coeff;
        if (c.is_real() && sgn(c.re()) < 0) {
            os << (first ? "-" : " - ");
            coeff = Scalar(Rational(-c.re())).to_string();
        } else {
            if (!first) os << " + ";
            coeff = c.to_string();
        }
        os << coeff;
        for (int v = 0; v < num_vars_; ++v) {
            const int p = it->first[v];
            if (p == 0) continue;
            os << '*' << var_prefix << (v + 1);
            if (p > 1) os << '^' << p;
        }
        first = false;
    }
    return os.str();
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly partial_derivative(const MultiPoly& p, int var) {
    if (var < 0 || var >= p.num_vars()) throw UsageError("partial_derivative: variable out of range");
    MultiPoly out(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        const int power = e[var];
        if (power == 0) continue;
        Exponent d = e;
        d.set(var, power - 1);
        out.add_term(d, c * Scalar(power));
    }
    return out;
}

}  // namespace spinorlab
