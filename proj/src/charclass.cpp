#include "spinorlab/charclass.hpp"

#include "spinorlab/errors.hpp"
#include "spinorlab/poly.hpp"

#include <algorithm>
#include <cctype>

namespace spinorlab {

// ---------------------------------------------------------- PMonomial

PMonomial::PMonomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int a : e_)
        if (a < 0) throw UsageError("PMonomial: negative exponent");
    trim();
}

PMonomial PMonomial::generator(int i) {
    if (i < 1) throw UsageError("PMonomial: generator index starts at 1");
    std::vector<int> e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return PMonomial(std::move(e));
}

void PMonomial::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

int PMonomial::degree() const {
    int d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += 4 * static_cast<int>(i + 1) * e_[i];
    return d;
}

PMonomial operator*(const PMonomial& a, const PMonomial& b) {
    std::vector<int> e(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < a.e_.size(); ++i) e[i] += a.e_[i];
    for (std::size_t i = 0; i < b.e_.size(); ++i) e[i] += b.e_[i];
    return PMonomial(std::move(e));
}

bool operator<(const PMonomial& a, const PMonomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    const std::size_t n = std::max(a.e_.size(), b.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int x = i < a.e_.size() ? a.e_[i] : 0;
        const int y = i < b.e_.size() ? b.e_[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

std::string PMonomial::to_string() const {
    if (e_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "p" + std::to_string(i + 1);
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out;
}

PMonomial PMonomial::parse(const std::string& s) {
    if (s == "1") return PMonomial();
    PMonomial out;
    std::size_t pos = 0;
    auto fail = [&]() { throw InputError("not a Pontrjagin monomial: '" + s + "'"); };
    if (s.empty()) fail();
    while (pos < s.size()) {
        if (s[pos] != 'p') fail();
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || pos - start > 3) fail();
        const int idx = std::stoi(s.substr(start, pos - start));
        if (idx < 1) fail();
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start || pos - start > 3) fail();
            power = std::stoi(s.substr(start, pos - start));
            if (power < 1) fail();
        }
        std::vector<int> e(static_cast<std::size_t>(idx), 0);
        e.back() = power;
        out = out * PMonomial(std::move(e));
        if (pos < s.size()) {
            if (s[pos] != '*') fail();
            ++pos;
            if (pos == s.size()) fail();
        }
    }
    return out;
}

// ---------------------------------------------------------- CharClass

CharClass::CharClass(int dim) : dim_(dim) {
    if (dim < 0) throw UsageError("CharClass: negative dimension");
}

CharClass CharClass::constant(int dim, const Rational& c) {
    CharClass out(dim);
    out.add_term(PMonomial(), c);
    return out;
}

CharClass CharClass::generator(int dim, int i) {
    CharClass out(dim);
    out.add_term(PMonomial::generator(i), 1);
    return out;
}

Rational CharClass::coeff(const PMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CharClass::add_term(const PMonomial& m, const Rational& value) {
    Rational c = value;
    c.canonicalize();
    if (sgn(c) == 0 || m.degree() > dim_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

CharClass CharClass::component(int degree) const {
    CharClass out(dim_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.terms_.emplace(m, c);
    return out;
}

void CharClass::check_same(const CharClass& o) const {
    if (dim_ != o.dim_) throw UsageError("CharClass: dimension mismatch");
}

CharClass& CharClass::operator+=(const CharClass& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CharClass& CharClass::operator-=(const CharClass& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CharClass& CharClass::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

CharClass operator*(const CharClass& a, const CharClass& b) {
    a.check_same(b);
    CharClass out(a.dim_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.degree() + mb.degree() > a.dim_) continue;
            out.add_term(ma * mb, ca * cb);
        }
    return out;
}

CharClass CharClass::exp(const CharClass& c) {
    if (sgn(c.coeff(PMonomial())) != 0) throw UsageError("CharClass::exp: argument has a constant term");
    CharClass out = constant(c.dim_, 1);
    CharClass power = constant(c.dim_, 1);
    for (int k = 1; 4 * k <= c.dim_; ++k) {
        power = power * c * Rational(1, k);
        if (power.is_zero()) break;
        out += power;
    }
    return out;
}

std::string CharClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = sgn(c) < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (m.exponents().empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += m.to_string();
        }
    }
    return out;
}

// ---------------------------------------------------------- primary route

bool supported_dim(int dim) { return dim >= 4 && dim <= 12; }

namespace {

void check_dim(int dim) {
    if (!supported_dim(dim)) throw UsageError("characteristic classes are supported for dimensions 4..12, got " + std::to_string(dim));
}

Rational factorial(int k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(f);
}

using Series1 = std::vector<Rational>;  // coefficients of y^0, y^1, ...

/// sinh(sqrt(y)/2) / (sqrt(y)/2) = sum_k (y/4)^k / (2k+1)!
Series1 sinh_ratio_series(int order) {
    Series1 g(static_cast<std::size_t>(order + 1));
    for (int k = 0; k <= order; ++k) {
        Rational c = Rational(1) / factorial(2 * k + 1);
        for (int i = 0; i < k; ++i) c /= 4;
        g[static_cast<std::size_t>(k)] = c;
    }
    return g;
}

Series1 series_mul(const Series1& a, const Series1& b, int order) {
    Series1 out(static_cast<std::size_t>(order + 1));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i)
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// log(g) for g with constant term 1.
Series1 series_log(const Series1& g, int order) {
    Series1 u = g;
    u[0] = 0;
    Series1 out(static_cast<std::size_t>(order + 1));
    Series1 power(static_cast<std::size_t>(order + 1));
    power[0] = 1;
    for (int k = 1; k <= order; ++k) {
        power = series_mul(power, u, order);
        const Rational sign = k % 2 == 1 ? Rational(1) : Rational(-1);
        for (int i = 0; i <= order; ++i) out[static_cast<std::size_t>(i)] += sign * power[static_cast<std::size_t>(i)] / k;
    }
    return out;
}

/// 1/g for g with constant term 1.
Series1 series_inverse(const Series1& g, int order) {
    Series1 out(static_cast<std::size_t>(order + 1));
    out[0] = 1;
    for (int k = 1; k <= order; ++k) {
        Rational c = 0;
        for (int i = 1; i <= k && i < static_cast<int>(g.size()); ++i) c -= g[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = c;
    }
    return out;
}

/// P_k = sum over the Chern roots {+-x_i} (and a zero root in odd dimension)
/// of e^{k * root}.
CharClass exp_power_sum(int dim, int k) {
    CharClass out = CharClass::constant(dim, dim);
    for (int r = 1; 4 * r <= dim; ++r) {
        Rational c = Rational(2) / factorial(2 * r);
        for (int i = 0; i < 2 * r; ++i) c *= k;
        out += root_power_sum(dim, r) * c;
    }
    return out;
}

}  // namespace

CharClass root_power_sum(int dim, int r) {
    if (r < 1) throw UsageError("root_power_sum: r >= 1");
    std::vector<CharClass> s(static_cast<std::size_t>(r + 1), CharClass(dim));
    for (int q = 1; q <= r; ++q) {
        CharClass acc(dim);
        for (int i = 1; i < q; ++i) {
            const Rational sign = (i - 1) % 2 == 0 ? Rational(1) : Rational(-1);
            acc += CharClass::generator(dim, i) * s[static_cast<std::size_t>(q - i)] * sign;
        }
        const Rational sign = (q - 1) % 2 == 0 ? Rational(q) : Rational(-q);
        acc += CharClass::generator(dim, q) * sign;
        s[static_cast<std::size_t>(q)] = acc;
    }
    return s[static_cast<std::size_t>(r)];
}

CharClass ahat_series(int dim) {
    check_dim(dim);
    const int order = dim / 4;
    // log((x/2)/sinh(x/2)) as a series in y = x^2
    const Series1 f = series_log(sinh_ratio_series(order), order);
    CharClass exponent(dim);
    for (int k = 1; k <= order; ++k) exponent -= root_power_sum(dim, k) * f[static_cast<std::size_t>(k)];
    return CharClass::exp(exponent);
}

CharClass ch_cotangent(int dim) {
    check_dim(dim);
    return exp_power_sum(dim, 1);
}

CharClass ch_exterior_cotangent(int dim, int j) {
    check_dim(dim);
    if (j < 0 || j > dim) throw UsageError("ch_exterior_cotangent: need 0 <= j <= dim");
    std::vector<CharClass> e(static_cast<std::size_t>(j + 1), CharClass(dim));
    e[0] = CharClass::constant(dim, 1);
    std::vector<CharClass> P;
    P.reserve(static_cast<std::size_t>(j + 1));
    P.emplace_back(dim);
    for (int k = 1; k <= j; ++k) P.push_back(exp_power_sum(dim, k));
    for (int q = 1; q <= j; ++q) {
        CharClass acc(dim);
        for (int i = 1; i <= q; ++i) {
            const Rational sign = (i - 1) % 2 == 0 ? Rational(1) : Rational(-1);
            acc += e[static_cast<std::size_t>(q - i)] * P[static_cast<std::size_t>(i)] * sign;
        }
        e[static_cast<std::size_t>(q)] = acc * Rational(1, q);
    }
    return e[static_cast<std::size_t>(j)];
}

// ---------------------------------------------------------- Chern-root route

namespace chern_roots {

namespace {

struct RootRing {
    int dim;
    int roots;     // dim / 2
    int max_deg;   // polynomial degree in the roots, each of real degree 2

    explicit RootRing(int d) : dim(d), roots(d / 2), max_deg(d / 2) { check_dim(d); }

    MultiPoly one() const { return MultiPoly::constant(roots, Scalar(1)); }

    MultiPoly truncate(const MultiPoly& p) const {
        MultiPoly out(roots);
        for (const auto& [e, c] : p.terms())
            if (e.degree() <= max_deg) out.add_term(e, c);
        return out;
    }

    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const {
        MultiPoly out(roots);
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms())
                if (ea.degree() + eb.degree() <= max_deg) out.add_term(ea + eb, ca * cb);
        return out;
    }

    /// e^{sign * x_var}, truncated
    MultiPoly exp_root(int var, int sign) const {
        MultiPoly out(roots);
        for (int k = 0; k <= max_deg; ++k) {
            Exponent e;
            e.set(var, k);
            Rational c = Rational(1) / factorial(k);
            if (sign < 0 && k % 2 == 1) c = -c;
            out.add_term(e, Scalar(c));
        }
        return out;
    }

    /// Elementary symmetric polynomial e_i(x_1^2, ..., x_n^2).
    MultiPoly elementary_squares(int i) const {
        std::vector<MultiPoly> e(static_cast<std::size_t>(i + 1), MultiPoly(roots));
        e[0] = one();
        for (int v = 0; v < roots; ++v) {
            Exponent sq;
            sq.set(v, 2);
            for (int q = std::min(i, v + 1); q >= 1; --q)
                e[static_cast<std::size_t>(q)] += e[static_cast<std::size_t>(q - 1)].shifted(sq);
        }
        return e[static_cast<std::size_t>(i)];
    }

    /// Rewrites a symmetric even polynomial in the roots through p_i.
    CharClass reduce(MultiPoly p) const {
        CharClass out(dim);
        std::vector<MultiPoly> elem(static_cast<std::size_t>(roots + 1));
        for (int i = 1; i <= roots; ++i) elem[static_cast<std::size_t>(i)] = elementary_squares(i);
        while (!p.is_zero()) {
            const auto& [lead, c] = *p.terms().rbegin();
            std::vector<int> half(static_cast<std::size_t>(roots) + 1, 0);
            for (int v = 0; v < roots; ++v) {
                if (lead[v] % 2 != 0) throw InvariantError("Chern-root reduction: odd power in " + p.to_string());
                half[static_cast<std::size_t>(v)] = lead[v] / 2;
            }
            std::vector<int> pexp(static_cast<std::size_t>(roots), 0);
            MultiPoly basis = one();
            for (int i = 1; i <= roots; ++i) {
                const int a = half[static_cast<std::size_t>(i - 1)] - half[static_cast<std::size_t>(i)];
                if (a < 0) throw InvariantError("Chern-root reduction: polynomial is not symmetric");
                pexp[static_cast<std::size_t>(i - 1)] = a;
                for (int t = 0; t < a; ++t) basis = basis * elem[static_cast<std::size_t>(i)];
            }
            if (!c.is_real()) throw InvariantError("Chern-root reduction: non-real coefficient");
            const Scalar coef = c;
            out.add_term(PMonomial(pexp), coef.re());
            p -= basis * coef;
        }
        return out;
    }
};

}  // namespace

CharClass ahat_series(int dim) {
    const RootRing ring(dim);
    const int order = dim / 4;
    const Series1 h = series_inverse(sinh_ratio_series(order), order);
    MultiPoly prod = ring.one();
    for (int v = 0; v < ring.roots; ++v) {
        MultiPoly factor(ring.roots);
        for (int k = 0; k <= order; ++k) {
            Exponent e;
            e.set(v, 2 * k);
            factor.add_term(e, Scalar(h[static_cast<std::size_t>(k)]));
        }
        prod = ring.mul(prod, factor);
    }
    return ring.reduce(prod);
}

CharClass ch_cotangent(int dim) {
    const RootRing ring(dim);
    MultiPoly sum = MultiPoly::constant(ring.roots, Scalar(dim - 2 * ring.roots));
    for (int v = 0; v < ring.roots; ++v) sum += ring.exp_root(v, 1) + ring.exp_root(v, -1);
    return ring.reduce(sum);
}

namespace {

/// e^{root} for every Chern root of T*_C (a zero root in odd dimension).
std::vector<MultiPoly> cotangent_root_exponentials(const RootRing& ring) {
    std::vector<MultiPoly> out;
    for (int v = 0; v < ring.roots; ++v) {
        out.push_back(ring.exp_root(v, 1));
        out.push_back(ring.exp_root(v, -1));
    }
    if (ring.dim % 2 == 1) out.push_back(ring.one());
    return out;
}

/// Coefficient of t^j in prod_f (1 + t f).
MultiPoly elementary(const RootRing& ring, const std::vector<MultiPoly>& factors, int j) {
    std::vector<MultiPoly> gen(factors.size() + 1, MultiPoly(ring.roots));
    gen[0] = ring.one();
    for (std::size_t f = 0; f < factors.size(); ++f)
        for (std::size_t q = f + 1; q >= 1; --q) gen[q] += ring.mul(gen[q - 1], factors[f]);
    return j <= static_cast<int>(factors.size()) ? gen[static_cast<std::size_t>(j)] : MultiPoly(ring.roots);
}

}  // namespace

CharClass ch_exterior_cotangent(int dim, int j) {
    const RootRing ring(dim);
    if (j < 0 || j > dim) throw UsageError("ch_exterior_cotangent: need 0 <= j <= dim");
    return ring.reduce(elementary(ring, cotangent_root_exponentials(ring), j));
}

CharClass ch_exterior_double(int dim, int j) {
    const RootRing ring(dim);
    if (j < 0 || j > 2 * dim) throw UsageError("ch_exterior_double: need 0 <= j <= 2 dim");
    auto roots = cotangent_root_exponentials(ring);
    const auto copy = roots;
    roots.insert(roots.end(), copy.begin(), copy.end());
    return ring.reduce(elementary(ring, roots, j));
}

CharClass ch_tensor_square(int dim) {
    const RootRing ring(dim);
    const auto roots = cotangent_root_exponentials(ring);
    MultiPoly sum(ring.roots);
    for (const auto& a : roots)
        for (const auto& b : roots) sum += ring.mul(a, b);
    return ring.reduce(sum);
}

CharClass euler_product(int dim) {
    const RootRing ring(dim);
    MultiPoly prod = ring.one();
    for (int v = 0; v < ring.roots; ++v) {
        prod = ring.mul(prod, ring.one() - ring.exp_root(v, 1));
        prod = ring.mul(prod, ring.one() - ring.exp_root(v, -1));
    }
    return ring.reduce(prod);
}

}  // namespace chern_roots

}  // namespace spinorlab
