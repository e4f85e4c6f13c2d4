#include "spinorlab/fields.hpp"

#include <algorithm>
#include <sstream>

namespace spinorlab {

namespace {

void check_same_space(int a, int b) {
    if (a != b) throw UsageError("fields live on different ambient dimensions");
}

}  // namespace

// ------------------------------------------------------------ SpinorField

SpinorField::SpinorField(int m) : m_(m) {
    comps_.assign(SpinorSpace::get(m).dim(), MultiPoly(m));
}

SpinorField::SpinorField(int m, clifford::Spinor<MultiPoly> components) : m_(m), comps_(std::move(components)) {
    if (comps_.size() != SpinorSpace::get(m).dim()) throw UsageError("SpinorField: wrong number of components");
    for (const auto& p : comps_)
        if (p.num_vars() != m) throw UsageError("SpinorField: component has wrong variable count");
}

SpinorField SpinorField::constant(const SpinorVec& s) {
    SpinorField f(s.m);
    for (std::size_t a = 0; a < s.coords.size(); ++a) f.comps_[a] = MultiPoly::constant(s.m, s.coords[a]);
    return f;
}

SpinorField SpinorField::monomial(int m, std::size_t a, const Exponent& e, const Scalar& c) {
    SpinorField f(m);
    f.comps_.at(a) = MultiPoly::monomial(m, e, c);
    return f;
}

bool SpinorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

std::optional<int> SpinorField::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& p : comps_) {
        if (p.is_zero()) continue;
        const auto d = p.homogeneous_degree();
        if (!d || (deg && *deg != *d)) return std::nullopt;
        deg = d;
    }
    return deg;
}

SpinorField& SpinorField::operator+=(const SpinorField& o) {
    check_same_space(m_, o.m_);
    clifford::add_into(comps_, o.comps_);
    return *this;
}

SpinorField& SpinorField::operator-=(const SpinorField& o) {
    check_same_space(m_, o.m_);
    for (std::size_t a = 0; a < comps_.size(); ++a) comps_[a] -= o.comps_[a];
    return *this;
}

SpinorField& SpinorField::operator*=(const Scalar& c) {
    for (auto& p : comps_) p *= c;
    return *this;
}

SpinorField operator*(const MultiPoly& f, const SpinorField& a) {
    SpinorField out = a;
    for (auto& p : out.comps_) p = f * p;
    return out;
}

std::string SpinorField::to_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (std::size_t a = 0; a < comps_.size(); ++a) {
        if (comps_[a].is_zero()) continue;
        if (!first) os << ", ";
        os << '(' << a << ", " << comps_[a].to_string() << ')';
        first = false;
    }
    os << ']';
    return os.str();
}

// ----------------------------------------------------------- OneFormField

OneFormField::OneFormField(int m) : m_(m), comps_(static_cast<std::size_t>(m), SpinorField(m)) {}

OneFormField::OneFormField(int m, std::vector<SpinorField> components) : m_(m), comps_(std::move(components)) {
    if (comps_.size() != static_cast<std::size_t>(m)) throw UsageError("OneFormField: wrong number of components");
    for (const auto& c : comps_) check_same_space(m, c.m());
}

bool OneFormField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const SpinorField& f) { return f.is_zero(); });
}

std::optional<int> OneFormField::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& c : comps_) {
        if (c.is_zero()) continue;
        const auto d = c.homogeneous_degree();
        if (!d || (deg && *deg != *d)) return std::nullopt;
        deg = d;
    }
    return deg;
}

bool OneFormField::is_rs_admissible() const { return mu(*this).is_zero(); }

OneFormField& OneFormField::operator+=(const OneFormField& o) {
    check_same_space(m_, o.m_);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

OneFormField& OneFormField::operator-=(const OneFormField& o) {
    check_same_space(m_, o.m_);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

OneFormField& OneFormField::operator*=(const Scalar& c) {
    for (auto& f : comps_) f *= c;
    return *this;
}

OneFormField operator*(const MultiPoly& f, const OneFormField& a) {
    OneFormField out = a;
    for (auto& c : out.comps_) c = f * c;
    return out;
}

std::string OneFormField::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        for (std::size_t a = 0; a < comps_[i].components().size(); ++a) {
            const auto& p = comps_[i][a];
            if (p.is_zero()) continue;
            if (!first) os << '\n';
            os << "dx" << (i + 1) << " s" << (a + 1) << ": " << p.to_string();
            first = false;
        }
    }
    return first ? "0" : os.str();
}

// ------------------------------------------------------------- KFormField

KFormField::KFormField(int m, int degree) : m_(m), degree_(degree) {
    SpinorSpace::get(m);
    if (degree < 0 || degree > m) throw UsageError("KFormField: degree out of range");
}

KFormField KFormField::from_one_form(const OneFormField& psi) {
    KFormField w(psi.m(), 1);
    for (int i = 0; i < psi.m(); ++i) w.add({i}, psi[static_cast<std::size_t>(i)]);
    return w;
}

KFormField KFormField::from_spinor(const SpinorField& phi) {
    KFormField w(phi.m(), 0);
    w.add({}, phi);
    return w;
}

SpinorField KFormField::get(const Index& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? SpinorField(m_) : it->second;
}

void KFormField::add(const Index& idx, const SpinorField& value) {
    if (static_cast<int>(idx.size()) != degree_) throw UsageError("KFormField: index has wrong length");
    for (std::size_t p = 0; p < idx.size(); ++p) {
        if (idx[p] < 0 || idx[p] >= m_) throw UsageError("KFormField: index out of range");
        if (p > 0 && idx[p - 1] >= idx[p]) throw UsageError("KFormField: index not strictly increasing");
    }
    check_same_space(m_, value.m());
    if (value.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(idx, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

OneFormField KFormField::to_one_form() const {
    if (degree_ != 1) throw UsageError("KFormField::to_one_form: not a 1-form");
    OneFormField out(m_);
    for (const auto& [idx, f] : comps_) out[static_cast<std::size_t>(idx[0])] = f;
    return out;
}

SpinorField KFormField::to_spinor() const {
    if (degree_ != 0) throw UsageError("KFormField::to_spinor: not a 0-form");
    return get({});
}

KFormField& KFormField::operator+=(const KFormField& o) {
    check_same_space(m_, o.m_);
    if (degree_ != o.degree_) throw UsageError("KFormField: degree mismatch");
    for (const auto& [idx, f] : o.comps_) add(idx, f);
    return *this;
}

KFormField& KFormField::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        comps_.clear();
        return *this;
    }
    for (auto& [idx, f] : comps_) f *= c;
    return *this;
}

// ------------------------------------------------------------- operators

namespace {

SpinorField apply_e(int i, const SpinorField& f) {
    return SpinorField(f.m(), clifford::apply(f.space(), i, f.components()));
}

SpinorField partial(const SpinorField& f, int var) {
    clifford::Spinor<MultiPoly> out;
    out.reserve(f.components().size());
    for (const auto& p : f.components()) out.push_back(partial_derivative(p, var));
    return SpinorField(f.m(), std::move(out));
}

clifford::OneForm<MultiPoly> raw(const OneFormField& psi) {
    clifford::OneForm<MultiPoly> out;
    for (const auto& c : psi.components()) out.push_back(c.components());
    return out;
}

OneFormField wrap(int m, clifford::OneForm<MultiPoly> comps) {
    std::vector<SpinorField> out;
    for (auto& c : comps) out.emplace_back(m, std::move(c));
    return OneFormField(m, std::move(out));
}

}  // namespace

SpinorField dirac(const SpinorField& phi) {
    SpinorField out(phi.m());
    for (int i = 0; i < phi.m(); ++i) out += apply_e(i, partial(phi, i));
    return out;
}

SpinorField laplacian(const SpinorField& phi) {
    SpinorField out(phi.m());
    for (int i = 0; i < phi.m(); ++i) out += partial(partial(phi, i), i);
    return out;
}

SpinorField clifford_x(const SpinorField& phi) {
    SpinorField out(phi.m());
    for (int i = 0; i < phi.m(); ++i) out += MultiPoly::variable(phi.m(), i) * apply_e(i, phi);
    return out;
}

OneFormField gradient(const SpinorField& phi) {
    OneFormField out(phi.m());
    for (int i = 0; i < phi.m(); ++i) out[static_cast<std::size_t>(i)] = partial(phi, i);
    return out;
}

OneFormField twisted_dirac(const OneFormField& psi) {
    OneFormField out(psi.m());
    for (int i = 0; i < psi.m(); ++i) out[static_cast<std::size_t>(i)] = dirac(psi[static_cast<std::size_t>(i)]);
    return out;
}

OneFormField twistor(const SpinorField& phi) {
    const int m = phi.m();
    const SpinorField d = dirac(phi) * Scalar::frac(1, m);
    OneFormField out(m);
    for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = partial(phi, j) + apply_e(j, d);
    return out;
}

SpinorField delta_div(const OneFormField& psi) {
    SpinorField out(psi.m());
    for (int i = 0; i < psi.m(); ++i) out -= partial(psi[static_cast<std::size_t>(i)], i);
    return out;
}

OneFormField rarita_schwinger(const OneFormField& psi) {
    if (!psi.is_rs_admissible())
        throw PreconditionError("rarita_schwinger: input is not S_{3/2}-valued (mu(psi) != 0)");
    const int m = psi.m();
    OneFormField out = twisted_dirac(psi);
    SpinorField sum(m);
    for (int k = 0; k < m; ++k) sum += apply_e(k, out[static_cast<std::size_t>(k)]);
    sum *= Scalar::frac(1, m);
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] += apply_e(i, sum);
    return out;
}

SpinorField mu(const OneFormField& psi) {
    const auto& S = SpinorSpace::get(psi.m());
    return SpinorField(psi.m(), clifford::mu(S, raw(psi)));
}

OneFormField iota(const SpinorField& sigma) {
    return wrap(sigma.m(), clifford::iota(sigma.space(), sigma.components()));
}

OneFormField project_half(const OneFormField& psi) {
    return wrap(psi.m(), clifford::project_half(SpinorSpace::get(psi.m()), raw(psi)));
}

OneFormField project_threehalf(const OneFormField& psi) {
    return wrap(psi.m(), clifford::project_threehalf(SpinorSpace::get(psi.m()), raw(psi)));
}

KFormField y_contract(const KFormField& omega) {
    if (omega.degree() == 0) throw UsageError("y_contract: needs a form of degree >= 1");
    KFormField out(omega.m(), omega.degree() - 1);
    for (const auto& [idx, s] : omega.components()) {
        for (std::size_t p = 0; p < idx.size(); ++p) {
            KFormField::Index rest = idx;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
            // contraction of dx^idx by e_i gives (-1)^p dx^rest
            const Scalar sign = (p % 2 == 0) ? Scalar(-1) : Scalar(1);
            out.add(rest, apply_e(idx[p], s) * sign);
        }
    }
    return out;
}

KFormField form_gradient(const KFormField& omega) {
    if (omega.degree() >= omega.m()) return KFormField(omega.m(), omega.m());
    KFormField out(omega.m(), omega.degree() + 1);
    for (const auto& [idx, s] : omega.components()) {
        for (int i = 0; i < omega.m(); ++i) {
            if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
            KFormField::Index next = idx;
            auto pos = std::lower_bound(next.begin(), next.end(), i);
            const auto before = pos - next.begin();
            next.insert(pos, i);
            // dx^i wedge dx^idx = (-1)^before dx^next
            const Scalar sign = (before % 2 == 0) ? Scalar(1) : Scalar(-1);
            out.add(next, partial(s, i) * sign);
        }
    }
    return out;
}

KFormField twisted_dirac(const KFormField& omega) {
    KFormField out(omega.m(), omega.degree());
    for (const auto& [idx, s] : omega.components()) out.add(idx, dirac(s));
    return out;
}

SpinorField L_map(const OneFormField& psi) {
    SpinorField out(psi.m());
    for (int i = 0; i < psi.m(); ++i) out += MultiPoly::variable(psi.m(), i) * psi[static_cast<std::size_t>(i)];
    return out;
}

OneFormField clifford_coframe(const SpinorField& psi0) {
    OneFormField out(psi0.m());
    for (int i = 0; i < psi0.m(); ++i) out[static_cast<std::size_t>(i)] = apply_e(i, psi0);
    return out;
}

OneFormField xi_map(const SpinorField& psi0, int k) {
    const int m = psi0.m();
    if (k < 1) throw UsageError("xi_map: output degree must be >= 1");
    if (psi0.is_zero()) return OneFormField(m);
    const auto deg = psi0.homogeneous_degree();
    if (!deg || *deg != k - 1) throw PreconditionError("xi_map: seed must be (k-1)-homogeneous");
    if (!dirac(psi0).is_zero()) throw PreconditionError("xi_map: seed is not monogenic");

    OneFormField out = MultiPoly::norm_squared(m) * twistor(psi0);
    const SpinorField xpsi = clifford_x(psi0);
    for (int j = 0; j < m; ++j) {
        auto& comp = out[static_cast<std::size_t>(j)];
        comp += (MultiPoly::variable(m, j) * psi0) * Scalar(m);
        comp += apply_e(j, xpsi);
    }
    out *= Scalar::frac(1, 2 * (m + k - 2));
    return out;
}

}  // namespace spinorlab
