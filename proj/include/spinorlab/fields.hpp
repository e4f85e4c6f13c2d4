#pragma once

#include "spinorlab/clifford.hpp"
#include "spinorlab/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinorlab {

/// Polynomial map from flat m-space to the spinor space: one MultiPoly in m
/// variables per spinor coordinate.
class SpinorField {
public:
    SpinorField() = default;
    explicit SpinorField(int m);
    SpinorField(int m, clifford::Spinor<MultiPoly> components);

    static SpinorField constant(const SpinorVec& s);
    /// c * x^e in spinor coordinate a.
    static SpinorField monomial(int m, std::size_t a, const Exponent& e, const Scalar& c);

    int m() const { return m_; }
    const SpinorSpace& space() const { return SpinorSpace::get(m_); }
    const clifford::Spinor<MultiPoly>& components() const { return comps_; }
    const MultiPoly& operator[](std::size_t a) const { return comps_.at(a); }
    MultiPoly& operator[](std::size_t a) { return comps_.at(a); }

    bool is_zero() const;
    std::optional<int> homogeneous_degree() const;

    SpinorField& operator+=(const SpinorField& o);
    SpinorField& operator-=(const SpinorField& o);
    SpinorField& operator*=(const Scalar& c);
    friend SpinorField operator+(SpinorField a, const SpinorField& b) { return a += b; }
    friend SpinorField operator-(SpinorField a, const SpinorField& b) { return a -= b; }
    friend SpinorField operator*(SpinorField a, const Scalar& c) { return a *= c; }
    friend SpinorField operator*(const Scalar& c, SpinorField a) { return a *= c; }
    /// Multiplication by a scalar polynomial function.
    friend SpinorField operator*(const MultiPoly& f, const SpinorField& a);
    friend bool operator==(const SpinorField& a, const SpinorField& b) {
        return a.m_ == b.m_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const SpinorField& a, const SpinorField& b) { return !(a == b); }

    /// "[(a, poly), ...]" over the nonzero spinor coordinates.
    std::string to_string() const;

private:
    int m_ = 0;
    clifford::Spinor<MultiPoly> comps_;
};

/// S-valued one-form sum_i psi_i dx^i.
class OneFormField {
public:
    OneFormField() = default;
    explicit OneFormField(int m);
    OneFormField(int m, std::vector<SpinorField> components);

    int m() const { return m_; }
    const std::vector<SpinorField>& components() const { return comps_; }
    const SpinorField& operator[](std::size_t i) const { return comps_.at(i); }
    SpinorField& operator[](std::size_t i) { return comps_.at(i); }

    bool is_zero() const;
    std::optional<int> homogeneous_degree() const;
    /// mu(psi) == 0 identically, i.e. the field takes values in S_{3/2}.
    bool is_rs_admissible() const;

    OneFormField& operator+=(const OneFormField& o);
    OneFormField& operator-=(const OneFormField& o);
    OneFormField& operator*=(const Scalar& c);
    friend OneFormField operator+(OneFormField a, const OneFormField& b) { return a += b; }
    friend OneFormField operator-(OneFormField a, const OneFormField& b) { return a -= b; }
    friend OneFormField operator*(OneFormField a, const Scalar& c) { return a *= c; }
    friend OneFormField operator*(const Scalar& c, OneFormField a) { return a *= c; }
    friend OneFormField operator*(const MultiPoly& f, const OneFormField& a);
    friend bool operator==(const OneFormField& a, const OneFormField& b) {
        return a.m_ == b.m_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const OneFormField& a, const OneFormField& b) { return !(a == b); }

    /// One line per nonzero (form index, spinor coordinate), both 1-based:
    /// "dx2 s1: poly".
    std::string to_string() const;

private:
    int m_ = 0;
    std::vector<SpinorField> comps_;
};

/// Spinor-valued k-form; components keyed by strictly increasing 0-based
/// index tuples. Only nonzero components are stored.
class KFormField {
public:
    using Index = std::vector<int>;

    KFormField(int m, int degree);
    static KFormField from_one_form(const OneFormField& psi);
    static KFormField from_spinor(const SpinorField& phi);

    int m() const { return m_; }
    int degree() const { return degree_; }
    const std::map<Index, SpinorField>& components() const { return comps_; }
    SpinorField get(const Index& idx) const;
    /// Adds `value` into the component dx^idx; idx must be strictly increasing.
    void add(const Index& idx, const SpinorField& value);

    bool is_zero() const { return comps_.empty(); }
    OneFormField to_one_form() const;
    SpinorField to_spinor() const;

    KFormField& operator+=(const KFormField& o);
    KFormField& operator*=(const Scalar& c);
    friend KFormField operator+(KFormField a, const KFormField& b) { return a += b; }
    friend KFormField operator*(KFormField a, const Scalar& c) { return a *= c; }
    friend bool operator==(const KFormField& a, const KFormField& b) {
        return a.m_ == b.m_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const KFormField& a, const KFormField& b) { return !(a == b); }

private:
    int m_;
    int degree_;
    std::map<Index, SpinorField> comps_;
};

// ----------------------------------------------------------- operators

/// D = sum_i e_i d/dx_i
SpinorField dirac(const SpinorField& phi);
/// Componentwise sum_i d^2/dx_i^2.
SpinorField laplacian(const SpinorField& phi);
/// (sum_i x_i e_i) . phi
SpinorField clifford_x(const SpinorField& phi);
/// nabla phi = sum_i d_i phi dx^i
OneFormField gradient(const SpinorField& phi);
/// Componentwise Dirac operator on one-forms.
OneFormField twisted_dirac(const OneFormField& psi);
/// sum_j (d_j phi + (1/m) e_j D phi) dx^j, which is pi_{3/2}(nabla phi)
OneFormField twistor(const SpinorField& phi);
/// -sum_i d_i psi_i
SpinorField delta_div(const OneFormField& psi);
/// sum_i (D psi_i + (1/m) e_i sum_k e_k D psi_k) dx^i for psi with
/// mu(psi) == 0; throws PreconditionError
/// otherwise.
OneFormField rarita_schwinger(const OneFormField& psi);

// Pointwise algebra lifted to fields.
SpinorField mu(const OneFormField& psi);
OneFormField iota(const SpinorField& sigma);
OneFormField project_half(const OneFormField& psi);
OneFormField project_threehalf(const OneFormField& psi);

/// Y(w (x) s) = -sum_i contraction(e_i) w (x) e_i s, lowering form degree by
/// one. Throws UsageError on 0-forms.
KFormField y_contract(const KFormField& omega);
/// Covariant derivative of spinor-valued forms (flat space: exterior
/// derivative acting on each spinor coordinate).
KFormField form_gradient(const KFormField& omega);
/// Componentwise Dirac operator on spinor-valued forms.
KFormField twisted_dirac(const KFormField& omega);

/// L(psi) = sum_i x_i psi_i
SpinorField L_map(const OneFormField& psi);

/// Solution of D_T Xi = sum_i e_i psi0 dx^i built from a monogenic psi0 of
/// degree k-1:
///   Xi(psi0) = (|x|^2 T(psi0) + m sum_j x_j psi0 dx^j + sum_j e_j (x.psi0) dx^j)
///              / (2 (m + k - 2)).
/// The result is k-homogeneous with mu(Xi) == 0. Throws PreconditionError for
/// a non-monogenic seed or one of the wrong degree.
OneFormField xi_map(const SpinorField& psi0, int k);

/// sum_i e_i psi0 dx^i, the right-hand side Xi is built to produce.
OneFormField clifford_coframe(const SpinorField& psi0);

}  // namespace spinorlab
