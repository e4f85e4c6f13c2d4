#pragma once

#include "spinorlab/errors.hpp"
#include "spinorlab/linalg.hpp"
#include "spinorlab/scalar.hpp"

#include <cstddef>
#include <vector>

namespace spinorlab {

inline constexpr int kMinAmbientDim = 1;
inline constexpr int kMaxAmbientDim = 8;

/// Complex spinor module of the Clifford algebra of flat m-space with
/// e_i e_j + e_j e_i = -2 delta_ij.
///
/// The generators come from the usual tensor-product construction with Pauli
/// matrices, e_i = i*gamma_i, so every e_i is a signed permutation matrix
/// with entries in {0, +-1, +-i}. Basis index bits are read slot by slot,
/// slot 1 being the most significant bit.
class SpinorSpace {
public:
    /// Shared immutable instance for 1 <= m <= 8.
    static const SpinorSpace& get(int m);

    int ambient_dim() const { return m_; }
    std::size_t dim() const { return dim_; }

    /// e_i sends basis vector a to phase(i, a) * basis vector target(i, a).
    /// Generators are 0-based: 0 <= i < m.
    std::size_t target(int i, std::size_t a) const { return target_[idx(i, a)]; }
    const Scalar& phase(int i, std::size_t a) const { return phase_[idx(i, a)]; }

    Matrix gamma(int i) const;

    /// Even m only: the chirality involution i^{m/2} e_1...e_m, diagonal in
    /// this basis with entries +-1.
    bool has_chirality() const { return m_ % 2 == 0; }
    int chirality(std::size_t a) const;
    Matrix chirality_matrix() const;

    void check_index(int i) const {
        if (i < 0 || i >= m_) throw UsageError("clifford index out of range");
    }

private:
    explicit SpinorSpace(int m);
    std::size_t idx(int i, std::size_t a) const { return static_cast<std::size_t>(i) * dim_ + a; }

    int m_;
    std::size_t dim_;
    std::vector<std::size_t> target_;
    std::vector<Scalar> phase_;
    std::vector<int> chirality_;
};

// Generic pointwise algebra, written once for constant spinors (T = Scalar)
// and polynomial spinor fields (T = MultiPoly).
namespace clifford {

template <class T>
using Spinor = std::vector<T>;
template <class T>
using OneForm = std::vector<Spinor<T>>;

template <class T>
Spinor<T> apply(const SpinorSpace& S, int i, const Spinor<T>& s) {
    S.check_index(i);
    if (s.size() != S.dim()) throw UsageError("clifford apply: spinor has wrong dimension");
    Spinor<T> out(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) out[S.target(i, a)] = s[a] * S.phase(i, a);
    return out;
}

template <class T>
Spinor<T>& add_into(Spinor<T>& acc, const Spinor<T>& s) {
    if (acc.size() != s.size()) throw UsageError("spinor dimension mismatch");
    for (std::size_t a = 0; a < s.size(); ++a) acc[a] += s[a];
    return acc;
}

template <class T>
Spinor<T> scaled(Spinor<T> s, const Scalar& c) {
    for (auto& x : s) x *= c;
    return s;
}

/// sum_i e_i psi_i
template <class T>
Spinor<T> mu(const SpinorSpace& S, const OneForm<T>& psi) {
    if (psi.size() != static_cast<std::size_t>(S.ambient_dim()))
        throw UsageError("mu: one-form has wrong number of components");
    Spinor<T> acc = apply(S, 0, psi[0]);
    for (int i = 1; i < S.ambient_dim(); ++i) add_into(acc, apply(S, i, psi[static_cast<std::size_t>(i)]));
    return acc;
}

/// component i is -(1/m) e_i sigma
template <class T>
OneForm<T> iota(const SpinorSpace& S, const Spinor<T>& sigma) {
    const Scalar c = Scalar::frac(-1, S.ambient_dim());
    OneForm<T> out;
    out.reserve(static_cast<std::size_t>(S.ambient_dim()));
    for (int i = 0; i < S.ambient_dim(); ++i) out.push_back(scaled(apply(S, i, sigma), c));
    return out;
}

template <class T>
OneForm<T> project_half(const SpinorSpace& S, const OneForm<T>& psi) {
    return iota(S, mu(S, psi));
}

template <class T>
OneForm<T> project_threehalf(const SpinorSpace& S, const OneForm<T>& psi) {
    OneForm<T> half = project_half(S, psi);
    OneForm<T> out = psi;
    for (std::size_t j = 0; j < out.size(); ++j) add_into(out[j], scaled(half[j], Scalar(-1)));
    return out;
}

}  // namespace clifford

/// A constant spinor.
struct SpinorVec {
    int m = 0;
    Vector coords;

    static SpinorVec zero(int m);
    static SpinorVec basis(int m, std::size_t a);
    bool is_zero() const;
    friend bool operator==(const SpinorVec& a, const SpinorVec& b) {
        return a.m == b.m && a.coords == b.coords;
    }
    friend bool operator!=(const SpinorVec& a, const SpinorVec& b) { return !(a == b); }
};

/// An element of S (x) (R^m)*, component i paired with the coframe vector i.
struct AlgebraicOneForm {
    int m = 0;
    std::vector<SpinorVec> components;

    static AlgebraicOneForm zero(int m);
    bool is_zero() const;
    friend bool operator==(const AlgebraicOneForm& a, const AlgebraicOneForm& b) {
        return a.m == b.m && a.components == b.components;
    }
    friend bool operator!=(const AlgebraicOneForm& a, const AlgebraicOneForm& b) { return !(a == b); }
};

SpinorVec clifford_apply(int i, const SpinorVec& psi);
SpinorVec mu(const AlgebraicOneForm& psi);
AlgebraicOneForm iota(const SpinorVec& sigma);
AlgebraicOneForm project_half(const AlgebraicOneForm& psi);
AlgebraicOneForm project_threehalf(const AlgebraicOneForm& psi);

/// Matrix of a linear map on S (x) (R^m)* in the coordinates
/// index = component * dim S + spinor index.
Matrix one_form_operator_matrix(int m, AlgebraicOneForm (*op)(const AlgebraicOneForm&));

}  // namespace spinorlab
