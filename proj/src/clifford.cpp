#include "spinorlab/clifford.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace spinorlab {

namespace {

// Pauli action on one tensor slot: returns (new bit, phase).
struct SlotAction {
    int flip;  // 1 if the bit flips
    std::array<Scalar, 2> phase;  // indexed by the incoming bit
};

SlotAction pauli(int which) {
    switch (which) {
        case 1: return {1, {Scalar(1), Scalar(1)}};             // sigma_1
        case 2: return {1, {Scalar::i(), -Scalar::i()}};        // sigma_2
        case 3: return {0, {Scalar(1), Scalar(-1)}};            // sigma_3
        default: return {0, {Scalar(1), Scalar(1)}};            // identity
    }
}

}  // namespace

SpinorSpace::SpinorSpace(int m) : m_(m) {
    const int r = m / 2;
    dim_ = std::size_t{1} << r;
    target_.resize(static_cast<std::size_t>(m) * dim_);
    phase_.resize(static_cast<std::size_t>(m) * dim_);
    for (int g = 0; g < m; ++g) {
        // gamma_{2j-1} = s3^(j-1) (x) s1 (x) 1..., gamma_{2j} = ... s2 ...,
        // gamma_{2r+1} = s3^r
        std::vector<int> slots(static_cast<std::size_t>(r), 0);
        const int j = g / 2;
        if (j < r) {
            for (int s = 0; s < j; ++s) slots[static_cast<std::size_t>(s)] = 3;
            slots[static_cast<std::size_t>(j)] = (g % 2 == 0) ? 1 : 2;
        } else {
            for (int s = 0; s < r; ++s) slots[static_cast<std::size_t>(s)] = 3;
        }
        for (std::size_t a = 0; a < dim_; ++a) {
            std::size_t out = a;
            Scalar ph = Scalar::i();  // e = i * gamma
            for (int s = 0; s < r; ++s) {
                const std::size_t bit = std::size_t{1} << (r - 1 - s);
                const int in = (a & bit) ? 1 : 0;
                const SlotAction act = pauli(slots[static_cast<std::size_t>(s)]);
                ph *= act.phase[static_cast<std::size_t>(in)];
                if (act.flip) out ^= bit;
            }
            target_[idx(g, a)] = out;
            phase_[idx(g, a)] = ph;
        }
    }
    if (m % 2 == 0) {
        // i^{m/2} e_1 ... e_m; diagonal for this construction
        Matrix prod = Matrix::identity(dim_);
        for (int g = 0; g < m; ++g) prod = prod * gamma(g);
        Scalar c(1);
        for (int k = 0; k < r; ++k) c *= Scalar::i();
        prod = c * prod;
        chirality_.resize(dim_);
        for (std::size_t a = 0; a < dim_; ++a) {
            for (std::size_t b = 0; b < dim_; ++b) {
                if (a != b && !prod(a, b).is_zero()) throw InvariantError("chirality is not diagonal");
            }
            if (prod(a, a) == Scalar(1)) {
                chirality_[a] = 1;
            } else if (prod(a, a) == Scalar(-1)) {
                chirality_[a] = -1;
            } else {
                throw InvariantError("chirality eigenvalue is not +-1");
            }
        }
    }
}

const SpinorSpace& SpinorSpace::get(int m) {
    if (m < kMinAmbientDim || m > kMaxAmbientDim) throw UsageError("SpinorSpace: ambient dimension out of range [1, 8]");
    static std::array<std::unique_ptr<SpinorSpace>, kMaxAmbientDim + 1> cache;
    static std::array<std::once_flag, kMaxAmbientDim + 1> flags;
    const auto slot = static_cast<std::size_t>(m);
    std::call_once(flags[slot], [&] { cache[slot].reset(new SpinorSpace(m)); });
    return *cache[slot];
}

Matrix SpinorSpace::gamma(int i) const {
    check_index(i);
    Matrix g(dim_, dim_);
    for (std::size_t a = 0; a < dim_; ++a) g(target(i, a), a) = phase(i, a);
    return g;
}

int SpinorSpace::chirality(std::size_t a) const {
    if (!has_chirality()) throw UsageError("chirality: odd ambient dimension");
    return chirality_.at(a);
}

Matrix SpinorSpace::chirality_matrix() const {
    Matrix g(dim_, dim_);
    for (std::size_t a = 0; a < dim_; ++a) g(a, a) = Scalar(chirality(a));
    return g;
}

// ------------------------------------------------------- typed wrappers

SpinorVec SpinorVec::zero(int m) { return {m, Vector(SpinorSpace::get(m).dim())}; }

SpinorVec SpinorVec::basis(int m, std::size_t a) {
    SpinorVec v = zero(m);
    v.coords.at(a) = Scalar(1);
    return v;
}

bool SpinorVec::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

AlgebraicOneForm AlgebraicOneForm::zero(int m) {
    return {m, std::vector<SpinorVec>(static_cast<std::size_t>(m), SpinorVec::zero(m))};
}

bool AlgebraicOneForm::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

clifford::OneForm<Scalar> raw(const AlgebraicOneForm& psi) {
    const auto& S = SpinorSpace::get(psi.m);
    if (psi.components.size() != static_cast<std::size_t>(psi.m))
        throw UsageError("one-form has wrong number of components");
    clifford::OneForm<Scalar> out;
    for (const auto& c : psi.components) {
        if (c.m != psi.m || c.coords.size() != S.dim()) throw UsageError("one-form component has wrong shape");
        out.push_back(c.coords);
    }
    return out;
}

AlgebraicOneForm wrap(int m, clifford::OneForm<Scalar> comps) {
    AlgebraicOneForm out{m, {}};
    for (auto& c : comps) out.components.push_back(SpinorVec{m, std::move(c)});
    return out;
}

}  // namespace

SpinorVec clifford_apply(int i, const SpinorVec& psi) {
    return {psi.m, clifford::apply(SpinorSpace::get(psi.m), i, psi.coords)};
}

SpinorVec mu(const AlgebraicOneForm& psi) {
    return {psi.m, clifford::mu(SpinorSpace::get(psi.m), raw(psi))};
}

AlgebraicOneForm iota(const SpinorVec& sigma) {
    return wrap(sigma.m, clifford::iota(SpinorSpace::get(sigma.m), sigma.coords));
}

AlgebraicOneForm project_half(const AlgebraicOneForm& psi) {
    return wrap(psi.m, clifford::project_half(SpinorSpace::get(psi.m), raw(psi)));
}

AlgebraicOneForm project_threehalf(const AlgebraicOneForm& psi) {
    return wrap(psi.m, clifford::project_threehalf(SpinorSpace::get(psi.m), raw(psi)));
}

Matrix one_form_operator_matrix(int m, AlgebraicOneForm (*op)(const AlgebraicOneForm&)) {
    const std::size_t ds = SpinorSpace::get(m).dim();
    const std::size_t n = static_cast<std::size_t>(m) * ds;
    Matrix out(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        AlgebraicOneForm e = AlgebraicOneForm::zero(m);
        e.components[col / ds].coords[col % ds] = Scalar(1);
        const AlgebraicOneForm img = op(e);
        for (std::size_t row = 0; row < n; ++row) out(row, col) = img.components[row / ds].coords[row % ds];
    }
    return out;
}

}  // namespace spinorlab
