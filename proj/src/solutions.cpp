#include "spinorlab/solutions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace spinorlab {

SolverLimits SolverLimits::from_env() {
    SolverLimits limits;
    if (const char* env = std::getenv("SPINORLAB_MAX_DEGREE")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 64) {
            limits.max_k_monogenic = std::max(limits.max_k_monogenic, static_cast<int>(v));
            limits.max_k_rs = std::max(limits.max_k_rs, static_cast<int>(v));
        }
    }
    return limits;
}

// ------------------------------------------------------ HomogeneousCoords

HomogeneousCoords::HomogeneousCoords(int m, int degree, bool one_form)
    : m_(m), degree_(degree), one_form_(one_form), spinor_dim_(SpinorSpace::get(m).dim()) {
    monomials_ = monomials_of_degree(m, degree);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
    const std::size_t forms = one_form ? static_cast<std::size_t>(m) : 1;
    dim_ = forms * spinor_dim_ * monomials_.size();
}

void HomogeneousCoords::flatten_into(const SpinorField& f, std::size_t form_index, SparseVector& out) const {
    if (f.m() != m_) throw UsageError("HomogeneousCoords: field on wrong ambient dimension");
    const std::size_t nmon = monomials_.size();
    for (std::size_t a = 0; a < spinor_dim_; ++a) {
        const std::size_t base = (form_index * spinor_dim_ + a) * nmon;
        for (const auto& [e, c] : f[a].terms()) {
            auto it = index_.find(e);
            if (it == index_.end()) throw UsageError("HomogeneousCoords: field is not homogeneous of the expected degree");
            out.emplace_back(base + it->second, c);
        }
    }
}

SparseVector HomogeneousCoords::flatten(const SpinorField& f) const {
    if (one_form_) throw UsageError("HomogeneousCoords: expected a one-form");
    SparseVector out;
    flatten_into(f, 0, out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

SparseVector HomogeneousCoords::flatten(const OneFormField& f) const {
    if (!one_form_) throw UsageError("HomogeneousCoords: expected a spinor field");
    if (f.m() != m_) throw UsageError("HomogeneousCoords: field on wrong ambient dimension");
    SparseVector out;
    for (int i = 0; i < m_; ++i) flatten_into(f[static_cast<std::size_t>(i)], static_cast<std::size_t>(i), out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

SpinorField HomogeneousCoords::spinor_field(const SparseVector& v) const {
    if (one_form_) throw UsageError("HomogeneousCoords: expected spinor coordinates");
    SpinorField f(m_);
    const std::size_t nmon = monomials_.size();
    for (const auto& [idx, c] : v) {
        if (idx >= dim_) throw UsageError("HomogeneousCoords: index out of range");
        f[idx / nmon].add_term(monomials_[idx % nmon], c);
    }
    return f;
}

OneFormField HomogeneousCoords::one_form_field(const SparseVector& v) const {
    if (!one_form_) throw UsageError("HomogeneousCoords: expected one-form coordinates");
    OneFormField f(m_);
    const std::size_t nmon = monomials_.size();
    for (const auto& [idx, c] : v) {
        if (idx >= dim_) throw UsageError("HomogeneousCoords: index out of range");
        const std::size_t block = idx / nmon;
        f[block / spinor_dim_][block % spinor_dim_].add_term(monomials_[idx % nmon], c);
    }
    return f;
}

SpinorField HomogeneousCoords::spinor_unit(std::size_t index) const { return spinor_field({{index, Scalar(1)}}); }

OneFormField HomogeneousCoords::one_form_unit(std::size_t index) const {
    return one_form_field({{index, Scalar(1)}});
}

std::string to_string(SolutionKind kind) {
    return kind == SolutionKind::Monogenic ? "monogenic" : "rs";
}

// ------------------------------------------------------------- solvers

BigInt monogenic_dimension_formula(int m, int k) {
    if (m < 2 || k < 0) throw UsageError("monogenic_dimension_formula: bad parameters");
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + m - 2), static_cast<unsigned long>(k));
    return binom * (BigInt(1) << static_cast<unsigned>(m / 2));
}

namespace {

void check_range(const char* what, int m, int k, int min_m, int max_m, int min_k, int max_k) {
    if (m < min_m || m > max_m || k < min_k || k > max_k) {
        throw UsageError(std::string(what) + ": parameters out of range (m in [" + std::to_string(min_m) + ", " +
                         std::to_string(max_m) + "], k in [" + std::to_string(min_k) + ", " +
                         std::to_string(max_k) + "])");
    }
}

SolutionSpace compute_monogenics(int m, int k) {
    SolutionSpace space{m, k, SolutionKind::Monogenic, {}, {}};
    if (k < 0) return space;
    const HomogeneousCoords dom(m, k, false);
    const HomogeneousCoords cod(m, k - 1, false);
    SparseMatrix a(cod.dim(), dom.dim());
    for (std::size_t c = 0; c < dom.dim(); ++c) a.add_column(c, cod.flatten(dirac(dom.spinor_unit(c))));
    for (const auto& v : kernel_basis(a)) {
        SpinorField f = dom.spinor_field(v);
        if (!dirac(f).is_zero()) throw InvariantError("monogenic basis element fails D = 0");
        space.monogenics.push_back(std::move(f));
    }
    return space;
}

SolutionSpace compute_rs(int m, int k) {
    SolutionSpace space{m, k, SolutionKind::RaritaSchwinger, {}, {}};
    const HomogeneousCoords dom(m, k, true);
    const HomogeneousCoords mu_cod(m, k, false);
    const HomogeneousCoords rs_cod(m, k - 1, true);
    SparseMatrix a(mu_cod.dim() + rs_cod.dim(), dom.dim());
    for (std::size_t c = 0; c < dom.dim(); ++c) {
        const OneFormField e = dom.one_form_unit(c);
        a.add_column(c, mu_cod.flatten(mu(e)));
        SparseVector rs = rs_cod.flatten(project_threehalf(twisted_dirac(e)));
        for (auto& [r, v] : rs) r += mu_cod.dim();
        a.add_column(c, rs);
    }
    for (const auto& v : kernel_basis(a)) {
        OneFormField f = dom.one_form_field(v);
        if (!f.is_rs_admissible() || !rarita_schwinger(f).is_zero())
            throw InvariantError("RS basis element fails the defining equations");
        space.rs_solutions.push_back(std::move(f));
    }
    return space;
}

std::vector<SparseVector> flatten_all(const HomogeneousCoords& coords, const std::vector<OneFormField>& fields) {
    std::vector<SparseVector> out;
    out.reserve(fields.size());
    for (const auto& f : fields) out.push_back(coords.flatten(f));
    return out;
}

}  // namespace

SolutionSpace monogenic_basis(int m, int k, const SolverLimits& limits) {
    check_range("monogenic_basis", m, k, limits.min_m, limits.max_m_monogenic, 0, limits.max_k_monogenic);
    return compute_monogenics(m, k);
}

SolutionSpace rs_solution_basis(int m, int k, const SolverLimits& limits) {
    check_range("rs_solution_basis", m, k, limits.min_m, limits.max_m_rs, 1, limits.max_k_rs);
    return compute_rs(m, k);
}

// ---------------------------------------------------------- RSDecomposer

RSDecomposer::RSDecomposer(int m, int k, const SolverLimits& limits)
    : m_(m), k_(k), coords_(m, k, true), solutions_(rs_solution_basis(m, k, limits)),
      up_(compute_monogenics(m, k + 1)), down_(compute_monogenics(m, k - 1)) {
    // M1: kernel of L restricted to P_k(1), expressed in the solution basis
    const HomogeneousCoords l_cod(m, k + 1, false);
    const auto& sols = solutions_.rs_solutions;
    SparseMatrix lmat(l_cod.dim(), sols.size());
    for (std::size_t c = 0; c < sols.size(); ++c) lmat.add_column(c, l_cod.flatten(L_map(sols[c])));
    for (const auto& coeffs : kernel_basis(lmat)) {
        OneFormField f(m);
        for (const auto& [b, c] : coeffs) f += sols[b] * c;
        m1_.push_back(std::move(f));
    }
    for (const auto& phi : up_.monogenics) m2_.push_back(twistor(phi));
    for (const auto& psi0 : down_.monogenics) m3_.push_back(xi_map(psi0, k));

    std::vector<SparseVector> all = flatten_all(coords_, m1_);
    for (auto& v : flatten_all(coords_, m2_)) all.push_back(std::move(v));
    for (auto& v : flatten_all(coords_, m3_)) all.push_back(std::move(v));
    solver_ = std::make_unique<SpanSolver>(std::move(all), coords_.dim());
}

bool RSDecomposer::is_solution(const OneFormField& psi) const {
    if (psi.m() != m_) return false;
    if (!psi.is_zero() && psi.homogeneous_degree() != k_) return false;
    return psi.is_rs_admissible() && rarita_schwinger(psi).is_zero();
}

RSDecomposition RSDecomposer::decompose(const OneFormField& psi) const {
    if (!is_solution(psi)) throw PreconditionError("decompose_rs: input is not a k-homogeneous RS solution");
    if (!is_direct()) throw InvariantError("decompose_rs: M1, M2, M3 are not independent");
    const auto coeffs = solver_->coordinates(coords_.flatten(psi));
    if (!coeffs) throw InvariantError("decompose_rs: solution lies outside M1 + M2 + M3");

    RSDecomposition out{OneFormField(m_), OneFormField(m_), OneFormField(m_),
                        SpinorField(m_), SpinorField(m_), false, false, false};
    const std::size_t n1 = m1_.size();
    const std::size_t n2 = m2_.size();
    for (const auto& [b, c] : *coeffs) {
        if (b < n1) {
            out.psi1 += m1_[b] * c;
        } else if (b < n1 + n2) {
            out.psi2 += m2_[b - n1] * c;
            out.seed2 += up_.monogenics[b - n1] * c;
        } else {
            out.psi3 += m3_[b - n1 - n2] * c;
            out.seed3 += down_.monogenics[b - n1 - n2] * c;
        }
    }
    out.psi1_L_zero = L_map(out.psi1).is_zero();
    out.seed2_monogenic = dirac(out.seed2).is_zero() && twistor(out.seed2) == out.psi2;
    out.seed3_monogenic = dirac(out.seed3).is_zero() && (out.seed3.is_zero() ? out.psi3.is_zero()
                                                                              : xi_map(out.seed3, k_) == out.psi3);
    return out;
}

RSDecomposition decompose_rs(const OneFormField& psi, const SolverLimits& limits) {
    const auto deg = psi.homogeneous_degree();
    if (!deg) throw PreconditionError("decompose_rs: input is zero or not homogeneous");
    return RSDecomposer(psi.m(), *deg, limits).decompose(psi);
}

// ------------------------------------------------------ verify_direct_sum

bool DirectSumReport::passed() const {
    return dims_add_up && intersections_trivial && m2_m3_in_P1 && twistor_injective && xi_injective && m1_L_zero &&
           m2_L_injective && m2_DL_zero && m3_DL_injective && m3_DT_injective && m1_m2_full_twisted && d3_L_vanishes;
}

DirectSumReport verify_direct_sum(int m, int k, const SolverLimits& limits) {
    return verify_direct_sum(RSDecomposer(m, k, limits));
}

DirectSumReport verify_direct_sum(const RSDecomposer& dec) {
    const int m = dec.m();
    const int k = dec.k();
    DirectSumReport r;
    r.m = m;
    r.k = k;
    r.dim_P0 = compute_monogenics(m, k).dim();
    r.dim_P0_up = dec.monogenics_up().dim();
    r.dim_P0_down = dec.monogenics_down().dim();
    r.dim_P1 = dec.solutions().dim();
    r.dim_M1 = dec.m1().size();

    const HomogeneousCoords form_k(m, k, true);
    r.dim_M2 = rank(flatten_all(form_k, dec.m2()));
    r.dim_M3 = rank(flatten_all(form_k, dec.m3()));
    r.concatenated_rank = dec.concatenated_rank();
    r.dims_add_up = r.dim_M1 + r.dim_M2 + r.dim_M3 == r.dim_P1;
    r.intersections_trivial = r.concatenated_rank == r.dim_M1 + r.dim_M2 + r.dim_M3;
    r.twistor_injective = r.dim_M2 == r.dim_P0_up;
    r.xi_injective = r.dim_M3 == r.dim_P0_down;

    r.m2_m3_in_P1 = true;
    for (const auto& f : dec.m2()) r.m2_m3_in_P1 = r.m2_m3_in_P1 && dec.is_solution(f);
    for (const auto& f : dec.m3()) r.m2_m3_in_P1 = r.m2_m3_in_P1 && dec.is_solution(f);

    r.m1_L_zero = true;
    r.m1_m2_full_twisted = true;
    for (const auto& f : dec.m1()) {
        r.m1_L_zero = r.m1_L_zero && L_map(f).is_zero();
        r.m1_m2_full_twisted = r.m1_m2_full_twisted && twisted_dirac(f).is_zero();
    }

    const HomogeneousCoords spin_up(m, k + 1, false);
    const HomogeneousCoords spin_k(m, k, false);
    std::vector<SparseVector> l_images, dl_images_m3, dt_images_m3;
    r.m2_DL_zero = true;
    for (const auto& f : dec.m2()) {
        const SpinorField l = L_map(f);
        l_images.push_back(spin_up.flatten(l));
        r.m2_DL_zero = r.m2_DL_zero && dirac(l).is_zero();
        r.m1_m2_full_twisted = r.m1_m2_full_twisted && twisted_dirac(f).is_zero();
    }
    r.m2_L_injective = rank(l_images) == dec.m2().size();
    const HomogeneousCoords form_down(m, k - 1, true);
    for (const auto& f : dec.m3()) {
        dl_images_m3.push_back(spin_k.flatten(dirac(L_map(f))));
        dt_images_m3.push_back(form_down.flatten(twisted_dirac(f)));
    }
    r.m3_DL_injective = rank(dl_images_m3) == dec.m3().size();
    r.m3_DT_injective = rank(dt_images_m3) == dec.m3().size();

    r.d3_L_vanishes = true;
    r.phi_monogenic = true;
    for (const auto& f : dec.solutions().rs_solutions) {
        r.d3_L_vanishes = r.d3_L_vanishes && dirac(dirac(dirac(L_map(f)))).is_zero();
        const OneFormField dt = twisted_dirac(f);
        const SpinorField phi = mu(dt);
        r.phi_monogenic = r.phi_monogenic && iota(phi) == dt && dirac(phi).is_zero();
    }
    return r;
}

}  // namespace spinorlab
