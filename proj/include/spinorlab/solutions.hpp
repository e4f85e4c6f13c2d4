#pragma once

#include "spinorlab/fields.hpp"
#include "spinorlab/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace spinorlab {

/// Parameter caps for the brute-force solvers.
struct SolverLimits {
    int min_m = 3;
    int max_m_monogenic = 8;
    int max_k_monogenic = 5;
    int max_m_rs = 6;
    int max_k_rs = 4;

    /// Defaults, with the degree caps raised to SPINORLAB_MAX_DEGREE when that
    /// variable holds a larger integer.
    static SolverLimits from_env();
};

/// Linear coordinates on the space of k-homogeneous polynomial spinor fields
/// (form_components == 0) or one-forms (form_components == m). Coordinate
/// index = (form index * dim S + spinor index) * #monomials + monomial index,
/// monomials in ascending graded lexicographic order.
class HomogeneousCoords {
public:
    HomogeneousCoords(int m, int degree, bool one_form);

    int m() const { return m_; }
    int degree() const { return degree_; }
    bool one_form() const { return one_form_; }
    std::size_t dim() const { return dim_; }
    std::size_t monomial_count() const { return monomials_.size(); }

    SparseVector flatten(const SpinorField& f) const;
    SparseVector flatten(const OneFormField& f) const;
    SpinorField spinor_field(const SparseVector& v) const;
    OneFormField one_form_field(const SparseVector& v) const;

    SpinorField spinor_unit(std::size_t index) const;
    OneFormField one_form_unit(std::size_t index) const;

private:
    void flatten_into(const SpinorField& f, std::size_t form_index, SparseVector& out) const;

    int m_;
    int degree_;
    bool one_form_;
    std::size_t spinor_dim_;
    std::size_t dim_ = 0;
    std::vector<Exponent> monomials_;
    std::map<Exponent, std::size_t, GrLexLess> index_;
};

enum class SolutionKind { Monogenic, RaritaSchwinger };

std::string to_string(SolutionKind kind);

/// Basis of a space of k-homogeneous polynomial solutions on R^m.
struct SolutionSpace {
    int m = 0;
    int k = 0;
    SolutionKind kind = SolutionKind::Monogenic;
    std::vector<SpinorField> monogenics;     // kind == Monogenic
    std::vector<OneFormField> rs_solutions;  // kind == RaritaSchwinger

    std::size_t dim() const {
        return kind == SolutionKind::Monogenic ? monogenics.size() : rs_solutions.size();
    }
};

/// 2^floor(m/2) * C(k+m-2, k)
BigInt monogenic_dimension_formula(int m, int k);

/// Exact basis of the k-homogeneous monogenics on R^m (kernel of the Dirac
/// matrix on k-homogeneous fields). 3 <= m <= 8, 0 <= k <= 5.
SolutionSpace monogenic_basis(int m, int k, const SolverLimits& limits = {});

/// Exact basis of k-homogeneous one-forms psi with mu(psi) == 0 and
/// R(psi) == 0. 3 <= m <= 6, 1 <= k <= 4.
SolutionSpace rs_solution_basis(int m, int k, const SolverLimits& limits = {});

/// Three-piece splitting psi = psi1 + psi2 + psi3 of a homogeneous RS
/// solution, with the seeds that certify membership of psi2 and psi3.
struct RSDecomposition {
    OneFormField psi1;  // L(psi1) == 0
    OneFormField psi2;  // twistor(seed2)
    OneFormField psi3;  // xi_map(seed3)
    SpinorField seed2;  // monogenic of degree k+1
    SpinorField seed3;  // monogenic of degree k-1
    bool psi1_L_zero = false;
    bool seed2_monogenic = false;
    bool seed3_monogenic = false;
};

/// The spaces M1 = ker L inside P_k(1), M2 = twistor(P_{k+1}(0)) and
/// M3 = Xi(P_{k-1}(0)) together with a solver for decompositions against
/// their concatenated bases (order: M1, M2, M3).
class RSDecomposer {
public:
    RSDecomposer(int m, int k, const SolverLimits& limits = {});

    int m() const { return m_; }
    int k() const { return k_; }
    const SolutionSpace& solutions() const { return solutions_; }
    const std::vector<OneFormField>& m1() const { return m1_; }
    const std::vector<OneFormField>& m2() const { return m2_; }
    const std::vector<OneFormField>& m3() const { return m3_; }
    const SolutionSpace& monogenics_up() const { return up_; }
    const SolutionSpace& monogenics_down() const { return down_; }
    /// rank of the concatenated M1 | M2 | M3 family
    std::size_t concatenated_rank() const { return solver_->rank(); }
    bool is_direct() const { return solver_->independent(); }

    /// Throws PreconditionError if psi is not a k-homogeneous RS solution on
    /// R^m, InvariantError if the three spaces are not independent.
    RSDecomposition decompose(const OneFormField& psi) const;

    /// Exact membership test for P_k(1).
    bool is_solution(const OneFormField& psi) const;

private:
    int m_;
    int k_;
    HomogeneousCoords coords_;
    SolutionSpace solutions_;
    SolutionSpace up_;
    SolutionSpace down_;
    std::vector<OneFormField> m1_, m2_, m3_;
    std::unique_ptr<SpanSolver> solver_;
};

/// Convenience wrapper: infers (m, k) from psi.
RSDecomposition decompose_rs(const OneFormField& psi, const SolverLimits& limits = {});

/// Dimension accounting and set-description checks for P_k(1).
struct DirectSumReport {
    int m = 0;
    int k = 0;
    std::size_t dim_P0 = 0;       // P_k(0)
    std::size_t dim_P0_up = 0;    // P_{k+1}(0)
    std::size_t dim_P0_down = 0;  // P_{k-1}(0)
    std::size_t dim_P1 = 0;
    std::size_t dim_M1 = 0;
    std::size_t dim_M2 = 0;  // rank of the twistor images
    std::size_t dim_M3 = 0;  // rank of the Xi images
    std::size_t concatenated_rank = 0;

    bool dims_add_up = false;          // M1 + M2 + M3 == P_k(1)
    bool intersections_trivial = false;  // concatenated rank == sum of ranks
    bool m2_m3_in_P1 = false;
    bool twistor_injective = false;    // dim M2 == dim P_{k+1}(0)
    bool xi_injective = false;         // dim M3 == dim P_{k-1}(0)
    bool m1_L_zero = false;
    bool m2_L_injective = false;
    bool m2_DL_zero = false;
    bool m3_DL_injective = false;      // D L(psi) != 0 for nonzero psi in M3
    bool m3_DT_injective = false;      // D_T psi != 0 for nonzero psi in M3
    bool m1_m2_full_twisted = false;   // D_T vanishes on M1 and M2
    bool d3_L_vanishes = false;        // D^3 L == 0 on all of P_k(1)
    bool phi_monogenic = false;        // D_T psi = iota(phi) with D phi == 0

    bool passed() const;
};

DirectSumReport verify_direct_sum(int m, int k, const SolverLimits& limits = {});
DirectSumReport verify_direct_sum(const RSDecomposer& dec);

}  // namespace spinorlab
