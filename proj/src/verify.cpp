#include "spinorlab/verify.hpp"

#include "json_util.hpp"
#include "spinorlab/charclass.hpp"
#include "spinorlab/clifford.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/fields.hpp"
#include "spinorlab/index.hpp"
#include "spinorlab/random.hpp"
#include "spinorlab/solutions.hpp"
#include "spinorlab/spectra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

namespace spinorlab {

using detail::json;

namespace {

struct Context {
    VerifyScale scale;
    std::map<std::pair<int, int>, std::unique_ptr<RSDecomposer>> decomposers;

    bool quick() const { return scale == VerifyScale::Quick; }

    const RSDecomposer& decomposer(int m, int k) {
        auto& slot = decomposers[{m, k}];
        if (!slot) slot = std::make_unique<RSDecomposer>(m, k);
        return *slot;
    }

    std::vector<std::pair<int, int>> rs_cells() const {
        std::vector<std::pair<int, int>> cells;
        const int max_m = quick() ? 4 : 5;
        const int max_k = quick() ? 2 : 3;
        for (int m = 3; m <= max_m; ++m)
            for (int k = 1; k <= max_k; ++k) cells.emplace_back(m, k);
        return cells;
    }
};

/// Collects pass/fail per sub-check, recording the first failure.
class Tally {
public:
    explicit Tally(CheckResult& r) : r_(r) {}

    void expect(bool ok, const std::string& what) {
        ++r_.cases;
        if (!ok) {
            if (failures_ == 0) first_ = what;
            ++failures_;
        }
    }

    void detail(const std::string& key, const json& value) { r_.details.emplace_back(key, value.dump()); }

    void finish() {
        r_.passed = failures_ == 0;
        detail("failures", failures_);
        if (failures_ > 0) detail("first_failure", first_);
    }

private:
    CheckResult& r_;
    long failures_ = 0;
    std::string first_;
};

std::string cell(int m, int k) { return "m=" + std::to_string(m) + " k=" + std::to_string(k); }

OneFormField scaled_sum(const std::vector<OneFormField>& basis, Rng& rng, int m) {
    OneFormField out(m);
    for (const auto& b : basis) out += b * rng.small_scalar(2);
    return out;
}

// ---------------------------------------------------------- checks

void check_clifford(Context&, Tally& t) {
    for (int m = 1; m <= 8; ++m) {
        const auto& S = SpinorSpace::get(m);
        const std::size_t n = S.dim();
        const Matrix id = Matrix::identity(n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const Matrix anti = S.gamma(i) * S.gamma(j) + S.gamma(j) * S.gamma(i);
                const Matrix expected = i == j ? Scalar(-2) * id : Matrix(n, n);
                t.expect(anti == expected, "e_i e_j + e_j e_i = -2 delta_ij, m=" + std::to_string(m));
            }
        if (S.has_chirality()) {
            const Matrix w = S.chirality_matrix();
            t.expect(w * w == id, "chirality squares to 1, m=" + std::to_string(m));
            for (int i = 0; i < m; ++i)
                t.expect(w * S.gamma(i) + S.gamma(i) * w == Matrix(n, n), "chirality anticommutes, m=" + std::to_string(m));
        }
    }
}

void check_algebra(Context& ctx, Tally& t) {
    const int cases = ctx.quick() ? 20 : 100;
    Rng rng(0x5eed0001);
    for (int m = 3; m <= 6; ++m) {
        const std::string tag = " m=" + std::to_string(m);
        for (int c = 0; c < cases; ++c) {
            const SpinorVec s = rng.spinor(m);
            const AlgebraicOneForm f = rng.algebraic_one_form(m);
            t.expect(mu(iota(s)) == s, "mu iota = id" + tag);

            const AlgebraicOneForm h = project_half(f);
            const AlgebraicOneForm th = project_threehalf(f);
            AlgebraicOneForm sum = AlgebraicOneForm::zero(m);
            for (int i = 0; i < m; ++i)
                for (std::size_t a = 0; a < sum.components[static_cast<std::size_t>(i)].coords.size(); ++a)
                    sum.components[static_cast<std::size_t>(i)].coords[a] =
                        h.components[static_cast<std::size_t>(i)].coords[a] + th.components[static_cast<std::size_t>(i)].coords[a];
            t.expect(sum == f, "pi_1/2 + pi_3/2 = id" + tag);
            t.expect(project_half(h) == h && project_threehalf(th) == th, "projections idempotent" + tag);
            t.expect(mu(th).is_zero(), "mu pi_3/2 = 0" + tag);

            // field level: off-diagonal block on ker mu, and pi_1/2 nabla = iota D
            const OneFormField psi3 = project_threehalf(rng.one_form(m, 3));
            t.expect(project_half(twisted_dirac(psi3)) == iota(delta_div(psi3)) * Scalar(2), "T* = 2 iota delta on ker mu" + tag);
            const SpinorField phi = rng.spinor_field(m, 3);
            t.expect(project_half(gradient(phi)) == iota(dirac(phi)), "pi_1/2 nabla = iota D" + tag);
        }
    }
    t.detail("cases_per_identity_per_m", cases);
}

void check_operators(Context& ctx, Tally& t) {
    const int cases = ctx.quick() ? 5 : 20;
    Rng rng(0x5eed0002);
    for (int m = 3; m <= 6; ++m) {
        const std::string tag = " m=" + std::to_string(m);
        const SpinorVec s = rng.spinor(m);
        t.expect(dirac(clifford_x(SpinorField::constant(s))) == SpinorField::constant(s) * Scalar(-m), "D(x s) = -m s" + tag);
        for (int c = 0; c < cases; ++c) {
            const SpinorField phi = rng.spinor_field(m, 4);
            t.expect(dirac(dirac(phi)) == laplacian(phi) * Scalar(-1), "D^2 = -Laplacian" + tag);
            t.expect(mu(gradient(phi)) == dirac(phi), "mu nabla = D" + tag);
            t.expect(delta_div(gradient(phi)) == laplacian(phi) * Scalar(-1), "delta nabla = -Laplacian" + tag);
            t.expect(gradient(phi) == iota(dirac(phi)) + twistor(phi), "nabla = iota D + twistor" + tag);
            t.expect(mu(twistor(phi)).is_zero(), "mu twistor = 0" + tag);
            const OneFormField psi3 = project_threehalf(rng.one_form(m, 3));
            t.expect(mu(rarita_schwinger(psi3)).is_zero(), "mu R = 0" + tag);
            const MultiPoly f = rng.poly(m, 2, 2);
            t.expect(L_map(f * psi3) == f * L_map(psi3), "L is module-linear" + tag);
            const KFormField one = KFormField::from_one_form(psi3);
            t.expect(y_contract(one).to_spinor() == mu(psi3) * Scalar(-1), "Y on one-forms = -mu" + tag);
        }
    }
}

void check_theorem1(Context& ctx, Tally& t) {
    const int cases = ctx.quick() ? 5 : 25;
    Rng rng(0x5eed0003);
    for (int m = 3; m <= 6; ++m) {
        const std::string tag = " m=" + std::to_string(m);
        for (int c = 0; c < cases; ++c) {
            const SpinorField sigma = rng.spinor_field(m, 3);
            const OneFormField psi3 = project_threehalf(rng.one_form(m, 3));
            const OneFormField lifted = iota(sigma);
            const OneFormField dt_sigma = twisted_dirac(lifted);
            const OneFormField dt_psi3 = twisted_dirac(psi3);
            t.expect(project_half(dt_sigma) == iota(dirac(sigma)) * Scalar::frac(2 - m, m), "block (2-m)/m iota D" + tag);
            t.expect(project_half(dt_psi3) == iota(delta_div(psi3)) * Scalar(2), "block 2 iota delta" + tag);
            t.expect(project_threehalf(dt_sigma) == twistor(sigma) * Scalar::frac(2, m), "block (2/m) twistor" + tag);
            t.expect(project_threehalf(dt_psi3) == rarita_schwinger(psi3), "block R" + tag);
            const OneFormField total = twisted_dirac(lifted + psi3);
            const OneFormField blocks = iota(dirac(sigma) * Scalar::frac(2 - m, m) + delta_div(psi3) * Scalar(2)) +
                                        twistor(sigma) * Scalar::frac(2, m) + rarita_schwinger(psi3);
            t.expect(total == blocks, "D_T = block matrix" + tag);
        }
    }
    t.detail("cases_per_m", cases);
}

void check_y_identity(Context& ctx, Tally& t) {
    const int cases = ctx.quick() ? 3 : 10;
    Rng rng(0x5eed0004);
    for (int m = 3; m <= 6; ++m)
        for (int deg = 1; deg <= 2; ++deg)
            for (int c = 0; c < cases; ++c) {
                const KFormField w = rng.k_form(m, deg, 3, 3, 2);
                const KFormField lhs = form_gradient(y_contract(w)) + y_contract(form_gradient(w));
                t.expect(lhs == twisted_dirac(w) * Scalar(-1),
                         "nabla Y + Y nabla = -D_T, m=" + std::to_string(m) + " form degree " + std::to_string(deg));
            }
    t.detail("cases_per_cell", cases);
}

/// dim of the chiral half of a monogenic space (the kernel splits because D
/// swaps the halves).
std::size_t chiral_dim(const SolutionSpace& space, int sign) {
    const auto& S = SpinorSpace::get(space.m);
    const HomogeneousCoords coords(space.m, space.k, false);
    std::vector<SparseVector> projected;
    for (const auto& f : space.monogenics) {
        SpinorField half = f;
        for (std::size_t a = 0; a < S.dim(); ++a)
            if (S.chirality(a) != sign) half[a] = MultiPoly(space.m);
        projected.push_back(coords.flatten(half));
    }
    return rank(projected);
}

void check_monogenic_dims(Context& ctx, Tally& t) {
    const int max_m = ctx.quick() ? 5 : 6;
    const int max_k = ctx.quick() ? 3 : 4;
    json table = json::array();
    for (int m = 3; m <= max_m; ++m)
        for (int k = 0; k <= max_k; ++k) {
            const auto space = monogenic_basis(m, k);
            const BigInt formula = monogenic_dimension_formula(m, k);
            const BigInt sphere = dirac_multiplicity(m - 1, k);
            t.expect(BigInt(static_cast<unsigned long>(space.dim())) == formula, "dim P_k(0) " + cell(m, k));
            json row = json::object({{"m", m}, {"k", k}, {"dim", space.dim()}, {"sphere_multiplicity", detail::bigint_to_json(sphere)}});
            if (m % 2 == 1) {
                t.expect(formula == sphere, "sphere multiplicity " + cell(m, k));
            } else {
                const std::size_t plus = chiral_dim(space, 1);
                const std::size_t minus = chiral_dim(space, -1);
                t.expect(plus + minus == space.dim(), "chiral splitting " + cell(m, k));
                t.expect(BigInt(static_cast<unsigned long>(plus)) == sphere && BigInt(static_cast<unsigned long>(minus)) == sphere,
                         "sphere multiplicity per chiral half " + cell(m, k));
                row["dim_plus"] = plus;
                row["dim_minus"] = minus;
            }
            table.push_back(std::move(row));
        }
    t.detail("dims", table);
}

void check_direct_sum(Context& ctx, Tally& t) {
    json table = json::array();
    for (const auto& [m, k] : ctx.rs_cells()) {
        const DirectSumReport r = verify_direct_sum(ctx.decomposer(m, k));
        const std::string c = cell(m, k);
        t.expect(r.d3_L_vanishes, "D^3 L = 0 on P_k(1) " + c);
        t.expect(r.dims_add_up, "dim M1 + M2 + M3 = dim P_k(1) " + c);
        t.expect(r.intersections_trivial, "M1, M2, M3 independent " + c);
        t.expect(r.twistor_injective, "dim M2 = dim P_{k+1}(0) " + c);
        t.expect(r.xi_injective, "dim M3 = dim P_{k-1}(0) " + c);
        t.expect(r.m2_m3_in_P1, "M2, M3 inside P_k(1) " + c);
        t.expect(r.m1_L_zero, "L = 0 on M1 " + c);
        t.expect(r.m2_L_injective && r.m2_DL_zero, "M2: L injective, D L = 0 " + c);
        t.expect(r.m3_DL_injective, "M3: D L injective " + c);
        t.expect(r.m3_DT_injective, "M3: D_T injective " + c);
        t.expect(r.m1_m2_full_twisted, "D_T = 0 on M1 and M2 " + c);
        table.push_back(json::object({{"m", m}, {"k", k}, {"P1", r.dim_P1}, {"M1", r.dim_M1}, {"M2", r.dim_M2},
                                      {"M3", r.dim_M3}, {"phi_monogenic", r.phi_monogenic}}));
    }
    t.detail("cells", table);
}

void check_xi_equation(Context& ctx, Tally& t) {
    for (const auto& [m, k] : ctx.rs_cells()) {
        const auto seeds = monogenic_basis(m, k - 1);
        for (const auto& psi0 : seeds.monogenics) {
            const OneFormField xi = xi_map(psi0, k);
            t.expect(twisted_dirac(xi) == clifford_coframe(psi0), "D_T Xi = sum e_i psi0 dx^i " + cell(m, k));
            t.expect(mu(xi).is_zero(), "mu Xi = 0 " + cell(m, k));
            t.expect(xi.homogeneous_degree() == k, "Xi is k-homogeneous " + cell(m, k));
        }
    }
}

void check_decompose(Context& ctx, Tally& t) {
    const int samples = ctx.quick() ? 5 : 25;
    Rng rng(0x5eed0005);
    for (const auto& [m, k] : ctx.rs_cells()) {
        const RSDecomposer& dec = ctx.decomposer(m, k);
        for (int s = 0; s < samples; ++s) {
            const OneFormField psi = scaled_sum(dec.solutions().rs_solutions, rng, m);
            if (psi.is_zero()) {
                t.expect(true, "zero sample");
                continue;
            }
            const RSDecomposition d = dec.decompose(psi);
            t.expect(d.psi1 + d.psi2 + d.psi3 == psi, "decompose then re-sum " + cell(m, k));
            t.expect(d.psi1_L_zero && d.seed2_monogenic && d.seed3_monogenic, "decomposition pieces certified " + cell(m, k));
        }
    }
    t.detail("samples_per_cell", samples);
}

void check_spectra_integrality(Context&, Tally& t) {
    for (int n = 3; n <= 10; ++n)
        for (int j = 1; 2 * j < n; ++j)
            for (int l = 1; l <= 6; ++l)
                for (Series s : {Series::Mu1, Series::Mu2}) {
                    const Rational v = hsd_multiplicity(n, j, l, s);
                    const std::string where = "n=" + std::to_string(n) + " j=" + std::to_string(j) + " l=" + std::to_string(l) + " " + to_string(s);
                    t.expect(v.get_den() == 1 && sgn(v) > 0, "positive integer multiplicity " + where);
                    if (j == 1) t.expect(rs_specialized_multiplicity(n, l, s) == v, "j=1 specialization " + where);
                }
}

void check_mu2_provenance(Context&, Tally& t) {
    for (int n = 3; n <= 10; ++n)
        for (int l = 1; l <= 6; ++l) {
            const Rational mu2 = hsd_multiplicity(n, 1, l, Series::Mu2);
            t.expect(mu2 == Rational(dirac_multiplicity(n, l)),
                     "mu2 multiplicity = Dirac multiplicity at the same level, n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
    t.detail("level_offset", 0);
}

void check_spectra_roundtrip(Context&, Tally& t) {
    std::vector<std::vector<SpectrumRow>> tables;
    for (int n = 2; n <= 6; ++n) tables.push_back(dirac_spectrum(n, 4));
    for (int n = 3; n <= 8; ++n)
        for (int j = 1; 2 * j < n; ++j) tables.push_back(hsd_spectrum(n, j, 4));
    for (const auto& rows : tables) {
        t.expect(parse_spectrum_csv(spectrum_to_csv(rows)) == rows, "CSV round trip");
        t.expect(parse_spectrum_json(spectrum_to_json(rows)) == rows, "JSON round trip");
    }
}

void check_weyl(Context& ctx, Tally& t) {
    json table = json::array();
    for (const auto& [m, k] : ctx.rs_cells()) {
        const std::size_t dim_m1 = ctx.decomposer(m, k).m1().size();
        const auto w = rs_kernel_weight(m, k);
        const BigInt expected = w ? weyl_dim_pm(m, *w) : BigInt(0);
        t.expect(expected == BigInt(static_cast<unsigned long>(dim_m1)), "Weyl dimension = dim M1 " + cell(m, k));
        table.push_back(json::object({{"m", m}, {"k", k}, {"weight", w ? w->to_string() : "none"},
                                      {"weyl", detail::bigint_to_json(expected)}, {"M1", dim_m1}}));
    }
    t.detail("cells", table);
}

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

void check_charclass(Context&, Tally& t) {
    for (int dim = 4; dim <= 12; ++dim) {
        const std::string d = " dim=" + std::to_string(dim);
        t.expect(ahat_series(dim) == chern_roots::ahat_series(dim), "A-hat two routes" + d);
        t.expect(ch_cotangent(dim) == chern_roots::ch_cotangent(dim), "Ch(T*) two routes" + d);
        t.expect(ch_exterior_cotangent(dim, 0) == CharClass::constant(dim, 1), "Ch(L^0) = 1" + d);
        t.expect(ch_exterior_cotangent(dim, 1) == ch_cotangent(dim), "Ch(L^1) = Ch(T*)" + d);
        CharClass alternating(dim);
        for (int j = 0; j <= dim; ++j) {
            const CharClass a = ch_exterior_cotangent(dim, j);
            t.expect(a == chern_roots::ch_exterior_cotangent(dim, j), "Ch(L^j) two routes" + d + " j=" + std::to_string(j));
            alternating += j % 2 == 0 ? a : a * Rational(-1);
        }
        t.expect(alternating == chern_roots::euler_product(dim), "alternating sum of Ch(L^j)" + d);
        t.expect(ch_cotangent(dim) * ch_cotangent(dim) == chern_roots::ch_tensor_square(dim), "Ch multiplicative on T* (x) T*" + d);
        for (int j = 0; j <= std::min(dim, 4); ++j) {
            CharClass conv(dim);
            for (int a = 0; a <= j; ++a) conv += ch_exterior_cotangent(dim, a) * ch_exterior_cotangent(dim, j - a);
            t.expect(conv == chern_roots::ch_exterior_double(dim, j), "Ch(L^j(T* + T*)) additive" + d + " j=" + std::to_string(j));
        }
    }
    const CharClass a8 = ahat_series(8);
    const PMonomial p1({1}), p1sq({2}), p2({0, 1});
    t.expect(a8.coeff(PMonomial()) == 1 && a8.coeff(p1) == q(-1, 24), "A-hat degree 0 and 4");
    t.expect(a8.coeff(p1sq) == q(7, 5760) && a8.coeff(p2) == q(-4, 5760), "A-hat degree 8");
    const CharClass c8 = ch_cotangent(8);
    t.expect(c8.coeff(PMonomial()) == 8 && c8.coeff(p1) == 1 && c8.coeff(p1sq) == q(1, 12) && c8.coeff(p2) == q(-2, 12),
             "Ch(T*) through degree 8");
    t.expect(ch_exterior_cotangent(4, 2).coeff(PMonomial()) == 6, "rank of L^2 in dim 4");
    t.detail("ahat_dim8", ahat_series(8).to_string());
    t.detail("ch_cotangent_dim8", ch_cotangent(8).to_string());
}

ManifoldDescriptor k3() {
    ManifoldDescriptor d;
    d.dim = 4;
    d.pontryagin_numbers[PMonomial({1})] = -48;
    return d;
}

void check_index_dim4(Context&, Tally& t) {
    const CharClass rs = symbolic_index_class(4, OperatorTag::RaritaSchwinger);
    const CharClass dirac_class = symbolic_index_class(4, OperatorTag::Dirac);
    t.expect(rs == dirac_class * Rational(-19), "D_3/2 class = -19 D_1/2 class");
    t.expect(rs == CharClass::generator(4, 1) * q(19, 24), "D_3/2 class = 19/24 p1");
    t.expect(dirac_class == CharClass::generator(4, 1) * q(-1, 24), "D_1/2 class = -p1/24");
    const ManifoldDescriptor K3 = k3();
    const IndexReport d = index_dirac(K3);
    const IndexReport r = index_rarita_schwinger(K3);
    const IndexReport h = index_hsd(K3, 1);
    t.expect(d.index == 2 && d.integral, "K3 Dirac index 2");
    t.expect(r.index == -38 && r.integral, "K3 Rarita-Schwinger index -38");
    t.expect(h.index == -38, "K3 D_j at j=1 equals Rarita-Schwinger");
    t.expect(index_twisted_cotangent(K3).index == -40, "K3 twisted Dirac index -40");
    ManifoldDescriptor zero;
    zero.dim = 4;
    t.expect(index_dirac(zero).index == 0 && index_rarita_schwinger(zero).index == 0, "zero descriptor");
    ManifoldDescriptor eight;
    eight.dim = 8;
    eight.pontryagin_numbers[PMonomial({2})] = 0;
    eight.pontryagin_numbers[PMonomial({0, 1})] = -1440;
    t.expect(index_dirac(eight).index == 1, "dim 8 A-hat inversion");
    for (int dim : {8, 12}) {
        t.expect(symbolic_index_class(dim, OperatorTag::HigherSpin, 1) == symbolic_index_class(dim, OperatorTag::RaritaSchwinger),
                 "D_j at j=1 equals Rarita-Schwinger, dim=" + std::to_string(dim));
    }
    for (int dim : {5, 6, 7, 9, 10, 11})
        t.expect(symbolic_index_class(dim, OperatorTag::Dirac).is_zero(), "no top class in dim " + std::to_string(dim));
    t.detail("K3", json::object({{"D_1/2", detail::rational_to_json(d.index)}, {"D_3/2", detail::rational_to_json(r.index)}}));
    t.detail("dim4_D_3/2_class", rs.to_string());
}

void check_dim8_audit(Context&, Tally& t) {
    const Dim8Audit a = dim8_audit();
    t.expect(a.ahat_matches_reference, "A-hat degree 8 = (7 p1^2 - 4 p2)/5760");
    t.expect(a.p2_matches_reference, "Rarita-Schwinger p2 coefficient = -996/5760");
    t.expect(a.self_consistent, "product expansion = Chern-root expansion");
    t.detail("rs_p1^2", a.rs_p1sq.get_str());
    t.detail("rs_p1^2_chern_roots", a.rs_p1sq_roots.get_str());
    t.detail("rs_p1^2_reference", a.reference_rs_p1sq.get_str());
    t.detail("rs_p1^2_agrees_with_reference", a.p1sq_matches_reference);
    t.detail("rs_p2", a.rs_p2.get_str());
    t.detail("relation", "D_3/2 = " + a.relation_dirac.get_str() + " D_1/2 + (" + a.relation_p1sq.get_str() + ") p1^2");
    t.detail("relation_reference",
             "D_3/2 = " + a.reference_relation_dirac.get_str() + " D_1/2 + (" + a.reference_relation_p1sq.get_str() + ") p1^2");
    t.detail("relation_agrees_with_reference", a.relation_matches_reference);
}

struct CheckDef {
    const char* name;
    const char* description;
    void (*run)(Context&, Tally&);
};

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"clifford", "Clifford relations and chirality, m = 1..8", check_clifford},
        {"algebra", "pointwise identities of mu, iota and the projections", check_algebra},
        {"operators", "Dirac, gradient, twistor, divergence and L identities", check_operators},
        {"theorem1", "block form of the twisted Dirac operator", check_theorem1},
        {"y-identity", "nabla Y + Y nabla = -D_T on 1- and 2-forms", check_y_identity},
        {"monogenic-dims", "dimension of homogeneous monogenics by kernel rank", check_monogenic_dims},
        {"direct-sum", "P_k(1) = M1 + M2 + M3 with dimension accounting and D^3 L = 0", check_direct_sum},
        {"xi-equation", "D_T Xi(psi0) = sum e_i psi0 dx^i on monogenic bases", check_xi_equation},
        {"decompose", "decompose then re-sum on random solutions", check_decompose},
        {"spectra-integrality", "higher spin multiplicities are positive integers", check_spectra_integrality},
        {"mu2-provenance", "second series multiplicity against the Dirac spectrum", check_mu2_provenance},
        {"spectra-roundtrip", "spectrum tables round-trip through CSV and JSON", check_spectra_roundtrip},
        {"weyl", "Weyl dimension of the kernel weight = dim M1", check_weyl},
        {"charclass", "characteristic class engine, two independent routes", check_charclass},
        {"index-dim4", "dimension 4 indices and the -19 relation", check_index_dim4},
        {"dim8-audit", "degree 8 Rarita-Schwinger integrand audit", check_dim8_audit},
    };
    return defs;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.emplace_back(d.name);
    return out;
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
    json doc = json::object();
    doc["scale"] = scale;
    doc["passed"] = passed();
    json arr = json::array();
    for (const auto& c : checks) {
        json o = json::object();
        o["name"] = c.name;
        o["description"] = c.description;
        o["passed"] = c.passed;
        o["cases"] = c.cases;
        json details = json::object();
        for (const auto& [k, v] : c.details) details[k] = json::parse(v);
        o["details"] = std::move(details);
        arr.push_back(std::move(o));
    }
    doc["checks"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases): " << c.description << '\n';
        for (const auto& [k, v] : c.details) os << "    " << k << " = " << v << '\n';
    }
    os << (passed() ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
    for (const auto& name : options.only) {
        const auto& defs = registry();
        if (std::none_of(defs.begin(), defs.end(), [&](const CheckDef& d) { return name == d.name; }))
            throw UsageError("unknown check '" + name + "'");
    }
    Context ctx{options.scale, {}};
    VerifyReport report;
    report.scale = options.scale == VerifyScale::Quick ? "quick" : "default";
    for (const auto& def : registry()) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), def.name) == options.only.end()) continue;
        CheckResult r;
        r.name = def.name;
        r.description = def.description;
        Tally t(r);
        try {
            def.run(ctx, t);
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        t.finish();
        report.checks.push_back(std::move(r));
    }
    return report;
}

}  // namespace spinorlab
