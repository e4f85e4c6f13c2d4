#pragma once

#include "spinorlab/charclass.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinorlab {

/// Which elliptic operator an index refers to.
enum class OperatorTag { Dirac, TwistedCotangent, RaritaSchwinger, HigherSpin };

std::string to_string(OperatorTag tag);
/// "D_1/2" (or "dirac"), "D_T" ("twisted"), "D_3/2" ("rs"), "D_j" ("hsd").
OperatorTag parse_operator_tag(const std::string& s);

/// Dimension and Pontrjagin numbers of a closed oriented manifold.
struct ManifoldDescriptor {
    int dim = 0;
    std::map<PMonomial, Rational> pontryagin_numbers;

    /// Throws InputError unless every monomial has degree exactly dim.
    void validate() const;
    /// Pairing of the top-degree part of `c` with the Pontrjagin numbers.
    /// Monomials missing from the descriptor count as zero.
    Rational pair(const CharClass& c) const;

    /// {"dim": 8, "pontryagin_numbers": {"p1^2": 0, "p2": "-1440"}}. Values
    /// are integers, "num/den" strings, or {"num":..,"den":..}. Throws
    /// InputError.
    static ManifoldDescriptor from_json(const std::string& text);
    std::string to_json() const;
};

struct IndexReport {
    OperatorTag tag = OperatorTag::Dirac;
    int dim = 0;
    int j = 0;  // HigherSpin only
    CharClass symbolic;  // top-degree integrand
    Rational index;
    bool integral = false;
    std::vector<std::string> notes;
    /// HigherSpin only: the same pairing with the difference form
    /// Ch(L^{j-1}) - Ch(L^j) in place of the recursion-derived sum.
    std::optional<CharClass> difference_form_symbolic;
    std::optional<Rational> difference_form_index;

    std::string to_json() const;
};

/// Top-degree component of the index integrand. `j` is used for HigherSpin
/// only (1 <= j < dim/2). Odd dimensions give zero. Results are memoized.
CharClass symbolic_index_class(int dim, OperatorTag tag, int j = 1);

/// Full (untruncated in degree) integrand before taking the top part.
CharClass index_integrand(int dim, OperatorTag tag, int j = 1);

IndexReport index_dirac(const ManifoldDescriptor& M);
IndexReport index_twisted_cotangent(const ManifoldDescriptor& M);
IndexReport index_rarita_schwinger(const ManifoldDescriptor& M);
IndexReport index_hsd(const ManifoldDescriptor& M, int j);
IndexReport compute_index(const ManifoldDescriptor& M, OperatorTag tag, int j = 1);

/// Degree-8 audit of the Rarita-Schwinger integrand.
struct Dim8Audit {
    Rational ahat_p1sq;          // engine
    Rational ahat_p2;
    Rational rs_p1sq;            // engine, product expansion
    Rational rs_p1sq_roots;      // engine, Chern-root expansion
    Rational rs_p2;
    Rational rs_p2_roots;
    Rational reference_rs_p1sq;  // 543/5760
    Rational reference_rs_p2;    // -996/5760
    Rational reference_relation_dirac;  // 249
    Rational reference_relation_p1sq;   // -21/144
    Rational relation_dirac;     // engine: RS = relation_dirac * Ahat + relation_p1sq * p1^2
    Rational relation_p1sq;
    bool ahat_matches_reference = false;
    bool p2_matches_reference = false;
    bool p1sq_matches_reference = false;
    bool relation_matches_reference = false;
    bool self_consistent = false;

    std::string to_json() const;
};

Dim8Audit dim8_audit();

}  // namespace spinorlab
