#pragma once

#include "spinorlab/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinorlab {

/// Highest weight of an irreducible Spin(N) representation in the
/// orthogonal basis, rank floor(N/2) entries.
struct HighestWeight {
    std::vector<Rational> entries;

    std::string to_string() const;
    friend bool operator==(const HighestWeight& a, const HighestWeight& b) { return a.entries == b.entries; }
};

/// Throws UsageError unless `w` is dominant (and consistently integral or
/// half-odd) for Spin(N), N >= 3.
void check_dominant(int N, const HighestWeight& w);

/// Weyl dimension formula, product over positive roots of
/// <w + rho, a> / <rho, a>.
BigInt weyl_dim(int N, const HighestWeight& w);

/// For even N and a weight with nonzero last entry, the sum of the
/// dimensions of the +- pair; otherwise weyl_dim.
BigInt weyl_dim_pm(int N, const HighestWeight& w);

/// ((2k+1)/2, 3/2, 1/2, ..., 1/2) for Spin(m); empty when rank(Spin(m)) < 2
/// and the weight does not exist.
std::optional<HighestWeight> rs_kernel_weight(int m, int k);

enum class Series { Dirac, Mu1, Mu2 };

std::string to_string(Series s);
Series parse_series(const std::string& s);

struct SpectrumRow {
    int n = 0;       // sphere dimension
    int j = 0;       // operator index, 0 for the Dirac operator
    int l = 0;       // level
    Series series = Series::Dirac;
    int sign = 1;    // +1 / -1
    Rational eigenvalue_abs;
    BigInt multiplicity;

    Rational eigenvalue() const { return sign > 0 ? eigenvalue_abs : Rational(-eigenvalue_abs); }
    friend bool operator==(const SpectrumRow& a, const SpectrumRow& b) {
        return a.n == b.n && a.j == b.j && a.l == b.l && a.series == b.series && a.sign == b.sign &&
               a.eigenvalue_abs == b.eigenvalue_abs && a.multiplicity == b.multiplicity;
    }
};

/// 2^floor(n/2) * C(l+n-1, l)
BigInt dirac_multiplicity(int n, int l);

/// The two higher-spin multiplicity expressions, evaluated exactly as
/// rationals (they are not integral term by term).
Rational hsd_multiplicity(int n, int j, int l, Series series);
Rational hsd_eigenvalue_abs(int n, int j, int l, Series series);

/// The j = 1 multiplicity expressions in their specialized closed form.
Rational rs_specialized_multiplicity(int n, int l, Series series);

/// Rows l = 0..l_max, each with sign + then -.
std::vector<SpectrumRow> dirac_spectrum(int n, int l_max);
/// Rows l = 1..l_max, per level mu1 (+,-) then mu2 (+,-). Requires
/// 0 < j < n/2. Throws InvariantError if a multiplicity is not a positive
/// integer.
std::vector<SpectrumRow> hsd_spectrum(int n, int j, int l_max);
/// hsd_spectrum(n, 1, l_max), cross-checked against the specialized j = 1
/// expressions.
std::vector<SpectrumRow> rs_spectrum(int n, int l_max);

std::string spectrum_to_csv(const std::vector<SpectrumRow>& rows);
std::string spectrum_to_json(const std::vector<SpectrumRow>& rows);
std::string spectrum_to_text(const std::vector<SpectrumRow>& rows);
/// Inverse of the CSV / JSON writers; throws InputError on malformed input.
std::vector<SpectrumRow> parse_spectrum_csv(const std::string& text);
std::vector<SpectrumRow> parse_spectrum_json(const std::string& text);

}  // namespace spinorlab
