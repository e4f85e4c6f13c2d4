#include "spinorlab/spectra.hpp"

#include "json_util.hpp"
#include "spinorlab/errors.hpp"

#include <sstream>

namespace spinorlab {

using detail::json;

namespace {

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt spinor_dim_factor(int n) { return BigInt(1) << static_cast<unsigned>(n / 2); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

// ---------------------------------------------------------- weights

std::string HighestWeight::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        out += entries[i].get_str();
    }
    return out + ")";
}

void check_dominant(int N, const HighestWeight& w) {
    if (N < 3) throw UsageError("weyl_dim: Spin(N) needs N >= 3");
    const std::size_t r = static_cast<std::size_t>(N / 2);
    if (w.entries.size() != r) throw UsageError("weight " + w.to_string() + " has wrong rank for Spin(" + std::to_string(N) + ")");
    bool any_int = false;
    bool any_half = false;
    for (const auto& x : w.entries) {
        const Rational twice = 2 * x;
        if (!is_integer(twice)) throw UsageError("weight entries must be integers or half-odd integers");
        (is_integer(x) ? any_int : any_half) = true;
    }
    if (any_int && any_half) throw UsageError("weight mixes integral and half-odd entries");
    for (std::size_t i = 0; i + 1 < r; ++i) {
        const Rational next = (N % 2 == 0 && i + 2 == r) ? Rational(abs(w.entries[i + 1])) : w.entries[i + 1];
        if (w.entries[i] < next) throw UsageError("weight " + w.to_string() + " is not dominant");
    }
    if (N % 2 == 1 && sgn(w.entries.back()) < 0) throw UsageError("weight " + w.to_string() + " is not dominant");
    if (N % 2 == 0 && r == 1) {
        // Spin(2) is abelian; nothing further to check
    }
}

BigInt weyl_dim(int N, const HighestWeight& w) {
    check_dominant(N, w);
    const int r = N / 2;
    const bool odd = N % 2 == 1;
    std::vector<Rational> rho(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) rho[static_cast<std::size_t>(i)] = odd ? Rational(2 * (r - i) - 1, 2) : Rational(r - i - 1);
    std::vector<Rational> lr(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) lr[static_cast<std::size_t>(i)] = w.entries[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)];

    Rational num = 1;
    Rational den = 1;
    for (std::size_t i = 0; i < lr.size(); ++i) {
        for (std::size_t j = i + 1; j < lr.size(); ++j) {
            num *= (lr[i] - lr[j]) * (lr[i] + lr[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
        if (odd) {
            num *= lr[i];
            den *= rho[i];
        }
    }
    const Rational d = num / den;
    if (!is_integer(d) || sgn(d) <= 0) throw InvariantError("weyl_dim: non-integral dimension");
    return d.get_num();
}

BigInt weyl_dim_pm(int N, const HighestWeight& w) {
    if (N % 2 == 1 || w.entries.empty() || sgn(w.entries.back()) == 0) return weyl_dim(N, w);
    HighestWeight flipped = w;
    flipped.entries.back() = -flipped.entries.back();
    return weyl_dim(N, w) + weyl_dim(N, flipped);
}

std::optional<HighestWeight> rs_kernel_weight(int m, int k) {
    const int r = m / 2;
    if (r < 2) return std::nullopt;
    HighestWeight w;
    w.entries.emplace_back(2 * k + 1, 2);
    w.entries.emplace_back(3, 2);
    while (static_cast<int>(w.entries.size()) < r) w.entries.emplace_back(1, 2);
    for (auto& e : w.entries) e.canonicalize();
    return w;
}

// ---------------------------------------------------------- spectra

std::string to_string(Series s) {
    switch (s) {
        case Series::Dirac: return "dirac";
        case Series::Mu1: return "mu1";
        case Series::Mu2: return "mu2";
    }
    return "?";
}

Series parse_series(const std::string& s) {
    if (s == "dirac") return Series::Dirac;
    if (s == "mu1") return Series::Mu1;
    if (s == "mu2") return Series::Mu2;
    throw InputError("unknown series '" + s + "'");
}

BigInt dirac_multiplicity(int n, int l) {
    if (n < 2 || l < 0) throw UsageError("dirac_multiplicity: need n >= 2, l >= 0");
    return spinor_dim_factor(n) * binomial(l + n - 1, l);
}

namespace {

void check_hsd(int n, int j, int l) {
    if (n < 3 || j <= 0 || 2 * j >= n) throw UsageError("higher spin Dirac spectrum needs 0 < j < n/2");
    if (l < 1) throw UsageError("higher spin Dirac spectrum levels start at l = 1");
}

}  // namespace

Rational hsd_multiplicity(int n, int j, int l, Series series) {
    check_hsd(n, j, l);
    const Rational base = Rational(spinor_dim_factor(n) * binomial(l + n, l - 1));
    Rational out;
    if (series == Series::Mu1) {
        out = base * Rational(binomial(n + 1, j + 1)) * ratio((n - 2 * j) * (j + 1), (l + j) * (l + n - j));
    } else if (series == Series::Mu2) {
        out = base * Rational(binomial(n + 1, j)) * ratio((n - 2 * j + 2) * j, (l + j - 1) * (l + n - j + 1));
    } else {
        throw UsageError("hsd_multiplicity: series must be mu1 or mu2");
    }
    out.canonicalize();
    return out;
}

Rational hsd_eigenvalue_abs(int n, int j, int l, Series series) {
    check_hsd(n, j, l);
    Rational half_n_plus_l = ratio(n, 2) + l;
    half_n_plus_l.canonicalize();
    if (series == Series::Mu1) return half_n_plus_l;
    if (series == Series::Mu2) {
        Rational f(n - 2 * j, n - 2 * j + 2);
        f.canonicalize();
        return f * half_n_plus_l;
    }
    throw UsageError("hsd_eigenvalue_abs: series must be mu1 or mu2");
}

Rational rs_specialized_multiplicity(int n, int l, Series series) {
    check_hsd(n, 1, l);
    const Rational base = Rational(spinor_dim_factor(n) * binomial(l + n, l - 1));
    Rational out;
    if (series == Series::Mu1) {
        out = base * Rational(binomial(n + 1, 2)) * ratio(2 * (n - 2), (l + 1) * (l + n - 1));
    } else if (series == Series::Mu2) {
        out = base * Rational(n + 1) * ratio(n, l * (l + n));
    } else {
        throw UsageError("rs_specialized_multiplicity: series must be mu1 or mu2");
    }
    out.canonicalize();
    return out;
}

std::vector<SpectrumRow> dirac_spectrum(int n, int l_max) {
    if (n < 2) throw UsageError("dirac_spectrum: need n >= 2");
    if (l_max < 0) throw UsageError("dirac_spectrum: need l_max >= 0");
    std::vector<SpectrumRow> rows;
    for (int l = 0; l <= l_max; ++l) {
        Rational ev = ratio(n, 2) + l;
        ev.canonicalize();
        const BigInt mult = dirac_multiplicity(n, l);
        for (int sign : {1, -1}) rows.push_back({n, 0, l, Series::Dirac, sign, ev, mult});
    }
    return rows;
}

std::vector<SpectrumRow> hsd_spectrum(int n, int j, int l_max) {
    check_hsd(n, j, 1);
    if (l_max < 1) throw UsageError("hsd_spectrum: need l_max >= 1");
    std::vector<SpectrumRow> rows;
    for (int l = 1; l <= l_max; ++l) {
        for (Series s : {Series::Mu1, Series::Mu2}) {
            const Rational mult = hsd_multiplicity(n, j, l, s);
            if (!is_integer(mult) || sgn(mult) <= 0)
                throw InvariantError("hsd_spectrum: multiplicity " + mult.get_str() + " is not a positive integer");
            const Rational ev = hsd_eigenvalue_abs(n, j, l, s);
            for (int sign : {1, -1}) rows.push_back({n, j, l, s, sign, ev, mult.get_num()});
        }
    }
    return rows;
}

std::vector<SpectrumRow> rs_spectrum(int n, int l_max) {
    auto rows = hsd_spectrum(n, 1, l_max);
    for (const auto& row : rows) {
        if (rs_specialized_multiplicity(n, row.l, row.series) != Rational(row.multiplicity))
            throw InvariantError("rs_spectrum: specialized j=1 multiplicity disagrees with the general formula");
    }
    return rows;
}

// ---------------------------------------------------------- tables

std::string spectrum_to_csv(const std::vector<SpectrumRow>& rows) {
    std::ostringstream os;
    os << "n,j,l,series,sign,eigenvalue,multiplicity\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.j << ',' << r.l << ',' << to_string(r.series) << ',' << (r.sign > 0 ? "+" : "-") << ','
           << r.eigenvalue_abs.get_num().get_str() << '/' << r.eigenvalue_abs.get_den().get_str() << ','
           << r.multiplicity.get_str() << '\n';
    }
    return os.str();
}

std::string spectrum_to_json(const std::vector<SpectrumRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row = json::object();
        row["n"] = r.n;
        row["j"] = r.j;
        row["l"] = r.l;
        row["series"] = to_string(r.series);
        row["sign"] = r.sign > 0 ? "+" : "-";
        row["eigenvalue"] = detail::rational_to_json(r.eigenvalue_abs);
        row["multiplicity"] = detail::bigint_to_json(r.multiplicity);
        arr.push_back(std::move(row));
    }
    json doc = json::object();
    doc["rows"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string spectrum_to_text(const std::vector<SpectrumRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "n=" << r.n << " j=" << r.j << " l=" << r.l << " " << to_string(r.series) << " "
           << (r.sign > 0 ? "+" : "-") << r.eigenvalue_abs.get_str() << " mult " << r.multiplicity.get_str() << '\n';
    }
    return os.str();
}

namespace {

int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw InputError("not an integer: '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw InputError("not an integer: '" + s + "'");
    }
}

int parse_sign(const std::string& s) {
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw InputError("sign must be + or -, got '" + s + "'");
}

}  // namespace

std::vector<SpectrumRow> parse_spectrum_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "n,j,l,series,sign,eigenvalue,multiplicity")
        throw InputError("spectrum CSV: missing or unexpected header");
    std::vector<SpectrumRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        if (f.size() != 7) throw InputError("spectrum CSV: expected 7 fields in '" + line + "'");
        SpectrumRow r;
        r.n = parse_int(f[0]);
        r.j = parse_int(f[1]);
        r.l = parse_int(f[2]);
        r.series = parse_series(f[3]);
        r.sign = parse_sign(f[4]);
        r.eigenvalue_abs = detail::rational_from_string(f[5]);
        r.multiplicity = detail::bigint_from_json(json(f[6]));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SpectrumRow> parse_spectrum_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("spectrum JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw InputError("spectrum JSON: expected an object with a rows array");
    std::vector<SpectrumRow> rows;
    try {
        for (const auto& j : doc["rows"]) {
            SpectrumRow r;
            r.n = j.at("n").get<int>();
            r.j = j.at("j").get<int>();
            r.l = j.at("l").get<int>();
            r.series = parse_series(j.at("series").get<std::string>());
            r.sign = parse_sign(j.at("sign").get<std::string>());
            r.eigenvalue_abs = detail::rational_from_json(j.at("eigenvalue"));
            r.multiplicity = detail::bigint_from_json(j.at("multiplicity"));
            rows.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("spectrum JSON: ") + e.what());
    }
    return rows;
}

}  // namespace spinorlab
