#include "spinorlab/index.hpp"

#include "json_util.hpp"
#include "spinorlab/errors.hpp"

#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace spinorlab {

using detail::json;

namespace {

Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

std::string to_string(OperatorTag tag) {
    switch (tag) {
        case OperatorTag::Dirac: return "D_1/2";
        case OperatorTag::TwistedCotangent: return "D_T";
        case OperatorTag::RaritaSchwinger: return "D_3/2";
        case OperatorTag::HigherSpin: return "D_j";
    }
    return "?";
}

OperatorTag parse_operator_tag(const std::string& s) {
    if (s == "D_1/2" || s == "dirac") return OperatorTag::Dirac;
    if (s == "D_T" || s == "twisted") return OperatorTag::TwistedCotangent;
    if (s == "D_3/2" || s == "rs") return OperatorTag::RaritaSchwinger;
    if (s == "D_j" || s == "hsd") return OperatorTag::HigherSpin;
    throw UsageError("unknown operator '" + s + "' (expected D_1/2, D_T, D_3/2 or D_j)");
}

// ---------------------------------------------------------- descriptor

void ManifoldDescriptor::validate() const {
    if (!supported_dim(dim)) throw InputError("descriptor: dim must be in 4..12, got " + std::to_string(dim));
    for (const auto& [m, v] : pontryagin_numbers) {
        if (m.degree() != dim)
            throw InputError("descriptor: monomial " + m.to_string() + " has degree " + std::to_string(m.degree()) +
                             ", expected " + std::to_string(dim));
    }
}

Rational ManifoldDescriptor::pair(const CharClass& c) const {
    if (c.dim() != dim) throw UsageError("pairing: class dimension differs from descriptor");
    Rational out = 0;
    const CharClass top = c.top();
    for (const auto& [m, coef] : top.terms()) {
        auto it = pontryagin_numbers.find(m);
        if (it != pontryagin_numbers.end()) out += coef * it->second;
    }
    return out;
}

ManifoldDescriptor ManifoldDescriptor::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("descriptor: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("descriptor: expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "dim" && key != "pontryagin_numbers" && key != "name")
            throw InputError("descriptor: unknown field '" + key + "'");
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw InputError("descriptor: missing integer field 'dim'");
    if (!doc.contains("pontryagin_numbers") || !doc["pontryagin_numbers"].is_object())
        throw InputError("descriptor: missing object field 'pontryagin_numbers'");
    ManifoldDescriptor out;
    out.dim = doc["dim"].get<int>();
    for (const auto& [key, value] : doc["pontryagin_numbers"].items()) {
        const PMonomial m = PMonomial::parse(key);
        if (out.pontryagin_numbers.count(m)) throw InputError("descriptor: monomial " + m.to_string() + " given twice");
        out.pontryagin_numbers[m] = detail::rational_from_json(value);
    }
    out.validate();
    return out;
}

std::string ManifoldDescriptor::to_json() const {
    json doc = json::object();
    doc["dim"] = dim;
    json nums = json::object();
    for (auto it = pontryagin_numbers.rbegin(); it != pontryagin_numbers.rend(); ++it)
        nums[it->first.to_string()] = detail::rational_to_json(it->second);
    doc["pontryagin_numbers"] = std::move(nums);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------- classes

namespace {

void check_hsd_range(int dim, int j) {
    const int n = dim / 2;
    if (j < 1 || j >= n) throw UsageError("D_j index needs 1 <= j < " + std::to_string(n) + " in dimension " + std::to_string(dim));
}

CharClass compute_integrand(int dim, OperatorTag tag, int j) {
    const CharClass ahat = ahat_series(dim);
    switch (tag) {
        case OperatorTag::Dirac: return ahat;
        case OperatorTag::TwistedCotangent: return ch_cotangent(dim) * ahat;
        case OperatorTag::RaritaSchwinger: return (ch_cotangent(dim) + CharClass::constant(dim, 1)) * ahat;
        case OperatorTag::HigherSpin: {
            check_hsd_range(dim, j);
            const Rational sign = (j + 1) % 2 == 0 ? Rational(1) : Rational(-1);
            return (ch_exterior_cotangent(dim, j) + ch_exterior_cotangent(dim, j - 1)) * ahat * sign;
        }
    }
    throw UsageError("unknown operator tag");
}

CharClass difference_integrand(int dim, int j) {
    check_hsd_range(dim, j);
    return (ch_exterior_cotangent(dim, j - 1) - ch_exterior_cotangent(dim, j)) * ahat_series(dim);
}

struct Memo {
    std::shared_mutex mutex;
    std::map<std::tuple<int, int, int>, CharClass> integrands;
};

Memo& memo() {
    static Memo m;
    return m;
}

}  // namespace

CharClass index_integrand(int dim, OperatorTag tag, int j) {
    if (!supported_dim(dim)) throw UsageError("index classes are supported for dimensions 4..12, got " + std::to_string(dim));
    if (tag != OperatorTag::HigherSpin) j = 0;
    const auto key = std::make_tuple(dim, static_cast<int>(tag), j);
    Memo& mm = memo();
    {
        std::shared_lock lock(mm.mutex);
        auto it = mm.integrands.find(key);
        if (it != mm.integrands.end()) return it->second;
    }
    CharClass value = compute_integrand(dim, tag, j);
    std::unique_lock lock(mm.mutex);
    return mm.integrands.emplace(key, std::move(value)).first->second;
}

CharClass symbolic_index_class(int dim, OperatorTag tag, int j) { return index_integrand(dim, tag, j).top(); }

// ---------------------------------------------------------- reports

namespace {

IndexReport make_report(const ManifoldDescriptor& M, OperatorTag tag, int j) {
    M.validate();
    IndexReport r;
    r.tag = tag;
    r.dim = M.dim;
    r.j = tag == OperatorTag::HigherSpin ? j : 0;
    r.symbolic = symbolic_index_class(M.dim, tag, j);
    r.index = M.pair(r.symbolic);
    r.integral = r.index.get_den() == 1;
    if (M.dim % 2 == 1) r.notes.emplace_back("odd dimension: the index vanishes");
    else if (M.dim % 4 != 0) r.notes.emplace_back("no Pontrjagin monomial has top degree: the index vanishes");
    if (tag == OperatorTag::HigherSpin) {
        r.difference_form_symbolic = difference_integrand(M.dim, j).top();
        r.difference_form_index = M.pair(*r.difference_form_symbolic);
        r.notes.emplace_back("index uses (-1)^(j+1) (Ch(L^j) + Ch(L^(j-1))) A; difference_form uses (Ch(L^(j-1)) - Ch(L^j)) A");
    }
    return r;
}

}  // namespace

IndexReport index_dirac(const ManifoldDescriptor& M) { return make_report(M, OperatorTag::Dirac, 0); }
IndexReport index_twisted_cotangent(const ManifoldDescriptor& M) { return make_report(M, OperatorTag::TwistedCotangent, 0); }
IndexReport index_rarita_schwinger(const ManifoldDescriptor& M) { return make_report(M, OperatorTag::RaritaSchwinger, 0); }
IndexReport index_hsd(const ManifoldDescriptor& M, int j) {
    check_hsd_range(M.dim, j);
    return make_report(M, OperatorTag::HigherSpin, j);
}

IndexReport compute_index(const ManifoldDescriptor& M, OperatorTag tag, int j) {
    if (tag == OperatorTag::HigherSpin) return index_hsd(M, j);
    return make_report(M, tag, 0);
}

std::string IndexReport::to_json() const {
    json doc = json::object();
    doc["operator"] = spinorlab::to_string(tag);
    doc["dim"] = dim;
    if (tag == OperatorTag::HigherSpin) doc["j"] = j;
    doc["symbolic_class"] = symbolic.to_string();
    doc["index"] = detail::rational_to_json(index);
    doc["integral"] = integral;
    if (difference_form_symbolic) {
        json diff = json::object();
        diff["symbolic_class"] = difference_form_symbolic->to_string();
        diff["index"] = detail::rational_to_json(*difference_form_index);
        doc["difference_form"] = std::move(diff);
    }
    doc["notes"] = notes;
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------- audit

Dim8Audit dim8_audit() {
    Dim8Audit a;
    const PMonomial p1sq({2});
    const PMonomial p2({0, 1});
    const CharClass ahat = symbolic_index_class(8, OperatorTag::Dirac);
    const CharClass rs = symbolic_index_class(8, OperatorTag::RaritaSchwinger);
    const CharClass rs_roots =
        ((chern_roots::ch_cotangent(8) + CharClass::constant(8, 1)) * chern_roots::ahat_series(8)).top();

    a.ahat_p1sq = ahat.coeff(p1sq);
    a.ahat_p2 = ahat.coeff(p2);
    a.rs_p1sq = rs.coeff(p1sq);
    a.rs_p2 = rs.coeff(p2);
    a.rs_p1sq_roots = rs_roots.coeff(p1sq);
    a.rs_p2_roots = rs_roots.coeff(p2);
    a.reference_rs_p1sq = frac(543, 5760);
    a.reference_rs_p2 = frac(-996, 5760);
    a.reference_relation_dirac = 249;
    a.reference_relation_p1sq = frac(-21, 144);

    a.relation_dirac = a.rs_p2 / a.ahat_p2;
    a.relation_p1sq = a.rs_p1sq - a.relation_dirac * a.ahat_p1sq;

    a.ahat_matches_reference = a.ahat_p1sq == frac(7, 5760) && a.ahat_p2 == frac(-4, 5760);
    a.p2_matches_reference = a.rs_p2 == a.reference_rs_p2;
    a.p1sq_matches_reference = a.rs_p1sq == a.reference_rs_p1sq;
    a.relation_matches_reference =
        a.relation_dirac == a.reference_relation_dirac && a.relation_p1sq == a.reference_relation_p1sq;
    a.self_consistent = a.rs_p1sq == a.rs_p1sq_roots && a.rs_p2 == a.rs_p2_roots && rs == rs_roots;
    return a;
}

std::string Dim8Audit::to_json() const {
    using detail::rational_to_json;
    json doc = json::object();
    json ah = json::object();
    ah["p1^2"] = rational_to_json(ahat_p1sq);
    ah["p2"] = rational_to_json(ahat_p2);
    doc["ahat_degree8"] = std::move(ah);
    json rs = json::object();
    rs["p1^2"] = rational_to_json(rs_p1sq);
    rs["p1^2_chern_roots"] = rational_to_json(rs_p1sq_roots);
    rs["p1^2_reference"] = rational_to_json(reference_rs_p1sq);
    rs["p2"] = rational_to_json(rs_p2);
    rs["p2_chern_roots"] = rational_to_json(rs_p2_roots);
    rs["p2_reference"] = rational_to_json(reference_rs_p2);
    doc["rs_degree8"] = std::move(rs);
    json rel = json::object();
    rel["dirac_coefficient"] = rational_to_json(relation_dirac);
    rel["p1^2_coefficient"] = rational_to_json(relation_p1sq);
    rel["dirac_coefficient_reference"] = rational_to_json(reference_relation_dirac);
    rel["p1^2_coefficient_reference"] = rational_to_json(reference_relation_p1sq);
    doc["relation"] = std::move(rel);
    json flags = json::object();
    flags["ahat_matches_reference"] = ahat_matches_reference;
    flags["p2_matches_reference"] = p2_matches_reference;
    flags["p1^2_matches_reference"] = p1sq_matches_reference;
    flags["relation_matches_reference"] = relation_matches_reference;
    flags["self_consistent"] = self_consistent;
    doc["flags"] = std::move(flags);
    return doc.dump(2) + "\n";
}

}  // namespace spinorlab
