#pragma once

#include "spinorlab/errors.hpp"
#include "spinorlab/scalar.hpp"

#include <json.hpp>

#include <string>

namespace spinorlab::detail {

using json = nlohmann::ordered_json;

inline json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        BigInt v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: " + j.get<std::string>());
        return v;
    }
    throw InputError("expected an integer, got " + j.dump());
}

inline json rational_to_json(const Rational& q) {
    json out = json::object();
    out["num"] = bigint_to_json(q.get_num());
    out["den"] = bigint_to_json(q.get_den());
    return out;
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw InputError("not a rational: '" + s + "'");
    if (sgn(q.get_den()) == 0) throw InputError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Accepts {"num": .., "den": ..}, a JSON integer, or a "p/q" string.
inline Rational rational_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den")) throw InputError("rational object needs num and den");
        const BigInt den = bigint_from_json(j.at("den"));
        if (sgn(den) == 0) throw InputError("zero denominator");
        Rational q(bigint_from_json(j.at("num")), den);
        q.canonicalize();
        return q;
    }
    if (j.is_number_integer()) return Rational(bigint_from_json(j));
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw InputError("expected a rational, got " + j.dump());
}

}  // namespace spinorlab::detail
