#include "spinorlab/random.hpp"

#include <algorithm>

namespace spinorlab {

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw UsageError("Rng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
}

Scalar Rng::small_scalar(long range, bool complex) {
    const long re = uniform(-range, range);
    const long im = complex ? uniform(-range, range) : 0;
    return {Rational(re), Rational(im)};
}

Rational Rng::small_rational(long range) {
    long p = 0;
    while (p == 0) p = uniform(-range, range);
    Rational q(p, uniform(1, range));
    q.canonicalize();
    return q;
}

MultiPoly Rng::poly(int m, int max_degree, int terms) {
    MultiPoly p(m);
    for (int t = 0; t < terms; ++t) {
        Exponent e;
        const long deg = uniform(0, max_degree);
        for (long d = 0; d < deg; ++d) {
            const int v = static_cast<int>(uniform(0, m - 1));
            e.set(v, e[v] + 1);
        }
        p.add_term(e, small_scalar());
    }
    return p;
}

MultiPoly Rng::homogeneous_poly(int m, int degree, int terms) {
    MultiPoly p(m);
    for (int t = 0; t < terms; ++t) {
        Exponent e;
        for (int d = 0; d < degree; ++d) {
            const int v = static_cast<int>(uniform(0, m - 1));
            e.set(v, e[v] + 1);
        }
        p.add_term(e, small_scalar());
    }
    return p;
}

SpinorVec Rng::spinor(int m) {
    SpinorVec s = SpinorVec::zero(m);
    for (auto& c : s.coords) c = small_scalar(3);
    return s;
}

AlgebraicOneForm Rng::algebraic_one_form(int m) {
    AlgebraicOneForm f = AlgebraicOneForm::zero(m);
    for (auto& c : f.components) c = spinor(m);
    return f;
}

SpinorField Rng::spinor_field(int m, int max_degree, int terms) {
    SpinorField f(m);
    for (std::size_t a = 0; a < f.components().size(); ++a) f[a] = poly(m, max_degree, static_cast<int>(uniform(0, terms)));
    return f;
}

OneFormField Rng::one_form(int m, int max_degree, int terms) {
    OneFormField f(m);
    for (int i = 0; i < m; ++i) f[static_cast<std::size_t>(i)] = spinor_field(m, max_degree, terms);
    return f;
}

KFormField Rng::k_form(int m, int degree, int max_poly_degree, int components, int terms) {
    KFormField w(m, degree);
    for (int c = 0; c < components; ++c) {
        std::vector<int> all(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) all[static_cast<std::size_t>(i)] = i;
        // partial Fisher-Yates to draw `degree` distinct indices
        for (int i = 0; i < degree; ++i) {
            const auto j = static_cast<std::size_t>(uniform(i, m - 1));
            std::swap(all[static_cast<std::size_t>(i)], all[j]);
        }
        std::vector<int> idx(all.begin(), all.begin() + degree);
        std::sort(idx.begin(), idx.end());
        w.add(idx, spinor_field(m, max_poly_degree, terms));
    }
    return w;
}

}  // namespace spinorlab
