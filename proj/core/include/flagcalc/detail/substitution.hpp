#pragma once

// Scalar-generic kernels shared by the characteristic-0 pipeline and the
// mod-p census, so both decide containment the same way.

#include <array>
#include <cstddef>
#include <vector>

namespace flagcalc::detail {

/// Dense univariate coefficient vector; index k <-> s^(d-k) t^k.
template <class S>
using Coeffs = std::vector<S>;

template <class S>
Coeffs<S> multiply(const Coeffs<S>& f, const Coeffs<S>& g) {
    Coeffs<S> out(f.size() + g.size() - 1, S(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == S(0)) continue;
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    }
    return out;
}

/// Powers x^0 .. x^max_exp of a binary form.
template <class S>
std::vector<Coeffs<S>> powers(const Coeffs<S>& x, unsigned max_exp) {
    std::vector<Coeffs<S>> out;
    out.reserve(max_exp + 1);
    out.push_back(Coeffs<S>{S(1)});
    for (unsigned e = 1; e <= max_exp; ++e) out.push_back(multiply(out.back(), x));
    return out;
}

/// Substitutes p_i = P[i](s,t), l_j = L[j](s,t) into sum_k c_k p^e_k l^f_k.
/// `terms` is a range of (exponents, coefficient) where exponents expose
/// `.p` and `.l` arrays. All P share one degree, all L share one degree.
template <class S, class Terms>
Coeffs<S> substitute(const Terms& terms, unsigned a, unsigned b, const std::array<Coeffs<S>, 3>& P,
                     const std::array<Coeffs<S>, 3>& L) {
    const std::size_t dp = P[0].size() - 1;
    const std::size_t dl = L[0].size() - 1;
    std::array<std::vector<Coeffs<S>>, 3> p_pow, l_pow;
    for (std::size_t i = 0; i < 3; ++i) {
        p_pow[i] = powers(P[i], a);
        l_pow[i] = powers(L[i], b);
    }
    Coeffs<S> out(a * dp + b * dl + 1, S(0));
    for (const auto& [mono, c] : terms) {
        if (c == S(0)) continue;
        Coeffs<S> term = multiply(multiply(p_pow[0][mono.p[0]], p_pow[1][mono.p[1]]), p_pow[2][mono.p[2]]);
        term = multiply(term, multiply(multiply(l_pow[0][mono.l[0]], l_pow[1][mono.l[1]]), l_pow[2][mono.l[2]]));
        for (std::size_t k = 0; k < term.size(); ++k) out[k] += c * term[k];
    }
    return out;
}

template <class S>
std::array<S, 3> cross3(const std::array<S, 3>& x, const std::array<S, 3>& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

template <class S>
S dot3(const std::array<S, 3>& x, const std::array<S, 3>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

/// Linear parametrization of L_{q,m}: p(s,t) = s*u + t*v spans {p.m = 0}
/// with u = m_k e_i - m_i e_k, v = m_k e_j - m_j e_k (i < j the indices
/// other than `pivot` = k), and l(s,t) = q x p(s,t). Entries are polynomial
/// in (q, m), which the ruled-surface certificate relies on. When
/// m_pivot = 0 the parametrization collapses.
template <class S>
struct LinearConicParam {
    std::array<Coeffs<S>, 3> p;
    std::array<Coeffs<S>, 3> l;
};

template <class S>
LinearConicParam<S> conic_param_with_pivot(const std::array<S, 3>& q, const std::array<S, 3>& m, std::size_t pivot) {
    const std::size_t i = pivot == 0 ? 1 : 0;
    const std::size_t j = pivot == 2 ? 1 : 2;
    std::array<S, 3> u{S(0), S(0), S(0)};
    std::array<S, 3> v{S(0), S(0), S(0)};
    u[i] = m[pivot];
    u[pivot] = -m[i];
    v[j] = m[pivot];
    v[pivot] = -m[j];
    const std::array<S, 3> qu = cross3(q, u);
    const std::array<S, 3> qv = cross3(q, v);
    LinearConicParam<S> out;
    for (std::size_t c = 0; c < 3; ++c) {
        out.p[c] = Coeffs<S>{u[c], v[c]};
        out.l[c] = Coeffs<S>{qu[c], qv[c]};
    }
    return out;
}

/// Index of the first nonzero entry, or 3 if all vanish.
template <class S>
std::size_t first_nonzero(const std::array<S, 3>& x) {
    for (std::size_t k = 0; k < 3; ++k) {
        if (!(x[k] == S(0))) return k;
    }
    return 3;
}

}  // namespace flagcalc::detail
