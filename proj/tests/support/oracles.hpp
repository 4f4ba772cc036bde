#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's elimination, parametrization or reduction code.

#include "flagcalc/biform.hpp"
#include "flagcalc/flag_geometry.hpp"
#include "flagcalc/gaussian_rational.hpp"
#include "flagcalc/random.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using flagcalc::BiForm;
using flagcalc::BiMonomial;
using flagcalc::Conic;
using flagcalc::GaussianRational;
using flagcalc::Point3;
using flagcalc::Rng;

using GR = GaussianRational;
using Matrix = std::vector<std::vector<GR>>;

inline GR gr(long re, long im = 0) { return GR(mpq_class(re), mpq_class(im)); }
inline GR frac(long num, long den) { return GR(mpq_class(num, den)); }

// Laplace expansion along the first row.
inline GR cofactor_determinant(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    GR total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        Matrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<GR> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        GR term = m[0][c] * cofactor_determinant(minor);
        total = (c % 2 == 0) ? total + term : total - term;
    }
    return total;
}

// Plain row reduction, first nonzero pivot, no size heuristics.
inline std::size_t naive_rank(Matrix m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c].is_zero()) continue;
            GR f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Arithmetic in Z/P with P = 10^9 + 9, a prime congruent to 1 mod 4 so that
// Gaussian rationals reduce once a square root of -1 is fixed.
struct Zp {
    static constexpr std::uint64_t P = 1000000009ULL;

    static std::uint64_t add(std::uint64_t x, std::uint64_t y) { return (x + y) % P; }
    static std::uint64_t sub(std::uint64_t x, std::uint64_t y) { return (x + P - y) % P; }
    static std::uint64_t mul(std::uint64_t x, std::uint64_t y) { return x * y % P; }
    static std::uint64_t pow(std::uint64_t x, std::uint64_t e) {
        std::uint64_t r = 1;
        for (x %= P; e; e >>= 1, x = mul(x, x))
            if (e & 1U) r = mul(r, x);
        return r;
    }
    static std::uint64_t inv(std::uint64_t x) { return pow(x, P - 2); }
    static std::uint64_t sqrt_minus_one() {
        for (std::uint64_t c = 2;; ++c) {
            std::uint64_t r = pow(c, (P - 1) / 4);
            if (mul(r, r) == P - 1) return r;
        }
    }
    static std::uint64_t from_mpz(const mpz_class& z) {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(P));
        if (r < 0) r += static_cast<unsigned long>(P);
        return r.get_ui();
    }
    static std::uint64_t from(const GR& x) {
        static const std::uint64_t i = sqrt_minus_one();
        auto q = [](const mpq_class& v) { return mul(from_mpz(v.get_num()), inv(from_mpz(v.get_den()))); };
        return add(q(x.re()), mul(i, q(x.im())));
    }
};

inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const std::uint64_t inv = Zp::inv(m[rank][c]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const std::uint64_t f = Zp::mul(m[r][c], inv);
            for (std::size_t k = c; k < cols; ++k) m[r][k] = Zp::sub(m[r][k], Zp::mul(f, m[rank][k]));
        }
        ++rank;
    }
    return rank;
}

// All exponent vectors of total degree d in three variables.
inline std::vector<std::array<unsigned, 3>> exponents(unsigned d) {
    std::vector<std::array<unsigned, 3>> out;
    for (unsigned i = 0; i <= d; ++i)
        for (unsigned j = 0; i + j <= d; ++j) out.push_back({i, j, d - i - j});
    return out;
}

inline std::size_t monomial_count(unsigned a, unsigned b) {
    return static_cast<std::size_t>(a + 1) * (a + 2) / 2 * (b + 1) * (b + 2) / 2;
}

inline std::uint64_t eval_monomial_mod_p(const std::array<unsigned, 3>& e, const std::array<std::uint64_t, 3>& x) {
    return Zp::mul(Zp::mul(Zp::pow(x[0], e[0]), Zp::pow(x[1], e[1])), Zp::pow(x[2], e[2]));
}

using FlagSample = std::pair<std::array<std::uint64_t, 3>, std::array<std::uint64_t, 3>>;

inline std::array<std::uint64_t, 3> cross_mod_p(const std::array<std::uint64_t, 3>& x, const std::array<std::uint64_t, 3>& y) {
    return {Zp::sub(Zp::mul(x[1], y[2]), Zp::mul(x[2], y[1])), Zp::sub(Zp::mul(x[2], y[0]), Zp::mul(x[0], y[2])),
            Zp::sub(Zp::mul(x[0], y[1]), Zp::mul(x[1], y[0]))};
}

inline std::size_t evaluation_rank(unsigned a, unsigned b, const std::vector<FlagSample>& points) {
    std::vector<std::vector<std::uint64_t>> m;
    for (const auto& [p, l] : points) {
        std::vector<std::uint64_t> row;
        for (const auto& e : exponents(a))
            for (const auto& f : exponents(b)) row.push_back(Zp::mul(eval_monomial_mod_p(e, p), eval_monomial_mod_p(f, l)));
        m.push_back(std::move(row));
    }
    return rank_mod_p(std::move(m));
}

// dim H^0(O(a,b)) on the flag threefold as the rank of evaluating every
// bidegree-(a,b) monomial at random points of the threefold.
inline std::size_t h0_by_evaluation(unsigned a, unsigned b, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<FlagSample> points;
    const std::size_t n = monomial_count(a, b) + 5;
    for (std::size_t k = 0; k < n; ++k) {
        std::array<std::uint64_t, 3> p{}, r{};
        for (auto& x : p) x = static_cast<std::uint64_t>(rng.uniform_int(0, Zp::P - 1));
        for (auto& x : r) x = static_cast<std::uint64_t>(rng.uniform_int(0, Zp::P - 1));
        points.push_back({p, cross_mod_p(p, r)});
    }
    return evaluation_rank(a, b, points);
}

inline std::array<std::uint64_t, 3> reduce_point(const Point3& x) {
    return {Zp::from(x[0]), Zp::from(x[1]), Zp::from(x[2])};
}

// Dimension of bidegree-(a,b) forms on the threefold vanishing on the given
// conics: forms on P2 x P2 vanishing at many sampled points of each conic,
// minus the multiples of the incidence form. Points of L_{q,m} are built
// directly from the definition: p = m x r, l = q x p.
inline std::int64_t dimension_by_point_evaluation(unsigned a, unsigned b, const std::vector<Conic>& conics,
                                                  std::uint64_t seed) {
    Rng rng(seed);
    std::vector<FlagSample> points;
    for (const auto& c : conics) {
        const auto q = reduce_point(c.q().coords());
        const auto m = reduce_point(c.m().coords());
        for (unsigned k = 0; k < 2 * (a + b) + 3; ++k) {
            std::array<std::uint64_t, 3> r{};
            for (auto& x : r) x = static_cast<std::uint64_t>(rng.uniform_int(0, Zp::P - 1));
            const auto p = cross_mod_p(m, r);
            points.push_back({p, cross_mod_p(q, p)});
        }
    }
    const auto full = static_cast<std::int64_t>(monomial_count(a, b));
    const std::int64_t vanishing = full - static_cast<std::int64_t>(evaluation_rank(a, b, points));
    const std::int64_t multiples = (a >= 1 && b >= 1) ? static_cast<std::int64_t>(monomial_count(a - 1, b - 1)) : 0;
    return vanishing - multiples;
}

// Two smooth conics meet iff the linear forms p.m2 and q2.l, restricted to a
// hand-built parametrization of the first conic, have a common zero.
inline bool conics_meet_by_substitution(const Conic& c1, const Conic& c2) {
    const Point3& q = c1.q().coords();
    const Point3& m = c1.m().coords();
    // Two independent points u, v on the line {p : p.m = 0}.
    std::vector<Point3> candidates;
    const Point3 basis[3] = {Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}};
    for (const auto& e : basis) {
        Point3 w = flagcalc::cross(m, e);
        if (!flagcalc::is_zero(w)) candidates.push_back(w);
    }
    const Point3 u = candidates[0];
    Point3 v = candidates[1];
    if (flagcalc::is_zero(flagcalc::cross(u, v))) v = candidates[2];
    const Point3 lu = flagcalc::cross(q, u);
    const Point3 lv = flagcalc::cross(q, v);
    // p(s,t) = s u + t v, l(s,t) = s lu + t lv.
    const Point3& m2 = c2.m().coords();
    const Point3& q2 = c2.q().coords();
    Matrix sys = {{flagcalc::dot(u, m2), flagcalc::dot(v, m2)}, {flagcalc::dot(q2, lu), flagcalc::dot(q2, lv)}};
    return cofactor_determinant(sys).is_zero();
}

inline Point3 random_point(Rng& rng, std::int64_t height) {
    for (;;) {
        Point3 x{rng.gaussian_integer(height), rng.gaussian_integer(height), rng.gaussian_integer(height)};
        if (!flagcalc::is_zero(x)) return x;
    }
}

inline Point3 random_real_point(Rng& rng, std::int64_t height) {
    for (;;) {
        Point3 x{rng.small_integer(height), rng.small_integer(height), rng.small_integer(height)};
        if (!flagcalc::is_zero(x)) return x;
    }
}

// A random point of the flag threefold.
inline std::pair<Point3, Point3> random_flag_point(Rng& rng, std::int64_t height = 20) {
    for (;;) {
        Point3 p = random_point(rng, height);
        Point3 l = flagcalc::cross(p, random_point(rng, height));
        if (!flagcalc::is_zero(l)) return {p, l};
    }
}

// A random smooth conic through a given flag point.
inline Conic random_conic_through(Rng& rng, const std::pair<Point3, Point3>& x) {
    for (;;) {
        Point3 m = flagcalc::cross(x.first, random_point(rng, 10));
        Point3 q = flagcalc::cross(x.second, random_point(rng, 10));
        if (flagcalc::is_zero(m) || flagcalc::is_zero(q)) continue;
        if (flagcalc::dot(q, m).is_zero()) continue;
        return Conic(flagcalc::ProjPoint(q), flagcalc::ProjPoint(m));
    }
}

inline Conic random_conic(Rng& rng, std::int64_t height = 20) {
    for (;;) {
        Point3 q = random_point(rng, height);
        Point3 m = random_point(rng, height);
        if (flagcalc::dot(q, m).is_zero()) continue;
        return Conic(flagcalc::ProjPoint(q), flagcalc::ProjPoint(m));
    }
}

// Dense random form with Gaussian integer coefficients.
inline BiForm random_biform(Rng& rng, unsigned a, unsigned b, std::int64_t height = 5) {
    BiForm f(a, b);
    for (const auto& m : BiForm::monomials(a, b)) f.add_term(m, rng.gaussian_integer(height));
    return f;
}

}  // namespace oracle

namespace oracle {

// Intersection numbers on a surface S of bidegree (a,b): H1.H1 = b,
// H2.H2 = a, H1.H2 = a+b, from the triple products on the threefold.
inline std::int64_t on_surface(std::int64_t a, std::int64_t b, std::pair<std::int64_t, std::int64_t> x,
                               std::pair<std::int64_t, std::int64_t> y) {
    return x.first * y.first * b + (x.first * y.second + x.second * y.first) * (a + b) + x.second * y.second * a;
}

// c1^2 = K_S^2 with K_S = O_S(a-2, b-2).
inline std::int64_t c1_squared_by_chow(std::int64_t a, std::int64_t b) {
    return on_surface(a, b, {a - 2, b - 2}, {a - 2, b - 2});
}

// c2 from the normal bundle sequence: c2(TF|S) = 6a+6b, corrected by c1(TS).N.
inline std::int64_t c2_by_adjunction(std::int64_t a, std::int64_t b) {
    return 6 * a + 6 * b + on_surface(a, b, {a - 2, b - 2}, {a, b});
}

inline mpq_class miyaoka_conic_oracle(std::int64_t a, std::int64_t b) {
    const mpq_class c1sq = c1_squared_by_chow(a, b), c2 = c2_by_adjunction(a, b);
    mpq_class v = mpq_class(3 * (a + b - 2), (a + b - 1) * (a + b - 1)) * (c2 - c1sq / 3);
    v.canonicalize();
    return v;
}

inline mpq_class miyaoka_ruling_oracle(std::int64_t a, std::int64_t b) {
    const mpq_class c1sq = c1_squared_by_chow(a, b), c2 = c2_by_adjunction(a, b);
    mpq_class v = mpq_class(3 * a, (a + 1) * (a + 1)) * (c2 - c1sq / 3);
    v.canonicalize();
    return v;
}

inline mpq_class diagonal_conic_bound(std::int64_t a) {
    mpq_class v(24 * (a * a - a + 1) * (a - 1) * a, (2 * a - 1) * (2 * a - 1));
    v.canonicalize();
    return v;
}

}  // namespace oracle
