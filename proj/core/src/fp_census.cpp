#include "flagcalc/fp_census.hpp"

#include "flagcalc/detail/substitution.hpp"
#include "flagcalc/errors.hpp"
#include "flagcalc/parallel.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace flagcalc {

namespace {

std::uint64_t shared_modulus(ModP x, ModP y) {
    return x.modulus != 0 ? x.modulus : y.modulus;
}

// Moduli are below 2^32 (checked in reduce_mod_p), so products fit in 64 bits.
std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return ((x % p) * (y % p)) % p;
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t mpz_mod(const mpz_class& x, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t rational_mod(const mpq_class& x, std::uint64_t p) {
    const std::uint64_t den = mpz_mod(x.get_den(), p);
    if (den == 0) throw PreconditionError("prime " + std::to_string(p) + " divides a denominator");
    return mul_mod(mpz_mod(x.get_num(), p), power_mod(den, p - 2, p), p);
}

std::array<ModP, 3> lift(const FpPoint& x, std::uint64_t p) {
    return {ModP(x[0], p), ModP(x[1], p), ModP(x[2], p)};
}

std::optional<FpPoint> canonical(std::array<std::uint64_t, 3> x, std::uint64_t p) {
    std::size_t k = 0;
    while (k < 3 && x[k] % p == 0) ++k;
    if (k == 3) return std::nullopt;
    const std::uint64_t inv = power_mod(x[k], p - 2, p);
    for (auto& c : x) c = mul_mod(c, inv, p);
    return x;
}

}  // namespace

ModP operator+(ModP x, ModP y) {
    const std::uint64_t p = shared_modulus(x, y);
    if (p == 0) return ModP(static_cast<long>(x.value + y.value));
    return ModP((x.value % p) + (y.value % p), p);
}

ModP operator-(ModP x, ModP y) {
    const std::uint64_t p = shared_modulus(x, y);
    if (p == 0) {
        if (y.value > x.value) throw InternalError("ModP: negative constant without a modulus");
        return ModP(static_cast<long>(x.value - y.value));
    }
    return ModP((x.value % p) + p - (y.value % p), p);
}

ModP operator*(ModP x, ModP y) {
    const std::uint64_t p = shared_modulus(x, y);
    if (p == 0) return ModP(static_cast<long>(x.value * y.value));
    return ModP(mul_mod(x.value, y.value, p), p);
}

std::uint64_t FpSurface::eval(const FpPoint& p_point, const FpPoint& l_point) const {
    ModP acc(0, prime);
    for (const auto& [m, c] : terms) {
        ModP term = c;
        for (std::size_t i = 0; i < 3; ++i) {
            for (unsigned e = 0; e < m.p[i]; ++e) term *= ModP(p_point[i], prime);
            for (unsigned e = 0; e < m.l[i]; ++e) term *= ModP(l_point[i], prime);
        }
        acc += term;
    }
    return acc.value % prime;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t p) {
    for (std::uint64_t x = 1; x < p; ++x) {
        if ((x * x + 1) % p == 0) return x;
    }
    return std::nullopt;
}

std::uint64_t reduce_scalar(const GaussianRational& x, std::uint64_t p, std::optional<std::uint64_t> i_image) {
    const std::uint64_t re = rational_mod(x.re(), p);
    if (x.is_real()) return re;
    if (!i_image) throw PreconditionError("nonreal coefficient but no square root of -1 mod " + std::to_string(p));
    const std::uint64_t im = rational_mod(x.im(), p);
    return (re + mul_mod(im, *i_image, p)) % p;
}

FpSurface reduce_mod_p(const BiForm& form, std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw PreconditionError(std::to_string(p) + " is not an odd prime");
    if (p >= (std::uint64_t{1} << 32)) throw PreconditionError("census primes must be below 2^32");
    FpSurface out;
    out.prime = p;
    out.a = form.a();
    out.b = form.b();
    if (!form.is_real()) {
        out.i_image = sqrt_minus_one(p);
        if (!out.i_image) {
            throw PreconditionError("form has nonreal coefficients and -1 is not a square mod " + std::to_string(p));
        }
    }
    for (const auto& [m, c] : form.terms()) {
        const std::uint64_t v = reduce_scalar(c, p, out.i_image);
        if (v != 0) out.terms.emplace_back(m, ModP(v, p));
    }
    if (out.terms.empty()) throw PreconditionError("form vanishes identically mod " + std::to_string(p));
    return out;
}

std::optional<FpConic> reduce_conic_mod_p(const Conic& conic, std::uint64_t p, std::optional<std::uint64_t> i_image) {
    auto reduce_point = [&](const ProjPoint& x) -> std::optional<FpPoint> {
        // Clear denominators first so a point like (1, 1/p, 0) still reduces.
        mpz_class den_lcm = 1;
        for (std::size_t i = 0; i < 3; ++i) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x[i].re().get_den_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x[i].im().get_den_mpz_t());
        }
        std::array<std::uint64_t, 3> raw{};
        try {
            for (std::size_t i = 0; i < 3; ++i) raw[i] = reduce_scalar(x[i] * GaussianRational(mpq_class(den_lcm)), p, i_image);
        } catch (const PreconditionError&) {
            return std::nullopt;
        }
        return canonical(raw, p);
    };
    auto q = reduce_point(conic.q());
    auto m = reduce_point(conic.m());
    if (!q || !m) return std::nullopt;
    return FpConic{*q, *m};
}

std::vector<FpPoint> projective_points(std::uint64_t p) {
    std::vector<FpPoint> out;
    out.reserve(p * p + p + 1);
    out.push_back({0, 0, 1});
    for (std::uint64_t y = 0; y < p; ++y) out.push_back({0, 1, y});
    for (std::uint64_t x = 0; x < p; ++x) {
        for (std::uint64_t y = 0; y < p; ++y) out.push_back({1, x, y});
    }
    return out;
}

bool fp_conic_smooth(const FpConic& c, std::uint64_t p) {
    return !(detail::dot3(lift(c.q, p), lift(c.m, p)) == ModP(0));
}

bool fp_contains_conic(const FpSurface& surface, const FpConic& conic) {
    const std::uint64_t p = surface.prime;
    if (!fp_conic_smooth(conic, p)) throw DegenerateConicError("fp_contains_conic: degenerate conic");
    const auto m = lift(conic.m, p);
    const auto param = detail::conic_param_with_pivot(lift(conic.q, p), m, detail::first_nonzero(m));
    const auto restricted = detail::substitute<ModP>(surface.terms, surface.a, surface.b, param.p, param.l);
    return std::all_of(restricted.begin(), restricted.end(), [](ModP x) { return x == ModP(0); });
}

bool fp_conics_disjoint(const FpConic& c1, const FpConic& c2, std::uint64_t p) {
    if (c1 == c2) throw PreconditionError("fp_conics_disjoint called on identical conics");
    const auto pm = detail::cross3(lift(c1.m, p), lift(c2.m, p));
    const auto lq = detail::cross3(lift(c1.q, p), lift(c2.q, p));
    auto zero = [](const std::array<ModP, 3>& x) { return x[0] == ModP(0) && x[1] == ModP(0) && x[2] == ModP(0); };
    if (zero(pm) || zero(lq)) return false;
    return !(detail::dot3(pm, lq) == ModP(0));
}

std::vector<FpConic> conic_census(const FpSurface& surface) {
    const std::uint64_t p = surface.prime;
    const std::vector<FpPoint> points = projective_points(p);
    std::vector<std::vector<FpConic>> per_q(points.size());
    parallel_for(points.size(), [&](std::size_t qi) {
        for (const auto& m : points) {
            const FpConic c{points[qi], m};
            if (fp_conic_smooth(c, p) && fp_contains_conic(surface, c)) per_q[qi].push_back(c);
        }
    });
    std::vector<FpConic> out;
    for (auto& chunk : per_q) out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

DisjointSubsetResult max_disjoint_subset(const std::vector<FpConic>& census, std::uint64_t p, std::size_t limit) {
    const std::size_t n = census.size();
    DisjointSubsetResult result;
    if (n == 0) {
        result.exact = true;
        return result;
    }
    std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            compatible[i][j] = compatible[j][i] = fp_conics_disjoint(census[i], census[j], p);
        }
    }

    if (n > limit || n > 64) {
        for (std::size_t i = 0; i < n; ++i) {
            const bool ok = std::all_of(result.members.begin(), result.members.end(),
                                        [&](std::size_t j) { return compatible[i][j]; });
            if (ok) result.members.push_back(i);
        }
        result.size = result.members.size();
        result.exact = false;
        return result;
    }

    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    // Candidates are tried in index order; prune when even taking every
    // remaining candidate cannot beat the incumbent.
    std::function<void(std::vector<std::size_t>)> search = [&](std::vector<std::size_t> candidates) {
        if (current.size() + candidates.size() <= best.size()) return;
        if (candidates.empty()) {
            best = current;
            return;
        }
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (current.size() + (candidates.size() - idx) <= best.size()) return;
            const std::size_t v = candidates[idx];
            std::vector<std::size_t> next;
            for (std::size_t k = idx + 1; k < candidates.size(); ++k) {
                if (compatible[v][candidates[k]]) next.push_back(candidates[k]);
            }
            current.push_back(v);
            search(std::move(next));
            current.pop_back();
        }
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    search(all);
    result.members = best;
    result.size = best.size();
    result.exact = true;
    return result;
}

}  // namespace flagcalc
