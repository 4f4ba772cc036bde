#include "flagcalc/invariants.hpp"

#include "flagcalc/errors.hpp"

#include <string>

namespace flagcalc {

namespace {

void require_general_type(const char* what, std::int64_t a, std::int64_t b) {
    if (a < 3 || b < 3) {
        throw PreconditionError(std::string(what) + " holds only for a >= 3 and b >= 3, got (" + std::to_string(a) +
                                "," + std::to_string(b) + ")");
    }
}

ExactBound make_bound(const mpz_class& num, const mpz_class& den) {
    ExactBound out;
    out.value = mpq_class(num, den);
    out.value.canonicalize();
    mpz_fdiv_q(out.floor.get_mpz_t(), out.value.get_num_mpz_t(), out.value.get_den_mpz_t());
    return out;
}

}  // namespace

ExactBound miyaoka_conic_bound(std::int64_t a_in, std::int64_t b_in) {
    require_general_type("the conic bound", a_in, b_in);
    const mpz_class a(static_cast<long>(a_in));
    const mpz_class b(static_cast<long>(b_in));
    const mpz_class num =
        2 * (a + b - 2) * (3 * a * a * b - a * a + 3 * a * b * b - 4 * a * b + 3 * a - b * b + 3 * b);
    const mpz_class den = (a + b - 1) * (a + b - 1);
    return make_bound(num, den);
}

ExactBound ruling_curve_bound(std::int64_t a_in, std::int64_t b_in) {
    require_general_type("the (1,0)-curve bound", a_in, b_in);
    const mpz_class a(static_cast<long>(a_in));
    const mpz_class b(static_cast<long>(b_in));
    const mpz_class num = 2 * a * (a * a * (3 * b - 1) + a * (3 * b * b - 4 * b + 3) - (b - 3) * b);
    const mpz_class den = (1 + a) * (1 + a);
    return make_bound(num, den);
}

ExactBound fiber_curve_bound(std::int64_t a, std::int64_t b) {
    return ruling_curve_bound(b, a);
}

std::int64_t c1_squared(std::int64_t a, std::int64_t b) {
    return 3 * a * a * b + 3 * a * b * b - 4 * a * a - 4 * b * b - 16 * a * b + 12 * a + 12 * b;
}

std::int64_t c2(std::int64_t a, std::int64_t b) {
    return 6 * a + 6 * b + 3 * a * a * b - 2 * a * a + 3 * a * b * b - 8 * a * b - 2 * b * b;
}

int chow_triple(HyperplaneClass x, HyperplaneClass y, HyperplaneClass z) {
    return (x == y && y == z) ? 0 : 1;
}

std::pair<std::int64_t, std::int64_t> surface_pair_intersection_bidegree(std::pair<std::int64_t, std::int64_t> first,
                                                                         std::pair<std::int64_t, std::int64_t> second) {
    using enum HyperplaneClass;
    const auto [a, b] = first;
    const auto [a2, b2] = second;
    // (a H1 + b H2)(a2 H1 + b2 H2) . H
    auto against = [&](HyperplaneClass h) {
        return a * a2 * chow_triple(H1, H1, h) + (a * b2 + b * a2) * chow_triple(H1, H2, h) +
               b * b2 * chow_triple(H2, H2, h);
    };
    return {against(H1), against(H2)};
}

SurfaceInvariantReport surface_invariant_report(std::int64_t a, std::int64_t b) {
    SurfaceInvariantReport r;
    r.a = a;
    r.b = b;
    r.canonical_bidegree = {a - 2, b - 2};
    r.conic_self_intersection = 2 - a - b;
    r.ruling_curve_self_intersection = -a;
    r.fiber_curve_self_intersection = -b;
    r.c1_squared = c1_squared(a, b);
    r.c2 = c2(a, b);
    const std::int64_t sum = r.c1_squared + r.c2;
    if (sum % 12 != 0) throw InternalError("c1^2 + c2 not divisible by 12 at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    r.euler_characteristic = sum / 12;
    r.general_type = a >= 3 && b >= 3;
    return r;
}

}  // namespace flagcalc
