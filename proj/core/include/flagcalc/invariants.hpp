#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>

namespace flagcalc {

/// Exact value of an upper bound together with its floor, which is the
/// operative bound on an integer count.
struct ExactBound {
    mpq_class value;
    mpz_class floor;
};

/// Upper bound on the number of pairwise disjoint smooth conics on a smooth
/// surface of bidegree (a,b):
///   2(a+b-2)(3a^2b - a^2 + 3ab^2 - 4ab + 3a - b^2 + 3b) / (a+b-1)^2.
/// Requires a, b >= 3; otherwise throws PreconditionError.
ExactBound miyaoka_conic_bound(std::int64_t a, std::int64_t b);

/// Upper bound on the number of bidegree-(1,0) curves on a smooth surface
/// of bidegree (a,b):  2a(a^2(3b-1) + a(3b^2-4b+3) - (b-3)b) / (1+a)^2.
/// Requires a, b >= 3.
ExactBound ruling_curve_bound(std::int64_t a, std::int64_t b);

/// The same bound for bidegree-(0,1) curves, i.e. ruling_curve_bound(b, a).
ExactBound fiber_curve_bound(std::int64_t a, std::int64_t b);

/// c_1^2 of a smooth surface of bidegree (a,b).
std::int64_t c1_squared(std::int64_t a, std::int64_t b);

/// c_2 (topological Euler number) of a smooth surface of bidegree (a,b).
std::int64_t c2(std::int64_t a, std::int64_t b);

/// Hyperplane classes H1 = O_F(1,0), H2 = O_F(0,1).
enum class HyperplaneClass { H1, H2 };

/// Triple intersection number in the Chow ring of F: 0 if all three
/// classes coincide, 1 otherwise.
int chow_triple(HyperplaneClass x, HyperplaneClass y, HyperplaneClass z);

/// Bidegree (C.H1, C.H2) of the curve cut by surfaces of bidegrees
/// (a,b) and (a2,b2).
std::pair<std::int64_t, std::int64_t> surface_pair_intersection_bidegree(std::pair<std::int64_t, std::int64_t> first,
                                                                         std::pair<std::int64_t, std::int64_t> second);

struct SurfaceInvariantReport {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::pair<std::int64_t, std::int64_t> canonical_bidegree;  // omega_S = O_S(a-2, b-2)
    std::int64_t conic_self_intersection = 0;                  // 2 - a - b
    std::int64_t ruling_curve_self_intersection = 0;           // (1,0)-curves: -a
    std::int64_t fiber_curve_self_intersection = 0;            // (0,1)-curves: -b
    std::int64_t c1_squared = 0;
    std::int64_t c2 = 0;
    std::int64_t euler_characteristic = 0;  // (c1^2 + c2) / 12
    bool general_type = false;              // a >= 3 and b >= 3
};

SurfaceInvariantReport surface_invariant_report(std::int64_t a, std::int64_t b);

}  // namespace flagcalc
