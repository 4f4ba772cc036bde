#pragma once

#include "flagcalc/binary_form.hpp"
#include "flagcalc/biform.hpp"
#include "flagcalc/flag_geometry.hpp"
#include "flagcalc/linear_systems.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace flagcalc {

/// Homogeneous parameter (s:t) on P^1. The affine value x is (x:1), infinity is (1:0).
struct ParameterPoint {
    GaussianRational s;
    GaussianRational t;

    friend bool operator==(const ParameterPoint&, const ParameterPoint&) = default;
};

/// Distinct rational points of P^1 in a fixed order:
/// 0, 1, inf, -1, then p/q by increasing height max(|p|, q).
std::vector<ParameterPoint> rational_parameter_sequence(std::size_t count);

/// Number of distinct real roots of a real polynomial (coefficient of x^j at
/// index j) by Sturm sequences. The zero polynomial is rejected.
unsigned count_real_roots(std::vector<mpq_class> poly);

struct ContainmentCertificate {
    /// Degree in the curve parameter of each coefficient of the restricted form.
    unsigned degree_bound = 0;
    /// Coordinate dropped by the uniform conic parametrization.
    std::size_t pivot = 0;
    std::vector<ParameterPoint> parameters;  // degree_bound + 1 distinct points
    bool passed = false;
};

struct PositivityCheck {
    unsigned real_roots_affine = 0;  // real roots of sum_i f_i(x,1)^2
    bool vanishes_at_infinity = false;
    bool positive = false;
};

struct BirationalityCheck {
    std::array<unsigned, 3> preimage_counts{};
    bool birational = false;
};

struct RuledSurfaceOptions {
    bool check_positivity = true;
    std::uint64_t seed = 0x7275'6c65'6400ULL;
};

/// Surface of bidegree (a,a) swept by the twistor fibers L_{f(x), f(x)}
/// for a real plane curve f : P^1 -> P^2 of degree a.
struct RuledSurfaceSpec {
    BinaryFormTriple forms;
    unsigned a = 0;
    /// Res_{(s,t)}(p.f(s,t), l.f(s,t)).
    BiForm surface;
    /// Parameters used by the containment certificate, with their fibers.
    std::vector<std::pair<ParameterPoint, Conic>> witness_params;
    ContainmentCertificate certificate;
    std::optional<PositivityCheck> positivity;
    BirationalityCheck birationality;
    bool j_invariant = false;
};

/// Builds the surface and certifies that it contains every fiber of the
/// family. Rejects non-real coefficients, a common factor among the
/// forms, a map that is not birational onto its image, and a vanishing
/// resultant with PreconditionError.
RuledSurfaceSpec twistor_ruled_surface(const BinaryFormTriple& forms, const RuledSurfaceOptions& options = {});

/// The fiber of the family over a parameter point: L_{f(s,t), f(s,t)}.
Conic ruling_fiber(const RuledSurfaceSpec& spec, const ParameterPoint& x);

/// n twistor fibers over the first n points of rational_parameter_sequence.
std::vector<Conic> twistor_circle_samples(const RuledSurfaceSpec& spec, std::size_t n);

/// Re-runs the uniform-parametrization containment test at one parameter.
bool fiber_contained_uniform(const RuledSurfaceSpec& spec, const ParameterPoint& x);

struct FiberSingularity {
    ParameterPoint parameter;
    Conic fiber;
    std::optional<SingularWitness> witness;
};

/// No verdict certifies global smoothness: a surface of this kind with
/// a >= 2 is always singular along a curve.
enum class SmoothnessVerdict { singular_witness_found, inconclusive };

struct SmoothnessProfile {
    std::vector<FiberSingularity> fibers;
    SmoothnessVerdict verdict = SmoothnessVerdict::inconclusive;
};

SmoothnessProfile smoothness_profile(const RuledSurfaceSpec& spec, std::size_t samples = 4);

}  // namespace flagcalc
