#pragma once

#include "flagcalc/biform.hpp"
#include "flagcalc/determinant.hpp"
#include "flagcalc/flag_geometry.hpp"
#include "flagcalc/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace flagcalc {

/// h^0(O_F(a,b)): bidegree-(a,b) monomials minus multiples of the incidence form.
std::int64_t h0_flag(std::int64_t a, std::int64_t b);

/// Which Hirzebruch surface F_1 inside F: a member of |O_F(1,0)| or of |O_F(0,1)|.
enum class HirzebruchSide { bidegree_10, bidegree_01 };

/// h^0(O_X(a,b)) for X of bidegree (1,0), or h^0(O_Y(a,b)) for Y of bidegree (0,1).
std::int64_t h0_hirzebruch(HirzebruchSide side, std::int64_t a, std::int64_t b);

/// Linear conditions for containing a union of conics. Column c is the
/// standard monomial columns[c]; each conic contributes a+b+1 rows, one per
/// coefficient of the restricted binary form.
struct ConditionMatrix {
    unsigned a = 0;
    unsigned b = 0;
    std::vector<Conic> conics;
    std::vector<BiMonomial> columns;
    DenseMatrix<GaussianRational> rows;
};

ConditionMatrix condition_matrix(unsigned a, unsigned b, const std::vector<Conic>& conics);

/// Exact rank by Gauss-Jordan elimination, choosing the smallest pivot by bit size.
std::size_t rank(DenseMatrix<GaussianRational> m);

/// Basis of the right kernel of an r x n matrix (n = columns).
std::vector<std::vector<GaussianRational>> kernel_basis(DenseMatrix<GaussianRational> m, std::size_t columns);

/// Dimension of the space of bidegree-(a,b) forms on F containing every conic.
std::int64_t system_dimension(unsigned a, unsigned b, const std::vector<Conic>& conics);

/// Expected dimension h0_flag(a,b) - x(a+b+1), clamped at zero.
std::int64_t expected_dimension(unsigned a, unsigned b, std::size_t conic_count);

/// Basis of |I_T(a,b)| in normal form modulo the incidence form.
struct SurfaceFamily {
    unsigned a = 0;
    unsigned b = 0;
    std::vector<BiForm> basis;
    std::vector<Conic> prescribed;
};

/// Computes the family and checks each basis element against every conic.
SurfaceFamily surface_family(unsigned a, unsigned b, const std::vector<Conic>& conics);

/// Seeded random Q(i)-combination of the family basis. Throws
/// EmptySystemError when no nonzero form contains the conics.
BiForm surface_through_conics(unsigned a, unsigned b, const std::vector<Conic>& conics, std::uint64_t seed);

/// Points of a prescribed conic where {F = 0} is singular inside F.
struct SingularWitness {
    /// gcd of the restricted rank conditions; its roots are the singular
    /// parameters. Meaningless when `whole_conic` is set.
    BinaryForm locus;
    /// Every point of the conic is singular.
    bool whole_conic = false;
    /// An explicit singular point, when one is rational over Q(i).
    std::optional<FlagPoint> point;
};

/// Searches the conic for singular points of S = {F = 0} on F. S is
/// singular at x iff the gradient of F is proportional to the gradient
/// (l, p) of the incidence form there, i.e. all 2x2 minors of the 2x6
/// matrix [grad F; (l, p)] vanish. The minors are restricted to the conic
/// and reduced by iterated gcd. Requires contains_conic(F, conic).
std::optional<SingularWitness> conic_singularity_witness(const BiForm& form, const Conic& conic);

/// Smooth conic with integer coordinates of absolute value <= height.
Conic random_smooth_conic(Rng& rng, std::int64_t height = 100);

/// Twistor fiber over a random real integer point: L_{q,q}.
Conic random_real_twistor_fiber(Rng& rng, std::int64_t height = 100);

/// x pairwise distinct, pairwise disjoint smooth conics; samples violating
/// either property are redrawn.
std::vector<Conic> random_disjoint_conics(Rng& rng, std::size_t count, std::int64_t height = 100);

}  // namespace flagcalc
