#pragma once

#include "flagcalc/biform.hpp"
#include "flagcalc/flag_geometry.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace flagcalc {

/// Residue mod a small prime. The modulus travels with each value; the
/// literal constants ModP(0) and ModP(1) carry no modulus and adopt the
/// modulus of the operand they are combined with. This lets ModP run
/// through the same scalar-generic kernels as GaussianRational.
struct ModP {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;

    ModP() = default;
    ModP(long constant) : value(static_cast<std::uint64_t>(constant)) {}  // NOLINT(google-explicit-constructor)
    ModP(std::uint64_t v, std::uint64_t p) : value(v % p), modulus(p) {}

    friend ModP operator+(ModP x, ModP y);
    friend ModP operator-(ModP x, ModP y);
    friend ModP operator*(ModP x, ModP y);
    ModP operator-() const { return ModP(0) - *this; }
    ModP& operator+=(ModP y) { return *this = *this + y; }
    ModP& operator-=(ModP y) { return *this = *this - y; }
    ModP& operator*=(ModP y) { return *this = *this * y; }
    friend bool operator==(ModP x, ModP y) { return x.value == y.value; }
};

using FpPoint = std::array<std::uint64_t, 3>;

/// L_{q,m} over F_p with q and m in canonical form (first nonzero entry 1).
struct FpConic {
    FpPoint q{};
    FpPoint m{};
    friend auto operator<=>(const FpConic&, const FpConic&) = default;
};

/// A BiForm with coefficients reduced mod an odd prime. When the original
/// form has nonreal coefficients, i maps to `i_image`, the smallest square
/// root of -1 mod p (requires p = 1 mod 4).
struct FpSurface {
    std::uint64_t prime = 0;
    std::optional<std::uint64_t> i_image;
    unsigned a = 0;
    unsigned b = 0;
    std::vector<std::pair<BiMonomial, ModP>> terms;

    std::uint64_t eval(const FpPoint& p, const FpPoint& l) const;
};

bool is_prime(std::uint64_t n);

/// Smallest x in [1, p) with x^2 = -1 mod p, if any.
std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t p);

/// Image of a Gaussian rational in F_p. Throws PreconditionError if a
/// denominator is divisible by p, or if im != 0 and no image of i is given.
std::uint64_t reduce_scalar(const GaussianRational& x, std::uint64_t p, std::optional<std::uint64_t> i_image);

/// Coefficientwise reduction. Throws PreconditionError for a bad prime or a
/// form that vanishes mod p.
FpSurface reduce_mod_p(const BiForm& form, std::uint64_t p);

/// Reduction of a characteristic-0 conic, or nullopt if it does not reduce
/// (bad denominators or a coordinate vector vanishing mod p).
std::optional<FpConic> reduce_conic_mod_p(const Conic& conic, std::uint64_t p, std::optional<std::uint64_t> i_image);

/// All points of P^2(F_p) in canonical form, sorted lexicographically.
std::vector<FpPoint> projective_points(std::uint64_t p);

bool fp_conic_smooth(const FpConic& c, std::uint64_t p);

/// Same restriction test as contains_conic, over F_p. Requires a smooth conic.
bool fp_contains_conic(const FpSurface& surface, const FpConic& conic);

/// Disjointness of two distinct conics over the algebraic closure of F_p.
bool fp_conics_disjoint(const FpConic& c1, const FpConic& c2, std::uint64_t p);

/// Every smooth conic over F_p contained in the surface, in (q, m) order.
/// This is mod-p evidence only: a conic over F_p need not lift.
std::vector<FpConic> conic_census(const FpSurface& surface);

struct DisjointSubsetResult {
    std::size_t size = 0;
    /// False when the census exceeded the exact-search limit and `size` is a greedy lower bound.
    bool exact = false;
    std::vector<std::size_t> members;
};

/// Largest set of pairwise disjoint conics from the census: exact branch
/// and bound up to `limit` conics, greedy lower bound beyond.
DisjointSubsetResult max_disjoint_subset(const std::vector<FpConic>& census, std::uint64_t p, std::size_t limit = 24);

}  // namespace flagcalc
