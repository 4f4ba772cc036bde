#pragma once

#include "flagcalc/binary_form.hpp"
#include "flagcalc/biform.hpp"
#include "flagcalc/gaussian_rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace flagcalc {

/// Point of P^2 over Q(i), stored with its first nonzero coordinate equal to 1.
/// Lines of P^2 are identified with points through l0 x0 + l1 x1 + l2 x2.
class ProjPoint {
public:
    ProjPoint(const GaussianRational& x0, const GaussianRational& x1, const GaussianRational& x2)
        : ProjPoint(Point3{x0, x1, x2}) {}
    explicit ProjPoint(const Point3& coords);

    const Point3& coords() const { return coords_; }
    const GaussianRational& operator[](std::size_t i) const { return coords_[i]; }

    ProjPoint conj() const;
    bool is_real() const;

    friend bool operator==(const ProjPoint& x, const ProjPoint& y) { return x.coords_ == y.coords_; }
    friend std::strong_ordering operator<=>(const ProjPoint& x, const ProjPoint& y);

    std::string to_string() const;

private:
    Point3 coords_;
};

GaussianRational dot(const Point3& x, const Point3& y);
Point3 cross(const Point3& x, const Point3& y);
bool is_zero(const Point3& x);

/// A point (p, l) of the flag threefold: p lies on the line l.
class FlagPoint {
public:
    /// Throws PreconditionError unless p.l = 0.
    FlagPoint(ProjPoint p, ProjPoint l);

    const ProjPoint& p() const { return p_; }
    const ProjPoint& l() const { return l_; }

    friend bool operator==(const FlagPoint&, const FlagPoint&) = default;

private:
    ProjPoint p_;
    ProjPoint l_;
};

/// L_{q,m} = {(p,l) in F : p.m = 0, q.l = 0}. Smooth iff q.m != 0; otherwise
/// the union of the fiber over q and the fiber over m.
class Conic {
public:
    Conic(ProjPoint q, ProjPoint m);

    const ProjPoint& q() const { return q_; }
    const ProjPoint& m() const { return m_; }
    bool smooth() const { return smooth_; }
    /// m = conj(q).
    bool is_twistor_fiber() const { return m_ == q_.conj(); }

    friend bool operator==(const Conic& x, const Conic& y) { return x.q_ == y.q_ && x.m_ == y.m_; }
    friend std::strong_ordering operator<=>(const Conic& x, const Conic& y);

    std::string to_string() const;

private:
    ProjPoint q_;
    ProjPoint m_;
    bool smooth_;
};

/// Rational curve in F given by two triples of binary forms.
class FlagCurve {
public:
    /// Validates p(s,t).l(s,t) == 0 identically and that neither triple is zero.
    FlagCurve(BinaryFormTriple p_forms, BinaryFormTriple l_forms);

    const BinaryFormTriple& p_forms() const { return p_forms_; }
    const BinaryFormTriple& l_forms() const { return l_forms_; }

    /// Image of (s,t); throws DomainError at a base point of either triple.
    FlagPoint at(const GaussianRational& s, const GaussianRational& t) const;

private:
    BinaryFormTriple p_forms_;
    BinaryFormTriple l_forms_;
};

/// Degree-1 parametrization of a smooth conic; l(s,t) = q x p(s,t).
/// Throws DegenerateConicError if q.m = 0.
FlagCurve conic_param(const Conic& conic);

Conic twistor_fiber_of(const ProjPoint& q);

/// Image of L_{q,m} under j(p,l) = (conj l, conj p), namely L_{conj m, conj q}.
Conic j_conic(const Conic& conic);

/// Pullback of a form under j: swap the p and l variables and conjugate coefficients.
BiForm j_pullback(const BiForm& form);

/// Whether {F = 0} on the flag threefold is j-invariant, i.e. j*F is a
/// nonzero multiple of F modulo the incidence form. Requires bidegree (a,a).
bool is_j_invariant(const BiForm& form);

/// F composed with conic_param(conic): a binary form of degree a+b.
BinaryForm restrict_to_conic(const BiForm& form, const Conic& conic);

bool contains_conic(const BiForm& form, const Conic& conic);

/// Whether two distinct conics have no common point.
bool conics_disjoint(const Conic& c1, const Conic& c2);

/// (C.O(1,0), C.O(0,1)) for a rational flag curve. Uses seeded random
/// hyperplanes with majority vote over three draws.
std::pair<unsigned, unsigned> curve_bidegree(const FlagCurve& curve, std::uint64_t seed = 0x5eedULL);

}  // namespace flagcalc
