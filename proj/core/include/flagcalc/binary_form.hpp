#pragma once

#include "flagcalc/gaussian_rational.hpp"

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

namespace flagcalc {

/// Homogeneous polynomial of degree d in (s,t). Coefficient of s^(d-k) t^k
/// is stored at index k, so there are always d+1 coefficients. A zero form
/// keeps its formal degree.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1) {}
    explicit BinaryForm(unsigned degree) : coeffs_(degree + 1) {}
    explicit BinaryForm(std::vector<GaussianRational> coeffs);
    BinaryForm(std::initializer_list<GaussianRational> coeffs) : BinaryForm(std::vector<GaussianRational>(coeffs)) {}

    /// Constant form of degree 0.
    static BinaryForm constant(const GaussianRational& c) { return BinaryForm({c}); }
    /// a*s + b*t.
    static BinaryForm linear(const GaussianRational& a, const GaussianRational& b) { return BinaryForm({a, b}); }

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    const GaussianRational& operator[](std::size_t k) const { return coeffs_[k]; }

    bool is_zero() const;
    bool is_real() const;
    /// Number of leading zero coefficients, i.e. the power of t dividing the form.
    unsigned t_valuation() const;

    GaussianRational eval(const GaussianRational& s, const GaussianRational& t) const;

    BinaryForm conj() const;
    BinaryForm scaled(const GaussianRational& c) const;
    /// Scales so the first nonzero coefficient is 1. Zero stays zero.
    BinaryForm normalized() const;

    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
    friend bool operator==(const BinaryForm& f, const BinaryForm& g) = default;

    std::string to_string() const;

private:
    std::vector<GaussianRational> coeffs_;
};

/// Three binary forms of one common degree: a map P^1 -> P^2.
using BinaryFormTriple = std::array<BinaryForm, 3>;

/// Greatest common divisor over Q(i), normalized to first nonzero coefficient 1.
/// Throws PreconditionError if both inputs are zero.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

/// gcd of three forms; the zero triple is rejected.
BinaryForm gcd(const BinaryFormTriple& forms);

/// Exact quotient f / g. Throws DomainError if g does not divide f.
BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g);

/// Determinant of the 2d x 2d Sylvester matrix of two forms of common
/// degree d >= 1, by fraction-free elimination.
GaussianRational resultant(const BinaryForm& f, const BinaryForm& g);

/// Rows of the Sylvester matrix used by resultant(); exposed for tests.
std::vector<std::vector<GaussianRational>> sylvester_matrix(const BinaryForm& f, const BinaryForm& g);

/// Common degree of a triple; throws PreconditionError on mismatch.
unsigned common_degree(const BinaryFormTriple& forms);

/// Dot product sum_i a_i * f_i of a constant vector with a triple.
BinaryForm pair(const BinaryFormTriple& forms, const std::array<GaussianRational, 3>& a);

/// Dot product sum_i f_i * g_i of two triples.
BinaryForm pair(const BinaryFormTriple& f, const BinaryFormTriple& g);

/// Componentwise cross product of two triples.
BinaryFormTriple cross(const BinaryFormTriple& f, const BinaryFormTriple& g);

/// Divides each member of the triple by their common gcd.
BinaryFormTriple remove_common_factor(const BinaryFormTriple& forms);

}  // namespace flagcalc
