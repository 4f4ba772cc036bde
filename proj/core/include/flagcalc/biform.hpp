#pragma once

#include "flagcalc/binary_form.hpp"
#include "flagcalc/gaussian_rational.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flagcalc {

/// Exponent pair ((e0,e1,e2),(f0,f1,f2)) of the monomial p^e l^f. The
/// defaulted comparison is the lexicographic monomial order.
struct BiMonomial {
    std::array<unsigned, 3> p{};
    std::array<unsigned, 3> l{};

    unsigned p_degree() const { return p[0] + p[1] + p[2]; }
    unsigned l_degree() const { return l[0] + l[1] + l[2]; }
    /// True if divisible by p0*l0, the leading monomial of the incidence form.
    bool divisible_by_incidence_lead() const { return p[0] >= 1 && l[0] >= 1; }

    friend auto operator<=>(const BiMonomial&, const BiMonomial&) = default;
    friend bool operator==(const BiMonomial&, const BiMonomial&) = default;
};

using Point3 = std::array<GaussianRational, 3>;

/// Bihomogeneous polynomial of bidegree (a,b) in p = (p0,p1,p2) and
/// l = (l0,l1,l2). Terms are kept in decreasing monomial order with no
/// zero coefficients.
class BiForm {
public:
    using TermMap = std::map<BiMonomial, GaussianRational, std::greater<>>;

    BiForm() = default;
    BiForm(unsigned a, unsigned b) : a_(a), b_(b) {}

    static BiForm constant(const GaussianRational& c);
    static BiForm p_var(std::size_t i);
    static BiForm l_var(std::size_t i);
    static BiForm monomial(const BiMonomial& m, const GaussianRational& c = 1);
    /// p0 l0 + p1 l1 + p2 l2, the equation of the flag threefold.
    static BiForm incidence();

    /// All monomials of bidegree (a,b), in decreasing monomial order.
    static std::vector<BiMonomial> monomials(unsigned a, unsigned b);
    /// Monomials not divisible by p0 l0: a basis of forms modulo the incidence ideal.
    static std::vector<BiMonomial> standard_monomials(unsigned a, unsigned b);

    unsigned a() const { return a_; }
    unsigned b() const { return b_; }
    std::pair<unsigned, unsigned> bidegree() const { return {a_, b_}; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c to the coefficient of m; validates the exponent sums.
    void add_term(const BiMonomial& m, const GaussianRational& c);
    GaussianRational coefficient(const BiMonomial& m) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;

    GaussianRational eval(const Point3& p, const Point3& l) const;

    BiForm scaled(const GaussianRational& c) const;
    BiForm conj() const;
    BiForm partial_p(std::size_t i) const;
    BiForm partial_l(std::size_t i) const;
    /// Conjugates coefficients and swaps the roles of p and l.
    BiForm swap_and_conjugate() const;
    /// Unique representative modulo the incidence form whose monomials are
    /// all standard (no p0 l0 factor).
    BiForm reduce_mod_incidence() const;

    /// Substitutes three binary forms of common degree for p and for l.
    BinaryForm substitute(const BinaryFormTriple& p_forms, const BinaryFormTriple& l_forms) const;

    /// Sum and difference require equal bidegrees, except that a zero
    /// operand (of any bidegree) acts as the identity.
    friend BiForm operator+(const BiForm& f, const BiForm& g);
    friend BiForm operator-(const BiForm& f, const BiForm& g);
    friend BiForm operator*(const BiForm& f, const BiForm& g);
    BiForm operator-() const { return scaled(-1); }
    friend bool operator==(const BiForm& f, const BiForm& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.terms_ == g.terms_;
    }

    std::string to_string() const;

private:
    unsigned a_ = 0;
    unsigned b_ = 0;
    TermMap terms_;
};

/// True if g = lambda * f for some nonzero scalar lambda (or both are zero).
bool proportional(const BiForm& f, const BiForm& g);

}  // namespace flagcalc
