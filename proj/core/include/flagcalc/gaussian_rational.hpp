#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace flagcalc {

/// Exact element re + i*im of Q(i). Both parts are GMP rationals kept in
/// lowest terms with positive denominators.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {0, 1}; }

    /// Parses "n", "n/d" into a rational. Throws PreconditionError on garbage.
    static mpq_class parse_rational(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 = z * conj(z); always real and nonnegative.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse. Throws DomainError for zero.
    GaussianRational inverse() const;

    /// Bit size of all numerators and denominators; used as a pivot weight.
    std::size_t bit_size() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Deterministic total order (re first, then im). Not a field order.
    friend std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b);

    /// Human-readable form such as "3/2-5i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

GaussianRational pow(GaussianRational base, unsigned exponent);

/// "num/den" in lowest terms, denominator always printed.
std::string rational_to_string(const mpq_class& q);

}  // namespace flagcalc
