#include "flagcalc/gaussian_rational.hpp"

#include "flagcalc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace flagcalc {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

mpq_class GaussianRational::parse_rational(std::string_view text) {
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) {
        throw PreconditionError("malformed rational: '" + std::string(text) + "'");
    }
    std::string num_str(num.front() == '+' ? num.substr(1) : num);
    std::string den_str(den.front() == '+' ? den.substr(1) : den);
    mpz_class n(num_str, 10);
    mpz_class d(den_str, 10);
    if (d == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(i)");
    const mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

std::size_t GaussianRational::bit_size() const {
    return mpz_sizeinbase(re_.get_num_mpz_t(), 2) + mpz_sizeinbase(re_.get_den_mpz_t(), 2) +
           mpz_sizeinbase(im_.get_num_mpz_t(), 2) + mpz_sizeinbase(im_.get_den_mpz_t(), 2);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero in Q(i)");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b) {
    if (const int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (const int c = cmp(a.im_, b.im_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    const mpq_class mag = abs(im_);
    if (mag != 1) out += mag.get_str();
    out += "i";
    return out;
}

GaussianRational pow(GaussianRational base, unsigned exponent) {
    GaussianRational result(1);
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace flagcalc
