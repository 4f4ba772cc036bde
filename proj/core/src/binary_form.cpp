#include "flagcalc/binary_form.hpp"

#include "flagcalc/determinant.hpp"
#include "flagcalc/errors.hpp"

#include <algorithm>
#include <utility>

namespace flagcalc {

namespace {

// Univariate polynomials over Q(i), coefficient of x^j at index j.
using Poly = std::vector<GaussianRational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of a by b (b nonzero, trimmed).
Poly poly_rem(Poly a, const Poly& b) {
    trim(a);
    const GaussianRational lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const GaussianRational factor = a.back() * lead_inv;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const GaussianRational lead_inv = a.back().inverse();
        for (auto& c : a) c *= lead_inv;
    }
    return a;
}

// f(x, 1) as a univariate polynomial in x.
Poly dehomogenize(const BinaryForm& f) {
    const unsigned d = f.degree();
    Poly p(d + 1);
    for (unsigned j = 0; j <= d; ++j) p[j] = f[d - j];
    trim(p);
    return p;
}

}  // namespace

BinaryForm::BinaryForm(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("BinaryForm needs at least one coefficient");
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

bool BinaryForm::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_real(); });
}

unsigned BinaryForm::t_valuation() const {
    unsigned k = 0;
    while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
    return k;
}

GaussianRational BinaryForm::eval(const GaussianRational& s, const GaussianRational& t) const {
    // Horner in t/s is unsafe at s = 0, so accumulate powers explicitly.
    const unsigned d = degree();
    std::vector<GaussianRational> s_pow(d + 1), t_pow(d + 1);
    s_pow[0] = 1;
    t_pow[0] = 1;
    for (unsigned k = 1; k <= d; ++k) {
        s_pow[k] = s_pow[k - 1] * s;
        t_pow[k] = t_pow[k - 1] * t;
    }
    GaussianRational acc;
    for (unsigned k = 0; k <= d; ++k) {
        if (!coeffs_[k].is_zero()) acc += coeffs_[k] * s_pow[d - k] * t_pow[k];
    }
    return acc;
}

BinaryForm BinaryForm::conj() const {
    std::vector<GaussianRational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.conj());
    return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::scaled(const GaussianRational& c) const {
    std::vector<GaussianRational> out = coeffs_;
    for (auto& x : out) x *= c;
    return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::normalized() const {
    const unsigned v = t_valuation();
    if (v == coeffs_.size()) return *this;
    return scaled(coeffs_[v].inverse());
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw PreconditionError("adding binary forms of different degree");
    std::vector<GaussianRational> out = f.coeffs_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += g.coeffs_[k];
    return BinaryForm(std::move(out));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw PreconditionError("subtracting binary forms of different degree");
    std::vector<GaussianRational> out = f.coeffs_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= g.coeffs_[k];
    return BinaryForm(std::move(out));
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    std::vector<GaussianRational> out(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            if (!g.coeffs_[j].is_zero()) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return BinaryForm(std::move(out));
}

std::string BinaryForm::to_string() const {
    const unsigned d = degree();
    std::string out;
    for (unsigned k = 0; k <= d; ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[k].to_string() + ")";
        if (d - k > 0) out += "*s^" + std::to_string(d - k);
        if (k > 0) out += "*t^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    const bool f_zero = f.is_zero();
    const bool g_zero = g.is_zero();
    if (f_zero && g_zero) throw PreconditionError("gcd of two zero binary forms");
    if (f_zero) return g.normalized();
    if (g_zero) return f.normalized();

    const unsigned vt = std::min(f.t_valuation(), g.t_valuation());
    const Poly u = poly_gcd(dehomogenize(f), dehomogenize(g));
    const unsigned e = static_cast<unsigned>(u.size() - 1);
    std::vector<GaussianRational> coeffs(e + vt + 1);
    for (unsigned j = 0; j <= e; ++j) coeffs[e - j + vt] = u[j];
    return BinaryForm(std::move(coeffs)).normalized();
}

BinaryForm gcd(const BinaryFormTriple& forms) {
    if (forms[0].is_zero() && forms[1].is_zero() && forms[2].is_zero()) {
        throw PreconditionError("gcd of a zero triple");
    }
    BinaryForm g = forms[0];
    for (std::size_t i = 1; i < 3; ++i) {
        if (g.is_zero()) {
            g = forms[i];
        } else if (!forms[i].is_zero()) {
            g = gcd(g, forms[i]);
        }
    }
    return g.normalized();
}

BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw DomainError("division by the zero binary form");
    if (g.degree() > f.degree()) throw DomainError("divisor degree exceeds dividend degree");
    const unsigned vg = g.t_valuation();
    const unsigned qd = f.degree() - g.degree();
    const GaussianRational lead_inv = g[vg].inverse();
    std::vector<GaussianRational> q(qd + 1);
    for (unsigned k = 0; k <= qd; ++k) {
        GaussianRational acc = f[k + vg];
        for (unsigned j = vg + 1; j <= g.degree() && j <= k + vg; ++j) {
            acc -= g[j] * q[k + vg - j];
        }
        q[k] = acc * lead_inv;
    }
    BinaryForm quotient(std::move(q));
    if (!(quotient * g == f)) throw DomainError("binary form division is not exact");
    return quotient;
}

std::vector<std::vector<GaussianRational>> sylvester_matrix(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw PreconditionError("resultant requires forms of equal degree");
    const unsigned d = f.degree();
    if (d == 0) throw PreconditionError("resultant requires degree >= 1");
    const unsigned n = 2 * d;
    std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
    for (unsigned r = 0; r < d; ++r) {
        for (unsigned k = 0; k <= d; ++k) {
            m[r][r + k] = f[k];
            m[d + r][r + k] = g[k];
        }
    }
    return m;
}

GaussianRational resultant(const BinaryForm& f, const BinaryForm& g) {
    return bareiss_determinant(sylvester_matrix(f, g));
}

unsigned common_degree(const BinaryFormTriple& forms) {
    const unsigned d = forms[0].degree();
    if (forms[1].degree() != d || forms[2].degree() != d) {
        throw PreconditionError("binary form triple has mismatched degrees");
    }
    return d;
}

BinaryForm pair(const BinaryFormTriple& forms, const std::array<GaussianRational, 3>& a) {
    BinaryForm out(common_degree(forms));
    for (std::size_t i = 0; i < 3; ++i) {
        if (!a[i].is_zero()) out = out + forms[i].scaled(a[i]);
    }
    return out;
}

BinaryForm pair(const BinaryFormTriple& f, const BinaryFormTriple& g) {
    return f[0] * g[0] + f[1] * g[1] + f[2] * g[2];
}

BinaryFormTriple cross(const BinaryFormTriple& f, const BinaryFormTriple& g) {
    return {f[1] * g[2] - f[2] * g[1], f[2] * g[0] - f[0] * g[2], f[0] * g[1] - f[1] * g[0]};
}

BinaryFormTriple remove_common_factor(const BinaryFormTriple& forms) {
    const BinaryForm g = gcd(forms);
    if (g.degree() == 0) return forms;
    return {exact_divide(forms[0], g), exact_divide(forms[1], g), exact_divide(forms[2], g)};
}

}  // namespace flagcalc
