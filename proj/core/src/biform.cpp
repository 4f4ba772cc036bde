#include "flagcalc/biform.hpp"

#include "flagcalc/detail/substitution.hpp"
#include "flagcalc/errors.hpp"

#include <iterator>

namespace flagcalc {

namespace {

std::vector<std::array<unsigned, 3>> exponent_triples(unsigned d) {
    // Decreasing lexicographic order.
    std::vector<std::array<unsigned, 3>> out;
    for (unsigned e0 = d + 1; e0-- > 0;) {
        for (unsigned e1 = d - e0 + 1; e1-- > 0;) out.push_back({e0, e1, d - e0 - e1});
    }
    return out;
}

}  // namespace

BiForm BiForm::constant(const GaussianRational& c) {
    BiForm f(0, 0);
    f.add_term(BiMonomial{}, c);
    return f;
}

BiForm BiForm::p_var(std::size_t i) {
    BiMonomial m;
    m.p[i] = 1;
    return monomial(m);
}

BiForm BiForm::l_var(std::size_t i) {
    BiMonomial m;
    m.l[i] = 1;
    return monomial(m);
}

BiForm BiForm::monomial(const BiMonomial& m, const GaussianRational& c) {
    BiForm f(m.p_degree(), m.l_degree());
    f.add_term(m, c);
    return f;
}

BiForm BiForm::incidence() {
    BiForm f(1, 1);
    for (std::size_t i = 0; i < 3; ++i) {
        BiMonomial m;
        m.p[i] = 1;
        m.l[i] = 1;
        f.add_term(m, 1);
    }
    return f;
}

std::vector<BiMonomial> BiForm::monomials(unsigned a, unsigned b) {
    std::vector<BiMonomial> out;
    const auto ps = exponent_triples(a);
    const auto ls = exponent_triples(b);
    out.reserve(ps.size() * ls.size());
    for (const auto& e : ps) {
        for (const auto& f : ls) out.push_back(BiMonomial{e, f});
    }
    return out;
}

std::vector<BiMonomial> BiForm::standard_monomials(unsigned a, unsigned b) {
    std::vector<BiMonomial> out;
    for (const auto& m : monomials(a, b)) {
        if (!m.divisible_by_incidence_lead()) out.push_back(m);
    }
    return out;
}

void BiForm::add_term(const BiMonomial& m, const GaussianRational& c) {
    if (m.p_degree() != a_ || m.l_degree() != b_) {
        throw PreconditionError("monomial does not match bidegree (" + std::to_string(a_) + "," +
                                std::to_string(b_) + ")");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational BiForm::coefficient(const BiMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational{} : it->second;
}

bool BiForm::is_real() const {
    for (const auto& [m, c] : terms_) {
        if (!c.is_real()) return false;
    }
    return true;
}

GaussianRational BiForm::eval(const Point3& p, const Point3& l) const {
    std::array<std::vector<GaussianRational>, 3> p_pow, l_pow;
    for (std::size_t i = 0; i < 3; ++i) {
        p_pow[i].push_back(1);
        for (unsigned e = 1; e <= a_; ++e) p_pow[i].push_back(p_pow[i].back() * p[i]);
        l_pow[i].push_back(1);
        for (unsigned e = 1; e <= b_; ++e) l_pow[i].push_back(l_pow[i].back() * l[i]);
    }
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        acc += c * p_pow[0][m.p[0]] * p_pow[1][m.p[1]] * p_pow[2][m.p[2]] * l_pow[0][m.l[0]] * l_pow[1][m.l[1]] *
               l_pow[2][m.l[2]];
    }
    return acc;
}

BiForm BiForm::scaled(const GaussianRational& c) const {
    BiForm out(a_, b_);
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, x * c);
    return out;
}

BiForm BiForm::conj() const {
    BiForm out(a_, b_);
    for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, x.conj());
    return out;
}

BiForm BiForm::partial_p(std::size_t i) const {
    if (a_ == 0) return BiForm(0, b_);
    BiForm out(a_ - 1, b_);
    for (const auto& [m, x] : terms_) {
        if (m.p[i] == 0) continue;
        BiMonomial d = m;
        --d.p[i];
        out.add_term(d, x * GaussianRational(static_cast<long>(m.p[i])));
    }
    return out;
}

BiForm BiForm::partial_l(std::size_t i) const {
    if (b_ == 0) return BiForm(a_, 0);
    BiForm out(a_, b_ - 1);
    for (const auto& [m, x] : terms_) {
        if (m.l[i] == 0) continue;
        BiMonomial d = m;
        --d.l[i];
        out.add_term(d, x * GaussianRational(static_cast<long>(m.l[i])));
    }
    return out;
}

BiForm BiForm::swap_and_conjugate() const {
    BiForm out(b_, a_);
    for (const auto& [m, x] : terms_) out.add_term(BiMonomial{m.l, m.p}, x.conj());
    return out;
}

BiForm BiForm::reduce_mod_incidence() const {
    // p0 l0 -> -(p1 l1 + p2 l2). Every rewrite produces strictly smaller
    // monomials, so sweeping from the top terminates.
    BiForm out = *this;
    for (;;) {
        auto it = out.terms_.begin();
        while (it != out.terms_.end() && !it->first.divisible_by_incidence_lead()) ++it;
        if (it == out.terms_.end()) return out;
        const BiMonomial m = it->first;
        const GaussianRational c = it->second;
        out.terms_.erase(it);
        for (std::size_t k = 1; k < 3; ++k) {
            BiMonomial r = m;
            --r.p[0];
            --r.l[0];
            ++r.p[k];
            ++r.l[k];
            out.add_term(r, -c);
        }
    }
}

BinaryForm BiForm::substitute(const BinaryFormTriple& p_forms, const BinaryFormTriple& l_forms) const {
    std::array<detail::Coeffs<GaussianRational>, 3> P, L;
    common_degree(p_forms);
    common_degree(l_forms);
    for (std::size_t i = 0; i < 3; ++i) {
        P[i] = p_forms[i].coeffs();
        L[i] = l_forms[i].coeffs();
    }
    return BinaryForm(detail::substitute<GaussianRational>(terms_, a_, b_, P, L));
}

BiForm operator+(const BiForm& f, const BiForm& g) {
    if (g.is_zero()) return f;
    if (f.is_zero()) return g;
    if (f.bidegree() != g.bidegree()) throw PreconditionError("adding BiForms of different bidegree");
    BiForm out = f;
    for (const auto& [m, c] : g.terms_) out.add_term(m, c);
    return out;
}

BiForm operator-(const BiForm& f, const BiForm& g) {
    if (g.is_zero()) return f;
    if (f.is_zero()) return -g;
    if (f.bidegree() != g.bidegree()) throw PreconditionError("subtracting BiForms of different bidegree");
    BiForm out = f;
    for (const auto& [m, c] : g.terms_) out.add_term(m, -c);
    return out;
}

BiForm operator*(const BiForm& f, const BiForm& g) {
    BiForm out(f.a_ + g.a_, f.b_ + g.b_);
    for (const auto& [m1, c1] : f.terms_) {
        for (const auto& [m2, c2] : g.terms_) {
            BiMonomial m;
            for (std::size_t i = 0; i < 3; ++i) {
                m.p[i] = m1.p[i] + m2.p[i];
                m.l[i] = m1.l[i] + m2.l[i];
            }
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

std::string BiForm::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    static constexpr const char* p_names[] = {"p0", "p1", "p2"};
    static constexpr const char* l_names[] = {"l0", "l1", "l2"};
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (std::size_t i = 0; i < 3; ++i) {
            if (m.p[i] > 0) out += std::string("*") + p_names[i] + (m.p[i] > 1 ? "^" + std::to_string(m.p[i]) : "");
        }
        for (std::size_t i = 0; i < 3; ++i) {
            if (m.l[i] > 0) out += std::string("*") + l_names[i] + (m.l[i] > 1 ? "^" + std::to_string(m.l[i]) : "");
        }
    }
    return out;
}

bool proportional(const BiForm& f, const BiForm& g) {
    if (f.bidegree() != g.bidegree()) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.term_count() != g.term_count()) return false;
    const auto& [m0, c0] = *f.terms().begin();
    const GaussianRational ratio = g.coefficient(m0) / c0;
    if (ratio.is_zero()) return false;
    for (const auto& [m, c] : f.terms()) {
        if (!(g.coefficient(m) == c * ratio)) return false;
    }
    return true;
}

}  // namespace flagcalc
