#include "flagcalc/flag_geometry.hpp"

#include "flagcalc/detail/substitution.hpp"
#include "flagcalc/errors.hpp"
#include "flagcalc/random.hpp"

#include <map>

namespace flagcalc {

namespace {

bool triple_is_zero(const BinaryFormTriple& f) {
    return f[0].is_zero() && f[1].is_zero() && f[2].is_zero();
}

}  // namespace

ProjPoint::ProjPoint(const Point3& coords) : coords_(coords) {
    std::size_t k = 0;
    while (k < 3 && coords_[k].is_zero()) ++k;
    if (k == 3) throw PreconditionError("projective point with all coordinates zero");
    if (!coords_[k].is_one()) {
        const GaussianRational inv = coords_[k].inverse();
        for (auto& c : coords_) c *= inv;
    }
}

ProjPoint ProjPoint::conj() const {
    return ProjPoint(coords_[0].conj(), coords_[1].conj(), coords_[2].conj());
}

bool ProjPoint::is_real() const {
    return coords_[0].is_real() && coords_[1].is_real() && coords_[2].is_real();
}

std::strong_ordering operator<=>(const ProjPoint& x, const ProjPoint& y) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (auto c = lex_compare(x.coords_[i], y.coords_[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string ProjPoint::to_string() const {
    return "[" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() + "]";
}

GaussianRational dot(const Point3& x, const Point3& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

Point3 cross(const Point3& x, const Point3& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

bool is_zero(const Point3& x) {
    return x[0].is_zero() && x[1].is_zero() && x[2].is_zero();
}

FlagPoint::FlagPoint(ProjPoint p, ProjPoint l) : p_(std::move(p)), l_(std::move(l)) {
    if (!dot(p_.coords(), l_.coords()).is_zero()) {
        throw PreconditionError("flag point requires p.l = 0, got " + p_.to_string() + " and " + l_.to_string());
    }
}

Conic::Conic(ProjPoint q, ProjPoint m)
    : q_(std::move(q)), m_(std::move(m)), smooth_(!dot(q_.coords(), m_.coords()).is_zero()) {}

std::strong_ordering operator<=>(const Conic& x, const Conic& y) {
    if (auto c = x.q_ <=> y.q_; c != 0) return c;
    return x.m_ <=> y.m_;
}

std::string Conic::to_string() const {
    return "L{q=" + q_.to_string() + ", m=" + m_.to_string() + "}";
}

FlagCurve::FlagCurve(BinaryFormTriple p_forms, BinaryFormTriple l_forms)
    : p_forms_(std::move(p_forms)), l_forms_(std::move(l_forms)) {
    common_degree(p_forms_);
    common_degree(l_forms_);
    if (triple_is_zero(p_forms_) || triple_is_zero(l_forms_)) {
        throw PreconditionError("flag curve with an identically zero triple");
    }
    if (!pair(p_forms_, l_forms_).is_zero()) {
        throw PreconditionError("flag curve does not lie on the incidence variety");
    }
}

FlagPoint FlagCurve::at(const GaussianRational& s, const GaussianRational& t) const {
    Point3 p, l;
    for (std::size_t i = 0; i < 3; ++i) {
        p[i] = p_forms_[i].eval(s, t);
        l[i] = l_forms_[i].eval(s, t);
    }
    if (is_zero(p) || is_zero(l)) throw DomainError("flag curve evaluated at a base point");
    return FlagPoint(ProjPoint(p), ProjPoint(l));
}

FlagCurve conic_param(const Conic& conic) {
    if (!conic.smooth()) {
        throw DegenerateConicError("conic " + conic.to_string() + " is degenerate (q.m = 0)");
    }
    const Point3& m = conic.m().coords();
    const std::size_t k = detail::first_nonzero(m);
    const auto lin = detail::conic_param_with_pivot(conic.q().coords(), m, k);
    BinaryFormTriple p_forms, l_forms;
    for (std::size_t c = 0; c < 3; ++c) {
        p_forms[c] = BinaryForm(lin.p[c]);
        l_forms[c] = BinaryForm(lin.l[c]);
    }
    return FlagCurve(std::move(p_forms), std::move(l_forms));
}

Conic twistor_fiber_of(const ProjPoint& q) {
    return Conic(q, q.conj());
}

Conic j_conic(const Conic& conic) {
    return Conic(conic.m().conj(), conic.q().conj());
}

BiForm j_pullback(const BiForm& form) {
    return form.swap_and_conjugate();
}

bool is_j_invariant(const BiForm& form) {
    if (form.a() != form.b()) {
        throw PreconditionError("j-invariance needs bidegree (a,a), got (" + std::to_string(form.a()) + "," +
                                std::to_string(form.b()) + ")");
    }
    // j preserves the incidence ideal and the set of standard monomials, so
    // comparing normal forms compares the surfaces on F.
    const BiForm reduced = form.reduce_mod_incidence();
    return proportional(reduced, j_pullback(reduced));
}

BinaryForm restrict_to_conic(const BiForm& form, const Conic& conic) {
    const FlagCurve param = conic_param(conic);
    return form.substitute(param.p_forms(), param.l_forms());
}

bool contains_conic(const BiForm& form, const Conic& conic) {
    return restrict_to_conic(form, conic).is_zero();
}

bool conics_disjoint(const Conic& c1, const Conic& c2) {
    if (c1 == c2) throw PreconditionError("conics_disjoint called on identical conics");
    // Common points satisfy p.m1 = p.m2 = 0 and q1.l = q2.l = 0. If m1 ~ m2
    // the p-solutions form a line and p.l = 0 always has a solution on it;
    // likewise for q1 ~ q2. Otherwise p and l are unique and meet iff p.l = 0.
    const Point3 p = cross(c1.m().coords(), c2.m().coords());
    const Point3 l = cross(c1.q().coords(), c2.q().coords());
    if (is_zero(p) || is_zero(l)) return false;
    return !dot(p, l).is_zero();
}

std::pair<unsigned, unsigned> curve_bidegree(const FlagCurve& curve, std::uint64_t seed) {
    const BinaryFormTriple p = remove_common_factor(curve.p_forms());
    const BinaryFormTriple l = remove_common_factor(curve.l_forms());
    const unsigned dp = common_degree(p);
    const unsigned dl = common_degree(l);
    if (dp == 0 && dl == 0) throw PreconditionError("flag curve is constant on both sides");

    Rng rng(seed);
    // Each draw pairs the reduced triple with a random hyperplane; a draw
    // whose pairing vanishes identically is discarded as non-generic.
    auto vote = [&rng](const BinaryFormTriple& forms) -> unsigned {
        std::map<unsigned, int> tally;
        for (int draw = 0; draw < 3; ++draw) {
            const std::array<GaussianRational, 3> h{rng.small_integer(1000), rng.small_integer(1000),
                                                    rng.small_integer(1000)};
            const BinaryForm paired = pair(forms, h);
            if (!paired.is_zero()) ++tally[paired.degree()];
        }
        for (const auto& [degree, count] : tally) {
            if (count >= 2) return degree;
        }
        throw InternalError("curve_bidegree: no majority among random hyperplane sections");
    };
    return {vote(p), vote(l)};
}

}  // namespace flagcalc
