#include "flagcalc/ruled.hpp"

#include "flagcalc/detail/substitution.hpp"
#include "flagcalc/determinant.hpp"
#include "flagcalc/errors.hpp"
#include "flagcalc/random.hpp"

#include <numeric>

namespace flagcalc {

namespace {

using RealPoly = std::vector<mpq_class>;

void trim(RealPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RealPoly derivative(const RealPoly& p) {
    RealPoly out;
    for (std::size_t j = 1; j < p.size(); ++j) out.push_back(p[j] * static_cast<long>(j));
    trim(out);
    return out;
}

RealPoly remainder(RealPoly a, const RealPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const mpq_class factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Sign of p at +inf (sign of leading coefficient) or -inf.
int sign_at_infinity(const RealPoly& p, bool positive) {
    const int lead = sgn(p.back());
    const bool odd = (p.size() - 1) % 2 == 1;
    return (positive || !odd) ? lead : -lead;
}

Point3 evaluate(const BinaryFormTriple& f, const ParameterPoint& x) {
    return {f[0].eval(x.s, x.t), f[1].eval(x.s, x.t), f[2].eval(x.s, x.t)};
}

// Coefficient k of p.f as a bidegree-(1,0) form, or of l.f as (0,1).
BiForm linear_coefficient(const BinaryFormTriple& f, std::size_t k, bool in_p) {
    BiForm out = in_p ? BiForm(1, 0) : BiForm(0, 1);
    for (std::size_t i = 0; i < 3; ++i) {
        if (f[i][k].is_zero()) continue;
        out = out + (in_p ? BiForm::p_var(i) : BiForm::l_var(i)).scaled(f[i][k]);
    }
    return out;
}

BiForm sweep_resultant(const BinaryFormTriple& f, unsigned a) {
    const unsigned n = 2 * a;
    DenseMatrix<BiForm> sylvester(n, std::vector<BiForm>(n));
    for (unsigned r = 0; r < a; ++r) {
        for (unsigned k = 0; k <= a; ++k) {
            sylvester[r][r + k] = linear_coefficient(f, k, true);
            sylvester[a + r][r + k] = linear_coefficient(f, k, false);
        }
    }
    return laplace_determinant(sylvester, BiForm(0, 0), BiForm::constant(1));
}

bool fiber_contained_with_pivot(const BiForm& surface, const BinaryFormTriple& f, std::size_t pivot,
                                const ParameterPoint& x) {
    const Point3 q = evaluate(f, x);
    const auto param = detail::conic_param_with_pivot(q, q, pivot);
    return BinaryForm(detail::substitute<GaussianRational>(surface.terms(), surface.a(), surface.b(), param.p, param.l))
        .is_zero();
}

BirationalityCheck check_birational(const BinaryFormTriple& f, Rng& rng) {
    BirationalityCheck out;
    unsigned multiple = 0;
    for (std::size_t trial = 0; trial < 3; ++trial) {
        Point3 image{};
        ParameterPoint x{};
        do {
            x = {GaussianRational(rng.rational(1000)), GaussianRational(rng.rational(1000))};
            if (x.s.is_zero() && x.t.is_zero()) continue;
            image = evaluate(f, x);
        } while (is_zero(image));
        // Preimages of f(x): common roots of f(s,t) x image.
        const BinaryFormTriple constant{BinaryForm::constant(image[0]), BinaryForm::constant(image[1]),
                                        BinaryForm::constant(image[2])};
        const BinaryFormTriple c = cross(f, constant);
        out.preimage_counts[trial] = gcd(c).degree();
        if (out.preimage_counts[trial] > 1) ++multiple;
    }
    out.birational = multiple < 2;
    return out;
}

PositivityCheck check_positivity(const BinaryFormTriple& f, unsigned a) {
    PositivityCheck out;
    RealPoly sum(2 * a + 1);
    for (const auto& form : f) {
        // form(x,1) = sum_k c_k x^(a-k)
        RealPoly g(a + 1);
        for (unsigned k = 0; k <= a; ++k) g[a - k] = form[k].re();
        for (unsigned i = 0; i <= a; ++i) {
            for (unsigned j = 0; j <= a; ++j) sum[i + j] += g[i] * g[j];
        }
    }
    out.real_roots_affine = count_real_roots(sum);
    mpq_class at_infinity = 0;
    for (const auto& form : f) at_infinity += form[0].re() * form[0].re();
    out.vanishes_at_infinity = sgn(at_infinity) == 0;
    out.positive = out.real_roots_affine == 0 && !out.vanishes_at_infinity;
    return out;
}

}  // namespace

std::vector<ParameterPoint> rational_parameter_sequence(std::size_t count) {
    std::vector<ParameterPoint> out;
    auto push = [&](long num, long den) {
        if (out.size() < count) out.push_back({GaussianRational(num), GaussianRational(den)});
    };
    push(0, 1);
    push(1, 1);
    push(1, 0);
    push(-1, 1);
    for (long h = 2; out.size() < count; ++h) {
        // Every reduced p/q with max(|p|, q) = h: first p = +-h over q < h,
        // then q = h over p < h.
        for (long q = 1; q < h; ++q) {
            if (std::gcd(h, q) != 1) continue;
            push(h, q);
            push(-h, q);
        }
        for (long p = 1; p < h; ++p) {
            if (std::gcd(p, h) != 1) continue;
            push(p, h);
            push(-p, h);
        }
    }
    return out;
}

unsigned count_real_roots(RealPoly poly) {
    trim(poly);
    if (poly.empty()) throw PreconditionError("count_real_roots: zero polynomial");
    if (poly.size() == 1) return 0;
    std::vector<RealPoly> chain{poly, derivative(poly)};
    for (;;) {
        RealPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool positive) {
        unsigned changes = 0;
        int last = 0;
        for (const auto& p : chain) {
            const int s = sign_at_infinity(p, positive);
            if (s != 0 && last != 0 && s != last) ++changes;
            if (s != 0) last = s;
        }
        return changes;
    };
    return variations(false) - variations(true);
}

RuledSurfaceSpec twistor_ruled_surface(const BinaryFormTriple& forms, const RuledSurfaceOptions& options) {
    const unsigned a = common_degree(forms);
    if (a < 2) throw PreconditionError("ruled surface needs forms of degree a >= 2");
    for (const auto& f : forms) {
        if (!f.is_real()) throw PreconditionError("ruled surface needs real coefficients");
    }
    const BinaryForm common = gcd(forms);
    if (common.degree() > 0) {
        throw PreconditionError("forms share the common factor " + common.to_string());
    }

    RuledSurfaceSpec spec;
    spec.forms = forms;
    spec.a = a;

    Rng rng(options.seed);
    spec.birationality = check_birational(forms, rng);
    if (!spec.birationality.birational) {
        throw PreconditionError("the map defined by the forms is not birational onto its image");
    }
    if (options.check_positivity) {
        spec.positivity = check_positivity(forms, a);
        if (!spec.positivity->positive) {
            throw InternalError("f.f vanishes at a real parameter although the forms are real and coprime");
        }
    }

    spec.surface = sweep_resultant(forms, a);
    if (spec.surface.is_zero() || spec.surface.reduce_mod_incidence().is_zero()) {
        throw PreconditionError("the sweep resultant vanishes identically on the flag threefold");
    }
    if (spec.surface.bidegree() != std::pair{a, a}) throw InternalError("sweep resultant has the wrong bidegree");
    spec.j_invariant = is_j_invariant(spec.surface);

    // Each coefficient of the restriction is a form in (s,t) of degree
    // a*deg(p) + a*deg(l), where p is linear in f (degree a) and l = q x p
    // has degree 2a. Vanishing at bound + 1 points proves it is zero.
    auto& cert = spec.certificate;
    cert.pivot = 0;
    while (forms[cert.pivot].is_zero()) ++cert.pivot;
    const unsigned deg_p = a;
    const unsigned deg_l = 2 * a;
    cert.degree_bound = spec.surface.a() * deg_p + spec.surface.b() * deg_l;
    cert.parameters = rational_parameter_sequence(cert.degree_bound + 1);
    cert.passed = true;
    for (const auto& x : cert.parameters) {
        if (!fiber_contained_with_pivot(spec.surface, forms, cert.pivot, x)) {
            cert.passed = false;
            break;
        }
    }
    if (!cert.passed) throw InternalError("containment certificate failed for the sweep resultant");
    for (const auto& x : cert.parameters) spec.witness_params.emplace_back(x, ruling_fiber(spec, x));
    return spec;
}

Conic ruling_fiber(const RuledSurfaceSpec& spec, const ParameterPoint& x) {
    return twistor_fiber_of(ProjPoint(evaluate(spec.forms, x)));
}

std::vector<Conic> twistor_circle_samples(const RuledSurfaceSpec& spec, std::size_t n) {
    if (n == 0) throw PreconditionError("twistor_circle_samples needs n >= 1");
    std::vector<Conic> out;
    for (const auto& x : rational_parameter_sequence(n)) out.push_back(ruling_fiber(spec, x));
    return out;
}

bool fiber_contained_uniform(const RuledSurfaceSpec& spec, const ParameterPoint& x) {
    return fiber_contained_with_pivot(spec.surface, spec.forms, spec.certificate.pivot, x);
}

SmoothnessProfile smoothness_profile(const RuledSurfaceSpec& spec, std::size_t samples) {
    SmoothnessProfile profile;
    for (const auto& x : rational_parameter_sequence(samples)) {
        FiberSingularity entry{x, ruling_fiber(spec, x), std::nullopt};
        entry.witness = conic_singularity_witness(spec.surface, entry.fiber);
        if (entry.witness) profile.verdict = SmoothnessVerdict::singular_witness_found;
        profile.fibers.push_back(std::move(entry));
    }
    return profile;
}

}  // namespace flagcalc
