#include "flagcalc/errors.hpp"
#include "flagcalc/flag_geometry.hpp"
#include "flagcalc/ruled.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using flagcalc::BiForm;
using flagcalc::BinaryForm;
using flagcalc::BinaryFormTriple;
using flagcalc::Conic;
using flagcalc::ParameterPoint;
using flagcalc::ProjPoint;
using oracle::gr;

namespace {

BinaryFormTriple veronese() { return {BinaryForm{1, 0, 0}, BinaryForm{0, 1, 0}, BinaryForm{0, 0, 1}}; }

BinaryFormTriple cubic_triple() { return {BinaryForm{1, 0, 0, 0}, BinaryForm{0, 1, 1, 0}, BinaryForm{0, 0, 0, 1}}; }

BiForm p(std::size_t i) { return BiForm::p_var(i); }
BiForm l(std::size_t i) { return BiForm::l_var(i); }

const flagcalc::RuledSurfaceSpec& spec2() {
    static const auto s = flagcalc::twistor_ruled_surface(veronese());
    return s;
}

const flagcalc::RuledSurfaceSpec& spec3() {
    static const auto s = flagcalc::twistor_ruled_surface(cubic_triple());
    return s;
}

ParameterPoint random_parameter(flagcalc::Rng& rng) {
    for (;;) {
        ParameterPoint x{rng.small_integer(40), rng.small_integer(40)};
        if (!x.s.is_zero() || !x.t.is_zero()) return x;
    }
}

}  // namespace

TEST(SturmCount, KnownPolynomials) {
    EXPECT_EQ(flagcalc::count_real_roots({-2, 0, 1}), 2U);
    EXPECT_EQ(flagcalc::count_real_roots({1, 0, 1}), 0U);
    EXPECT_EQ(flagcalc::count_real_roots({-6, 11, -6, 1}), 3U);
    EXPECT_EQ(flagcalc::count_real_roots({1, 0, 1, 0, 1}), 0U);
    EXPECT_EQ(flagcalc::count_real_roots({5}), 0U);
    EXPECT_THROW(flagcalc::count_real_roots({}), flagcalc::PreconditionError);
}

TEST(ParameterSequence, DistinctProjectivePoints) {
    const auto seq = flagcalc::rational_parameter_sequence(200);
    ASSERT_EQ(seq.size(), 200U);
    std::set<std::string> seen;
    for (const auto& x : seq) {
        // Canonical representative: s/t, or infinity.
        const std::string key = x.t.is_zero() ? "inf" : (x.s / x.t).to_string();
        EXPECT_TRUE(seen.insert(key).second) << key;
    }
    EXPECT_EQ(seq[0], (ParameterPoint{0, 1}));
    EXPECT_EQ(seq[2], (ParameterPoint{1, 0}));
}

TEST(RuledSurface, VeroneseMatchesExpandedDeterminant) {
    const auto& s = spec2();
    EXPECT_EQ(s.a, 2U);
    EXPECT_EQ(s.surface.bidegree(), std::make_pair(2U, 2U));
    const BiForm m01 = p(0) * l(1) - p(1) * l(0);
    const BiForm m02 = p(0) * l(2) - p(2) * l(0);
    const BiForm m12 = p(1) * l(2) - p(2) * l(1);
    const BiForm expected = m02 * m02 - m01 * m12;
    EXPECT_TRUE(flagcalc::proportional(s.surface.reduce_mod_incidence(), expected.reduce_mod_incidence()));
    EXPECT_TRUE(s.surface.is_real());
    EXPECT_TRUE(s.j_invariant);
    EXPECT_TRUE(s.certificate.passed);
    EXPECT_EQ(s.certificate.parameters.size(), s.certificate.degree_bound + 1U);
    EXPECT_TRUE(s.birationality.birational);
    ASSERT_TRUE(s.positivity.has_value());
    EXPECT_TRUE(s.positivity->positive);
}

TEST(RuledSurface, VeroneseFiberThroughOneOne) {
    const Conic c = flagcalc::ruling_fiber(spec2(), {1, 1});
    EXPECT_EQ(c, Conic(ProjPoint(1, 1, 1), ProjPoint(1, 1, 1)));
    EXPECT_EQ(flagcalc::dot(c.q().coords(), c.m().coords()), gr(3));
    EXPECT_TRUE(flagcalc::contains_conic(spec2().surface, c));
}

TEST(RuledSurface, Preconditions) {
    EXPECT_THROW(flagcalc::twistor_ruled_surface({BinaryForm{1, 0, 0}, BinaryForm{0, 1, 0}, BinaryForm{1, 0, 0}}),
                 flagcalc::PreconditionError);
    EXPECT_THROW(flagcalc::twistor_ruled_surface({BinaryForm{1, 0}, BinaryForm{0, 1}, BinaryForm{1, 1}}),
                 flagcalc::PreconditionError);
    EXPECT_THROW(flagcalc::twistor_ruled_surface(
                     {BinaryForm{1, 0, 0}, BinaryForm{0, gr(0, 1), 0}, BinaryForm{0, 0, 1}}),
                 flagcalc::PreconditionError);
    // t -> (s^4, s^2 t^2, t^4) factors through t -> t^2.
    EXPECT_THROW(flagcalc::twistor_ruled_surface(
                     {BinaryForm{1, 0, 0, 0, 0}, BinaryForm{0, 0, 1, 0, 0}, BinaryForm{0, 0, 0, 0, 1}}),
                 flagcalc::PreconditionError);
}

TEST(RuledSurface, CubicTriple) {
    const auto& s = spec3();
    EXPECT_EQ(s.surface.bidegree(), std::make_pair(3U, 3U));
    EXPECT_TRUE(s.j_invariant);
    EXPECT_TRUE(s.certificate.passed);
    EXPECT_TRUE(s.surface.is_real());
}

TEST(TwistorSamples, FirstThree) {
    const auto samples = flagcalc::twistor_circle_samples(spec2(), 3);
    const std::set<Conic> got(samples.begin(), samples.end());
    const std::set<Conic> want{Conic(ProjPoint(0, 0, 1), ProjPoint(0, 0, 1)),
                               Conic(ProjPoint(1, 1, 1), ProjPoint(1, 1, 1)),
                               Conic(ProjPoint(1, 0, 0), ProjPoint(1, 0, 0))};
    EXPECT_EQ(got, want);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        EXPECT_EQ(flagcalc::j_conic(samples[i]), samples[i]);
        for (std::size_t j = i + 1; j < samples.size(); ++j) EXPECT_TRUE(flagcalc::conics_disjoint(samples[i], samples[j]));
    }
    EXPECT_THROW(flagcalc::twistor_circle_samples(spec2(), 0), flagcalc::PreconditionError);
}

TEST(TwistorSamples, ThirteenDistinct) {
    const auto samples = flagcalc::twistor_circle_samples(spec2(), 13);
    EXPECT_EQ(std::set<Conic>(samples.begin(), samples.end()).size(), 13U);
}

TEST(Smoothness, ProfileShape) {
    for (const auto* s : {&spec2(), &spec3()}) {
        const auto profile = flagcalc::smoothness_profile(*s, 3);
        EXPECT_EQ(profile.fibers.size(), 3U);
        bool any = false;
        for (const auto& f : profile.fibers) {
            EXPECT_TRUE(f.fiber.is_twistor_fiber());
            any = any || f.witness.has_value();
        }
        EXPECT_EQ(profile.verdict == flagcalc::SmoothnessVerdict::singular_witness_found, any);
    }
}

TEST(RuledProperty, InvariantsForGeneratedTriples) {
    flagcalc::Rng rng(801);
    int built = 0;
    for (int trial = 0; trial < 12 && built < 4; ++trial) {
        BinaryFormTriple f;
        for (auto& form : f) {
            std::vector<flagcalc::GaussianRational> c;
            for (int k = 0; k <= 2; ++k) c.push_back(rng.small_integer(3));
            form = BinaryForm(c);
        }
        flagcalc::RuledSurfaceSpec s;
        try {
            s = flagcalc::twistor_ruled_surface(f);
        } catch (const flagcalc::PreconditionError&) {
            continue;
        }
        ++built;
        for (const auto& [m, c] : s.surface.terms()) {
            EXPECT_EQ(m.p_degree(), s.a);
            EXPECT_EQ(m.l_degree(), s.a);
        }
        EXPECT_EQ(flagcalc::j_pullback(s.surface), s.surface);
        for (int k = 0; k < 5; ++k) {
            const Conic c = flagcalc::ruling_fiber(s, random_parameter(rng));
            EXPECT_TRUE(flagcalc::restrict_to_conic(s.surface, c).is_zero());
        }
    }
    EXPECT_EQ(built, 4);
}

TEST(RuledProperty, OddDegreeJPullbackIsSign) {
    // For a = 3 the sweep determinant picks up (-1)^a under j; the surface is unchanged.
    EXPECT_EQ(flagcalc::j_pullback(spec3().surface), -spec3().surface);
    EXPECT_EQ(flagcalc::j_pullback(spec2().surface), spec2().surface);
}

TEST(RuledProperty, CertificateConsistentWithRandomParameters) {
    flagcalc::Rng rng(802);
    for (const auto* s : {&spec2(), &spec3()}) {
        for (int k = 0; k < 5; ++k) {
            const auto x = random_parameter(rng);
            EXPECT_TRUE(flagcalc::fiber_contained_uniform(*s, x));
            EXPECT_TRUE(flagcalc::contains_conic(s->surface, flagcalc::ruling_fiber(*s, x)));
        }
    }
}

TEST(RuledProperty, SampledFibersPairwiseDisjoint) {
    const auto samples = flagcalc::twistor_circle_samples(spec3(), 20);
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j) EXPECT_TRUE(flagcalc::conics_disjoint(samples[i], samples[j]));
}

TEST(RuledProperty, NonzeroOffTheSamples) {
    flagcalc::Rng rng(803);
    const auto samples = flagcalc::twistor_circle_samples(spec2(), 10);
    int nonzero = 0;
    for (int k = 0; k < 10; ++k) {
        const auto [pt, ln] = oracle::random_flag_point(rng);
        bool on_sample = false;
        for (const auto& c : samples)
            on_sample = on_sample || (flagcalc::dot(pt, c.m().coords()).is_zero() && flagcalc::dot(c.q().coords(), ln).is_zero());
        if (!on_sample && !spec2().surface.eval(pt, ln).is_zero()) ++nonzero;
    }
    EXPECT_EQ(nonzero, 10);
}
