#include "flagcalc/parallel.hpp"
#include "flagcalc/random.hpp"

#include <gtest/gtest.h>

#include <array>
#include <atomic>
#include <cstdlib>
#include <stdexcept>

using flagcalc::Rng;

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, KnownFirstOutput) {
    // First output of the 64-bit Mersenne Twister for its default seed.
    Rng rng(5489);
    EXPECT_EQ(rng.next(), 14514284786278117030ULL);
}

TEST(Rng, UniformIntStaysInRange) {
    Rng rng(7);
    std::array<int, 7> hits{};
    for (int k = 0; k < 7000; ++k) {
        const auto v = rng.uniform_int(-3, 3);
        ASSERT_GE(v, -3);
        ASSERT_LE(v, 3);
        ++hits[static_cast<std::size_t>(v + 3)];
    }
    for (int h : hits) {
        EXPECT_GT(h, 800);
        EXPECT_LT(h, 1200);
    }
}

TEST(Rng, RationalHeightBound) {
    Rng rng(8);
    for (int k = 0; k < 500; ++k) {
        const mpq_class q = rng.rational(9);
        EXPECT_LE(abs(q.get_num()), 9);
        EXPECT_LE(q.get_den(), 9);
    }
}

TEST(Parallel, EveryIndexVisitedOnce) {
    std::vector<std::atomic<int>> seen(1000);
    flagcalc::parallel_for(seen.size(), [&](std::size_t i) { seen[i].fetch_add(1); });
    for (const auto& s : seen) EXPECT_EQ(s.load(), 1);
}

TEST(Parallel, PropagatesException) {
    EXPECT_THROW(flagcalc::parallel_for(50,
                                        [](std::size_t i) {
                                            if (i == 17) throw std::runtime_error("boom");
                                        }),
                 std::runtime_error);
}

TEST(Parallel, ThreadCapFromEnvironment) {
    ::setenv("FLAGCALC_THREADS", "3", 1);
    EXPECT_EQ(flagcalc::worker_count(), 3U);
    ::unsetenv("FLAGCALC_THREADS");
    EXPECT_GE(flagcalc::worker_count(), 1U);
}
