#pragma once

#include "flagcalc/gaussian_rational.hpp"

#include <cstdint>
#include <random>

namespace flagcalc {

/// Seeded generator with a platform-independent output stream.
///
/// The engine is std::mt19937_64 seeded with the 64-bit seed as-is; its
/// output sequence is fixed by the C++ standard. Bounded integers are drawn
/// by rejection sampling (`uniform_int`) rather than through
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
/// Every seeded fixture in this project goes through this class, so another
/// implementation reproduces them by following these two rules.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi]; draws r = next() until
    /// r < 2^64 - (2^64 mod span) and returns lo + r mod span.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// num/den with num uniform in [-height, height] and den in [1, height].
    mpq_class rational(std::int64_t height);

    /// Integer in [-height, height] as a Gaussian rational with zero imaginary part.
    GaussianRational small_integer(std::int64_t height);

    /// re + i*im with both parts uniform integers in [-height, height].
    GaussianRational gaussian_integer(std::int64_t height);

private:
    std::mt19937_64 engine_;
};

}  // namespace flagcalc
