#include "flagcalc/random.hpp"

#include "flagcalc/errors.hpp"

#include <limits>

namespace flagcalc {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw PreconditionError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1U;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    // rem = 2^64 mod span; accept r <= max - rem so every residue is equally likely.
    const std::uint64_t rem = (max % span + 1U) % span;
    std::uint64_t r = next();
    while (r > max - rem) r = next();
    return lo + static_cast<std::int64_t>(r % span);
}

mpq_class Rng::rational(std::int64_t height) {
    const std::int64_t num = uniform_int(-height, height);
    const std::int64_t den = uniform_int(1, height);
    mpq_class q(static_cast<long>(num), static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
}

GaussianRational Rng::small_integer(std::int64_t height) {
    return GaussianRational(static_cast<long>(uniform_int(-height, height)));
}

GaussianRational Rng::gaussian_integer(std::int64_t height) {
    const long re = static_cast<long>(uniform_int(-height, height));
    const long im = static_cast<long>(uniform_int(-height, height));
    return {mpq_class(re), mpq_class(im)};
}

}  // namespace flagcalc
