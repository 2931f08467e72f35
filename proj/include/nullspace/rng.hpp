#ifndef NULLSPACE_RNG_HPP
#define NULLSPACE_RNG_HPP

#include "nullspace/rational.hpp"

#include <cstdint>
#include <string_view>

namespace nullspace {

/// Deterministic splitmix64 stream. Used for every random choice in tests and
/// the audit so that a fixed seed reproduces byte-identical runs on any
/// platform (std:: distributions are not portable across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); n must be nonzero.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Inclusive integer range.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Exact rational in [-max_abs, max_abs] with denominator in [1, max_den].
    Rational rational(std::int64_t max_abs, std::int64_t max_den) {
        const std::int64_t den = range(1, max_den);
        const std::int64_t num = range(-max_abs * den, max_abs * den);
        return Rational(BigInt(num), BigInt(den));
    }

    Rational nonneg_rational(std::int64_t max, std::int64_t max_den) {
        const std::int64_t den = range(1, max_den);
        const std::int64_t num = range(0, max * den);
        return Rational(BigInt(num), BigInt(den));
    }

private:
    std::uint64_t state_;
};

/// FNV-1a over a label, mixed with a master seed: gives every audit case and
/// test section its own independent deterministic stream.
inline std::uint64_t mix_seed(std::uint64_t master, std::string_view label) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h ^ (master * 0x9e3779b97f4a7c15ull);
}

}  // namespace nullspace

#endif  // NULLSPACE_RNG_HPP
