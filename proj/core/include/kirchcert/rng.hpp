#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "kirchcert/rational.hpp"

namespace kirchcert {

// Deterministic sampling for probabilistic identity testing.  mt19937_64 is
// pinned down bit-for-bit by the C++ standard, and the integer fold below is
// our own, so a report carrying a seed reproduces exactly on any platform.
// (std::uniform_int_distribution is implementation-defined and must not be
// used here.)
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [1, upper]; rejection sampling, no modulo bias.
    std::uint64_t uniform_positive(std::uint64_t upper) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t cutoff = max - max % upper;
        for (;;) {
            const std::uint64_t raw = engine_();
            if (raw < cutoff) return raw % upper + 1;
        }
    }

    // Integer coordinates uniform in [1, coordinate_max]^n.
    std::vector<Rational> integer_point(int n, std::uint64_t coordinate_max) {
        std::vector<Rational> coords;
        coords.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            coords.emplace_back(mpz_class(uniform_positive(coordinate_max)));
        return coords;
    }

    // num/den with numerator and denominator each uniform in [1, bound].
    Rational positive_rational(std::uint64_t bound) {
        const mpz_class num(uniform_positive(bound));
        const mpz_class den(uniform_positive(bound));
        return Rational(num, den);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace kirchcert
