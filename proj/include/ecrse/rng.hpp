#ifndef ECRSE_RNG_HPP
#define ECRSE_RNG_HPP

#include <cstdint>
#include <random>

#include "ecrse/bigmath.hpp"

namespace ecrse {

// Deterministic randomness source. Every randomized operation in the
// library takes one of these by reference, so callers own reproducibility.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform draw from [0, bound). bound must be positive.
    Natural below(const Natural& bound);

    // Uniform draw from [lo, hi] (inclusive); requires lo <= hi.
    Natural between(const Natural& lo, const Natural& hi);

private:
    std::mt19937_64 engine_;
};

// Uniform-ish random prime in [lo, hi]: draws a uniform starting point and
// scans forward (wrapping once) for the next prime. Throws
// RandomnessExhausted when the interval holds no prime.
Natural random_prime_between(SeededRng& rng, const Natural& lo, const Natural& hi);

}  // namespace ecrse

#endif
