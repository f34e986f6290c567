#include "ecrse/rng.hpp"

namespace ecrse {

Natural SeededRng::below(const Natural& bound) {
    if (bound <= 0) throw Error("SeededRng::below requires a positive bound");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    Natural draw;
    do {
        draw = 0;
        for (std::size_t have = 0; have < bits; have += 64) {
            draw <<= 64;
            draw += Natural(engine_());
        }
        draw >>= (64 - bits % 64) % 64;  // keep exactly `bits` bits
    } while (draw >= bound);
    return draw;
}

Natural SeededRng::between(const Natural& lo, const Natural& hi) {
    if (lo > hi) throw Error("SeededRng::between requires lo <= hi");
    return lo + below(hi - lo + 1);
}

Natural random_prime_between(SeededRng& rng, const Natural& lo, const Natural& hi) {
    if (lo > hi) throw RandomnessExhausted();
    Natural start = rng.between(lo, hi);
    // forward scan from the random start, then wrap to the bottom once
    for (Natural candidate = start; candidate <= hi; ++candidate) {
        if (is_prime(candidate)) return candidate;
    }
    for (Natural candidate = lo; candidate < start; ++candidate) {
        if (is_prime(candidate)) return candidate;
    }
    throw RandomnessExhausted();
}

}  // namespace ecrse
