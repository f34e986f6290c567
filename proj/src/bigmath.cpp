#include "ecrse/bigmath.hpp"

#include <array>
#include <cstdint>

#include "ecrse/rng.hpp"

namespace ecrse {

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus) {
    if (modulus < 2) throw ZeroModulus();
    Natural result;
    mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return result;
}

Natural mod_inverse(const Natural& a, const Natural& modulus) {
    if (modulus < 2) throw ZeroModulus();
    // Iterative extended Euclid on (modulus, a mod modulus), tracking only
    // the coefficient of a.
    Natural r0 = modulus;
    Natural r1 = a % modulus;
    Natural t0 = 0;
    Natural t1 = 1;
    while (r1 != 0) {
        Natural quotient = r0 / r1;
        Natural r2 = r0 - quotient * r1;
        r0 = r1;
        r1 = r2;
        Natural t2 = t0 - quotient * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw NotCoprime();
    if (t0 < 0) t0 += modulus;
    return t0;
}

Natural gcd(const Natural& a, const Natural& b) {
    Natural result;
    mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return result;
}

namespace {

// One Miller-Rabin round: returns false iff `witness` proves n composite.
bool passes_round(const Natural& n, const Natural& n_minus_1, const Natural& odd_part,
                  unsigned long twos, const Natural& witness) {
    Natural x = mod_pow(witness, odd_part, n);
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < twos; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
    }
    return false;
}

// Verdict is exact for every n below 2^64 with these witnesses.
constexpr std::array<unsigned long, 12> kSmallWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(const Natural& n, int rounds) {
    if (n < 2) return false;
    for (unsigned long w : kSmallWitnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    Natural n_minus_1 = n - 1;
    Natural odd_part = n_minus_1;
    unsigned long twos = 0;
    while (mpz_even_p(odd_part.get_mpz_t())) {
        odd_part >>= 1;
        ++twos;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        for (unsigned long w : kSmallWitnesses) {
            if (!passes_round(n, n_minus_1, odd_part, twos, Natural(w))) return false;
        }
        return true;
    }
    // Above 2^64: pseudo-random witnesses seeded from n itself, so the
    // verdict is a pure function of (n, rounds).
    SeededRng rng(0x9e3779b97f4a7c15ULL ^ mpz_get_ui(n.get_mpz_t()));
    for (int i = 0; i < rounds; ++i) {
        Natural witness = rng.between(2, n - 2);
        if (!passes_round(n, n_minus_1, odd_part, twos, witness)) return false;
    }
    return true;
}

bool is_quadratic_residue(const Natural& a, const Natural& p) {
    if (p == 2) throw EvenModulus();
    if (p < 2) throw ZeroModulus();
    Natural reduced = a % p;
    if (reduced == 0) return false;
    return mod_pow(reduced, (p - 1) / 2, p) == 1;
}

std::pair<Natural, Natural> mod_sqrt(const Natural& a, const Natural& p) {
    if (p == 2) throw EvenModulus();
    Natural value = a % p;
    if (value == 0) return {Natural(0), Natural(0)};
    if (!is_quadratic_residue(value, p)) throw NonResidue();

    Natural root;
    if (p % 4 == 3) {
        root = mod_pow(value, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks. Write p-1 = odd * 2^s, pick any nonresidue z.
        Natural odd = p - 1;
        unsigned long s = 0;
        while (mpz_even_p(odd.get_mpz_t())) {
            odd >>= 1;
            ++s;
        }
        Natural z = 2;
        while (is_quadratic_residue(z, p)) ++z;

        Natural m(s);
        Natural c = mod_pow(z, odd, p);
        Natural t = mod_pow(value, odd, p);
        root = mod_pow(value, (odd + 1) / 2, p);
        while (t != 1) {
            // least i with t^(2^i) = 1, always < m
            Natural i = 0;
            Natural probe = t;
            while (probe != 1) {
                probe = (probe * probe) % p;
                ++i;
            }
            Natural b = c;
            for (Natural j = i + 1; j < m; ++j) b = (b * b) % p;
            m = i;
            c = (b * b) % p;
            t = (t * c) % p;
            root = (root * b) % p;
        }
    }
    Natural other = p - root;
    if (root > other) std::swap(root, other);
    return {root, other};
}

}  // namespace ecrse
