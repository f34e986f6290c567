#ifndef ECRSE_BIGMATH_HPP
#define ECRSE_BIGMATH_HPP

#include <gmpxx.h>

#include <utility>

#include "ecrse/errors.hpp"

namespace ecrse {

// Arbitrary-precision non-negative integer. All protocol scalars, moduli,
// coordinates and exponents in this library are Naturals.
using Natural = mpz_class;

// base^exp mod modulus. Throws ZeroModulus for modulus < 2.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus);

// The d with a*d = 1 (mod modulus), 0 < d < modulus, via the extended
// Euclidean algorithm. Throws NotCoprime when gcd(a, modulus) != 1.
Natural mod_inverse(const Natural& a, const Natural& modulus);

// Greatest common divisor; gcd(0, 0) = 0.
Natural gcd(const Natural& a, const Natural& b);

// Miller-Rabin primality verdict. Uses a fixed witness set for n < 2^64
// (deterministic there) and `rounds` pseudo-random witnesses above.
bool is_prime(const Natural& n, int rounds = 40);

// Euler's criterion: a^((p-1)/2) = 1 (mod p) for an odd prime p.
// 0 is treated as a nonresidue so callers get a strict "two distinct
// square roots exist" test. Throws EvenModulus for p = 2.
bool is_quadratic_residue(const Natural& a, const Natural& p);

// Both square roots of a mod an odd prime p, smaller root first.
// a = 0 yields (0, 0). Tonelli-Shanks, so p = 1 (mod 4) is fine.
// Throws NonResidue when no root exists.
std::pair<Natural, Natural> mod_sqrt(const Natural& a, const Natural& p);

}  // namespace ecrse

#endif
