#ifndef ECRSE_RSA_HPP
#define ECRSE_RSA_HPP

#include "ecrse/bigmath.hpp"
#include "ecrse/rng.hpp"

namespace ecrse {

struct RsaPublicKey {
    Natural n;
    Natural e;
};

// n = p_factor * q_factor; the factors stay in the key so phi and d remain
// derivable.
struct RsaKeyPair {
    Natural n;
    Natural e;
    Natural d;
    Natural p_factor;
    Natural q_factor;

    // Derives everything from two distinct primes. The two-argument form
    // picks e itself: 65537 when that fits below phi and is coprime to it,
    // otherwise the smallest workable exponent from 3 up.
    static RsaKeyPair from_primes(const Natural& p_factor, const Natural& q_factor);
    static RsaKeyPair from_primes(const Natural& p_factor, const Natural& q_factor,
                                  const Natural& e);

    Natural phi() const { return (p_factor - 1) * (q_factor - 1); }
    RsaPublicKey public_key() const { return {n, e}; }
};

// Draws two distinct random primes sized so the modulus lands within one
// bit of the request. Throws RandomnessExhausted if a prime range is empty.
RsaKeyPair rsa_keygen(unsigned bits, SeededRng& rng);

// C = M^e (mod n). Throws MessageTooLarge for M >= n.
Natural rsa_encrypt(const RsaPublicKey& key, const Natural& message);

// M = C^d (mod n). Throws CiphertextTooLarge for C >= n.
Natural rsa_decrypt(const RsaKeyPair& key, const Natural& ciphertext);

}  // namespace ecrse

#endif
