#include "ecrse/rsa.hpp"

namespace ecrse {

namespace {

// smallest usable exponent, preferring 65537 when it fits under phi
Natural choose_public_exponent(const Natural& phi) {
    if (phi > 65537 && gcd(65537, phi) == 1) return 65537;
    for (Natural e = 3; e < phi; ++e)
        if (gcd(e, phi) == 1) return e;
    throw MalformedInput("no public exponent exists below phi");
}

}  // namespace

RsaKeyPair RsaKeyPair::from_primes(const Natural& p_factor, const Natural& q_factor) {
    if (!is_prime(p_factor) || !is_prime(q_factor))
        throw MalformedInput("modulus factors must be prime");
    if (p_factor == q_factor) throw MalformedInput("modulus factors must be distinct");
    Natural phi = (p_factor - 1) * (q_factor - 1);
    Natural e = choose_public_exponent(phi);
    return {p_factor * q_factor, e, mod_inverse(e, phi), p_factor, q_factor};
}

RsaKeyPair RsaKeyPair::from_primes(const Natural& p_factor, const Natural& q_factor,
                                   const Natural& e) {
    if (!is_prime(p_factor) || !is_prime(q_factor))
        throw MalformedInput("modulus factors must be prime");
    if (p_factor == q_factor) throw MalformedInput("modulus factors must be distinct");
    Natural phi = (p_factor - 1) * (q_factor - 1);
    if (e <= 1 || e >= phi) throw MalformedInput("public exponent must lie in (1, phi)");
    return {p_factor * q_factor, e, mod_inverse(e, phi), p_factor, q_factor};
}

RsaKeyPair rsa_keygen(unsigned bits, SeededRng& rng) {
    if (bits < 8) throw MalformedInput("modulus size must be at least 8 bits");
    unsigned high = (bits + 1) / 2;
    unsigned low = bits - high;
    Natural p_factor =
        random_prime_between(rng, Natural(1) << (high - 1), (Natural(1) << high) - 1);
    Natural q_factor;
    do {
        q_factor = random_prime_between(rng, Natural(1) << (low - 1), (Natural(1) << low) - 1);
    } while (q_factor == p_factor);
    return RsaKeyPair::from_primes(p_factor, q_factor);
}

Natural rsa_encrypt(const RsaPublicKey& key, const Natural& message) {
    if (message >= key.n) throw MessageTooLarge();
    return mod_pow(message, key.e, key.n);
}

Natural rsa_decrypt(const RsaKeyPair& key, const Natural& ciphertext) {
    if (ciphertext >= key.n) throw CiphertextTooLarge();
    return mod_pow(ciphertext, key.d, key.n);
}

}  // namespace ecrse
