#include <doctest.h>

#include "ecrse/rsa.hpp"

using ecrse::Natural;
using ecrse::RsaKeyPair;

TEST_SUITE("rsa") {

TEST_CASE("from_primes(23, 43) derives the worked key") {
    RsaKeyPair key = RsaKeyPair::from_primes(23, 43);
    CHECK(key.n == 989);
    CHECK(key.phi() == 924);
    CHECK(key.e == 5);  // 65537 exceeds phi, so the ascending scan picks 5
    CHECK(key.d == 185);
    CHECK(key.public_key().n == 989);
    CHECK(key.public_key().e == 5);
}

TEST_CASE("from_primes honors an explicit exponent") {
    RsaKeyPair key = RsaKeyPair::from_primes(23, 43, 5);
    CHECK(key.d == 185);
    CHECK(key.e * key.d % key.phi() == 1);
    CHECK_THROWS_AS(RsaKeyPair::from_primes(23, 43, 7), ecrse::NotCoprime);  // 7 | 924
    CHECK_THROWS_AS(RsaKeyPair::from_primes(23, 43, 1), ecrse::MalformedInput);
    CHECK_THROWS_AS(RsaKeyPair::from_primes(23, 43, 924), ecrse::MalformedInput);
}

TEST_CASE("from_primes rejects bad factor pairs") {
    CHECK_THROWS_AS(RsaKeyPair::from_primes(23, 23), ecrse::MalformedInput);
    CHECK_THROWS_AS(RsaKeyPair::from_primes(24, 43), ecrse::MalformedInput);
    CHECK_THROWS_AS(RsaKeyPair::from_primes(23, 1), ecrse::MalformedInput);
}

TEST_CASE("encrypt and decrypt reproduce the worked example") {
    RsaKeyPair key = RsaKeyPair::from_primes(23, 43);
    CHECK(ecrse::rsa_encrypt(key.public_key(), 439) == 354);
    CHECK(ecrse::rsa_decrypt(key, 354) == 439);
    CHECK(ecrse::rsa_encrypt(key.public_key(), 1) == 1);
    CHECK(ecrse::rsa_decrypt(key, 0) == 0);
}

TEST_CASE("range guards") {
    RsaKeyPair key = RsaKeyPair::from_primes(23, 43);
    CHECK_THROWS_AS(ecrse::rsa_encrypt(key.public_key(), 989), ecrse::MessageTooLarge);
    CHECK_THROWS_AS(ecrse::rsa_decrypt(key, 989), ecrse::CiphertextTooLarge);
}

TEST_CASE("roundtrip is exhaustive for n = 989, shared factors included") {
    RsaKeyPair key = RsaKeyPair::from_primes(23, 43);
    for (Natural m = 0; m < 989; ++m) {
        CAPTURE(m);
        REQUIRE(ecrse::rsa_decrypt(key, ecrse::rsa_encrypt(key.public_key(), m)) == m);
    }
}

TEST_CASE("the key also works in the signature direction") {
    RsaKeyPair key = RsaKeyPair::from_primes(23, 43);
    ecrse::SeededRng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Natural m = rng.below(989);
        REQUIRE(ecrse::mod_pow(ecrse::mod_pow(m, key.d, key.n), key.e, key.n) == m);
    }
}

TEST_CASE("keygen produces well-formed keys at several sizes") {
    ecrse::SeededRng rng(32);
    for (unsigned bits : {8u, 16u, 32u, 48u}) {
        RsaKeyPair key = ecrse::rsa_keygen(bits, rng);
        CAPTURE(bits);
        std::size_t modulus_bits = mpz_sizeinbase(key.n.get_mpz_t(), 2);
        REQUIRE(modulus_bits >= bits - 1);
        REQUIRE(modulus_bits <= bits + 1);
        REQUIRE(ecrse::is_prime(key.p_factor));
        REQUIRE(ecrse::is_prime(key.q_factor));
        REQUIRE(key.p_factor != key.q_factor);
        REQUIRE(key.p_factor * key.q_factor == key.n);
        REQUIRE(key.e * key.d % key.phi() == 1);
        REQUIRE(key.e > 1);
        REQUIRE(key.e < key.phi());
    }
}

TEST_CASE("100 seeded generations at 32 bits all factor back") {
    ecrse::SeededRng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        RsaKeyPair key = ecrse::rsa_keygen(32, rng);
        REQUIRE(key.p_factor * key.q_factor == key.n);
        REQUIRE(key.e * key.d % key.phi() == 1);
    }
}

TEST_CASE("keygen is deterministic per seed and guards tiny sizes") {
    ecrse::SeededRng a(34);
    ecrse::SeededRng b(34);
    RsaKeyPair first = ecrse::rsa_keygen(32, a);
    RsaKeyPair second = ecrse::rsa_keygen(32, b);
    CHECK(first.n == second.n);
    CHECK(first.e == second.e);
    CHECK(first.d == second.d);
    ecrse::SeededRng c(35);
    CHECK_THROWS_AS(ecrse::rsa_keygen(7, c), ecrse::MalformedInput);
}

TEST_CASE("large keys prefer the standard exponent") {
    ecrse::SeededRng rng(36);
    RsaKeyPair key = ecrse::rsa_keygen(48, rng);
    // phi > 65537 essentially always at this size; coprimality decides
    if (ecrse::gcd(65537, key.phi()) == 1) CHECK(key.e == 65537);
}

}  // TEST_SUITE
