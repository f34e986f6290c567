#include "ecrse/embedding.hpp"

#include <array>
#include <utility>

namespace ecrse {

namespace {

// the 64 odd primes up to kPublicExponentCeiling
constexpr std::array<unsigned, 64> kSmallOddPrimes = {
    3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,
    61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137,
    139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227,
    229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313};

static_assert(kSmallOddPrimes.back() == kPublicExponentCeiling);

Natural curve_rhs(const CurveParams& curve, const Natural& x) {
    return (x * x % curve.p * x + curve.a * x + curve.b) % curve.p;
}

// phi == nullptr means the caller cannot vet exponents (sender side)
EmbeddingResult embed_core(const CurveParams& curve, const Natural& n, const Natural& message,
                           ExponentStrategy& exponents, std::size_t max_attempts,
                           const Natural* phi) {
    if (message < 2) throw DegenerateMessage();
    if (message >= n) throw MessageTooLarge();
    if (n >= curve.p) throw ModulusTooLarge();

    std::size_t attempts = 0;
    while (attempts < max_attempts) {
        std::optional<Natural> e = exponents.next();
        if (!e) break;
        if (phi && (*e <= 1 || *e >= *phi || gcd(*e, *phi) != 1)) continue;
        ++attempts;
        Natural x = mod_pow(message, *e, n);
        Natural rhs = curve_rhs(curve, x);
        if (!is_quadratic_residue(rhs, curve.p)) continue;
        return {{x, mod_sqrt(rhs, curve.p).first, false}, *e, attempts};
    }
    throw NoEmbeddingFound();
}

bool public_exponent_safe(const Natural& phi) {
    if (phi <= kPublicExponentCeiling) return false;
    for (unsigned l : kSmallOddPrimes)
        if (phi % l == 0) return false;
    return true;
}

}  // namespace

RsaEmbedKey RsaEmbedKey::from_primes(const Natural& q, const Natural& r) {
    if (!is_prime(q) || !is_prime(r)) throw MalformedInput("modulus factors must be prime");
    if (q == r) throw MalformedInput("modulus factors must be distinct");
    return {q, r, q * r, (q - 1) * (r - 1)};
}

AscendingCoprimeExponents::AscendingCoprimeExponents(Natural phi)
    : phi_(std::move(phi)), cursor_(2) {}

std::optional<Natural> AscendingCoprimeExponents::next() {
    for (Natural e = cursor_ + 1; e < phi_; ++e) {
        if (gcd(e, phi_) == 1) {
            cursor_ = e;
            return e;
        }
    }
    cursor_ = phi_;
    return std::nullopt;
}

SeededRandomExponents::SeededRandomExponents(Natural phi, SeededRng& rng)
    : phi_(std::move(phi)), rng_(&rng) {}

std::optional<Natural> SeededRandomExponents::next() {
    if (phi_ < 3) return std::nullopt;
    // coprime density never drops low enough for this bound to matter
    for (int tries = 0; tries < 4096; ++tries) {
        Natural e = rng_->between(2, phi_ - 1);
        if (gcd(e, phi_) == 1) return e;
    }
    return std::nullopt;
}

PublicExponents::PublicExponents(const Natural& n) : n_(n) {}

std::optional<Natural> PublicExponents::next() {
    while (index_ < kSmallOddPrimes.size()) {
        unsigned e = kSmallOddPrimes[index_++];
        if (n_ % e != 0) return Natural(e);
    }
    return std::nullopt;
}

EmbeddingResult rsa_embed(const CurveParams& curve, const RsaEmbedKey& key, const Natural& message,
                          ExponentStrategy& exponents, std::size_t max_attempts) {
    return embed_core(curve, key.n, message, exponents, max_attempts, &key.phi);
}

EmbeddingResult rsa_embed(const CurveParams& curve, const RsaEmbedKey& key, const Natural& message,
                          std::size_t max_attempts) {
    AscendingCoprimeExponents exponents(key.phi);
    return embed_core(curve, key.n, message, exponents, max_attempts, &key.phi);
}

EmbeddingResult rsa_embed_with_modulus(const CurveParams& curve, const Natural& n,
                                       const Natural& message, ExponentStrategy& exponents,
                                       std::size_t max_attempts) {
    return embed_core(curve, n, message, exponents, max_attempts, nullptr);
}

Natural rsa_unembed(const RsaEmbedKey& key, const ECPoint& point, const Natural& e) {
    if (point.infinity) throw PointAtInfinity();
    if (point.x >= key.n) throw XOutOfRange();
    Natural d = mod_inverse(e, key.phi);
    return mod_pow(point.x, d, key.n);
}

ECPoint koblitz_embed(const CurveParams& curve, const KoblitzParams& params,
                      const Natural& message) {
    if (params.K < 2) throw Error("expansion factor must be at least 2");
    if ((message + 1) * params.K >= curve.p) throw MessageTooLarge();
    for (Natural j = 1; j < params.K; ++j) {
        Natural x = params.K * message + j;
        Natural rhs = curve_rhs(curve, x);
        if (!is_quadratic_residue(rhs, curve.p)) continue;
        return {x, mod_sqrt(rhs, curve.p).first, false};
    }
    throw NoEmbeddingFound();
}

Natural koblitz_unembed(const KoblitzParams& params, const ECPoint& point) {
    if (params.K < 2) throw Error("expansion factor must be at least 2");
    if (point.infinity) throw PointAtInfinity();
    return point.x / params.K;
}

RsaEmbedKey generate_embed_key(const Natural& message_bound, const Natural& p, SeededRng& rng,
                               ModulusPolicy policy) {
    Natural p_minus_1 = p - 1;
    Natural q_max;
    mpz_sqrt(q_max.get_mpz_t(), p_minus_1.get_mpz_t());
    if (q_max < 3 || message_bound + 1 >= p) throw NoSuitableModulus();

    constexpr int kSearchBudget = 20000;
    for (int attempt = 0; attempt < kSearchBudget; ++attempt) {
        Natural q;
        try {
            q = random_prime_between(rng, 3, q_max);
        } catch (const RandomnessExhausted&) {
            throw NoSuitableModulus();
        }
        Natural r_lo = message_bound / q + 1;
        if (r_lo < 3) r_lo = 3;
        Natural r_hi = p_minus_1 / q;
        if (r_lo > r_hi) continue;
        Natural r;
        try {
            r = random_prime_between(rng, r_lo, r_hi);
        } catch (const RandomnessExhausted&) {
            continue;
        }
        if (r == q) continue;
        RsaEmbedKey key = RsaEmbedKey::from_primes(q, r);
        if (policy == ModulusPolicy::PublicExponentSafe && !public_exponent_safe(key.phi))
            continue;
        return key;
    }
    throw NoSuitableModulus();
}

}  // namespace ecrse
