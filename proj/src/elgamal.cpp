#include "ecrse/elgamal.hpp"

namespace ecrse {

ElGamalCiphertext elgamal_encrypt(const CurveParams& curve, const BasePointInfo& base,
                                  const ECPoint& recipient_public, const ECPoint& plaintext_point,
                                  const Natural& b) {
    if (b <= 1 || b >= base.order) throw ScalarOutOfRange();
    if (!is_on_curve(curve, plaintext_point) || !is_on_curve(curve, recipient_public))
        throw NotOnCurve();
    ECPoint shared = scalar_mul(curve, b, recipient_public);
    return {scalar_mul(curve, b, base.point), add(curve, plaintext_point, shared)};
}

ECPoint elgamal_decrypt(const CurveParams& curve, const Natural& secret,
                        const ElGamalCiphertext& ct) {
    ECPoint shared = scalar_mul(curve, secret, ct.ephemeral);
    return add(curve, ct.masked, negate(curve, shared));
}

HybridCiphertext hybrid_encrypt(const HybridPublicKey& key, const Natural& message,
                                const Natural& b1, ExponentStrategy& exponents,
                                std::size_t max_attempts) {
    if (b1 <= 1 || b1 >= key.base.order) throw ScalarOutOfRange();
    EmbeddingResult embedded =
        rsa_embed_with_modulus(key.curve, key.n, message, exponents, max_attempts);
    ECPoint mask = scalar_mul(key.curve, b1, key.public_point);
    return {scalar_mul(key.curve, b1, key.base.point), add(key.curve, embedded.point, mask),
            embedded.exponent_used};
}

HybridCiphertext hybrid_encrypt(const HybridPublicKey& key, const Natural& message,
                                const Natural& b1, std::size_t max_attempts) {
    PublicExponents exponents(key.n);
    return hybrid_encrypt(key, message, b1, exponents, max_attempts);
}

Natural hybrid_decrypt(const HybridKeyPair& key, const HybridCiphertext& ct) {
    ECPoint shared = scalar_mul(key.curve, key.secret, ct.ephemeral);
    ECPoint recovered = add(key.curve, ct.masked, negate(key.curve, shared));
    return rsa_unembed(key.embed_key, recovered, ct.exponent);
}

HybridKeyPair hybrid_keygen(const CurveParams& curve, const BasePointInfo& base,
                            const Natural& message_bound, SeededRng& rng, ModulusPolicy policy) {
    if (base.order < 3) throw MalformedInput("base point order leaves no room for secrets");
    RsaEmbedKey embed_key = generate_embed_key(message_bound, curve.p, rng, policy);
    Natural secret = rng.between(2, base.order - 1);
    return {curve, base, secret, scalar_mul(curve, secret, base.point), embed_key};
}

}  // namespace ecrse
