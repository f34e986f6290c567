#ifndef ECRSE_ELGAMAL_HPP
#define ECRSE_ELGAMAL_HPP

#include <cstddef>

#include "ecrse/bigmath.hpp"
#include "ecrse/ec_group.hpp"
#include "ecrse/embedding.hpp"
#include "ecrse/rng.hpp"

namespace ecrse {

struct ElGamalCiphertext {
    ECPoint ephemeral;  // bP
    ECPoint masked;     // plaintext + b * recipient_public
};

// What the receiver publishes: curve, base point with its order, the public
// point A = secret * P, and the bare embedding modulus n. q, r, phi stay
// private.
struct HybridPublicKey {
    CurveParams curve;
    BasePointInfo base;
    ECPoint public_point;
    Natural n;
};

struct HybridKeyPair {
    CurveParams curve;
    BasePointInfo base;
    Natural secret;         // a1 in (1, order)
    ECPoint public_point;   // A = a1 * P
    RsaEmbedKey embed_key;  // receiver-held; only n is published

    HybridPublicKey public_key() const { return {curve, base, public_point, embed_key.n}; }
};

// (R, Q, e): ephemeral point R = b1*P, masked point Q = A0 + b1*A, and the
// embedding exponent the sender settled on. e travels in the clear; only a
// phi holder can turn it into d.
struct HybridCiphertext {
    ECPoint ephemeral;
    ECPoint masked;
    Natural exponent;
};

// (bP, plaintext + b * recipient_public). Throws ScalarOutOfRange unless
// 1 < b < base.order, NotOnCurve for foreign points.
ElGamalCiphertext elgamal_encrypt(const CurveParams& curve, const BasePointInfo& base,
                                  const ECPoint& recipient_public, const ECPoint& plaintext_point,
                                  const Natural& b);

// masked - secret * ephemeral.
ECPoint elgamal_decrypt(const CurveParams& curve, const Natural& secret,
                        const ElGamalCiphertext& ct);

// Embeds M behind the public modulus, then masks the embedded point with
// b1 * A. A mask of O (possible when order | b1 * a1) degrades to
// masked = A0 but still round-trips, since decryption subtracts the same O.
HybridCiphertext hybrid_encrypt(const HybridPublicKey& key, const Natural& message,
                                const Natural& b1, ExponentStrategy& exponents,
                                std::size_t max_attempts = 128);

// Same with the PublicExponents policy - the strategy a sender holding only
// n can justify.
HybridCiphertext hybrid_encrypt(const HybridPublicKey& key, const Natural& message,
                                const Natural& b1, std::size_t max_attempts = 128);

// A0 = masked - secret * ephemeral, then M = A0.x^d mod n. Throws NotOnCurve,
// NotCoprime (exponent not invertible mod phi), XOutOfRange (A0.x >= n:
// wrong key or corrupted ciphertext).
Natural hybrid_decrypt(const HybridKeyPair& key, const HybridCiphertext& ct);

// Uniform secret in (1, order) plus a fresh embedding modulus in
// (message_bound, p). The default policy only accepts moduli every
// PublicExponents sender can use safely. Throws NoSuitableModulus.
HybridKeyPair hybrid_keygen(const CurveParams& curve, const BasePointInfo& base,
                            const Natural& message_bound, SeededRng& rng,
                            ModulusPolicy policy = ModulusPolicy::PublicExponentSafe);

}  // namespace ecrse

#endif
