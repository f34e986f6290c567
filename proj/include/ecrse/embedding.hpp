#ifndef ECRSE_EMBEDDING_HPP
#define ECRSE_EMBEDDING_HPP

#include <cstddef>
#include <optional>

#include "ecrse/bigmath.hpp"
#include "ecrse/ec_group.hpp"
#include "ecrse/rng.hpp"

namespace ecrse {

// Modulus material for the power-map embedding. n = q * r caps the message
// space; phi gates which exponents are invertible.
struct RsaEmbedKey {
    Natural q;
    Natural r;
    Natural n;
    Natural phi;

    static RsaEmbedKey from_primes(const Natural& q, const Natural& r);
};

struct EmbeddingResult {
    ECPoint point;
    Natural exponent_used;
    std::size_t attempts;  // exponents actually tested against the curve
};

// Supplies candidate exponents for the embed retry loop; nullopt means the
// policy has nothing left to offer.
class ExponentStrategy {
public:
    virtual ~ExponentStrategy() = default;
    virtual std::optional<Natural> next() = 0;
};

// Ascending integers from 3 coprime to phi - the deterministic default.
class AscendingCoprimeExponents : public ExponentStrategy {
public:
    explicit AscendingCoprimeExponents(Natural phi);
    std::optional<Natural> next() override;

private:
    Natural phi_;
    Natural cursor_;
};

// Uniform draws from (1, phi) coprime to phi, for statistical experiments.
class SeededRandomExponents : public ExponentStrategy {
public:
    SeededRandomExponents(Natural phi, SeededRng& rng);
    std::optional<Natural> next() override;

private:
    Natural phi_;
    SeededRng* rng_;
};

// Largest exponent a sender may try without knowing phi; see PublicExponents.
inline constexpr unsigned kPublicExponentCeiling = 313;

// Exponents justifiable with only the public modulus n: ascending odd primes
// through kPublicExponentCeiling that do not divide n. Invertibility is the
// receiver's job - moduli from ModulusPolicy::PublicExponentSafe key
// generation accept every exponent this policy can emit.
class PublicExponents : public ExponentStrategy {
public:
    explicit PublicExponents(const Natural& n);
    std::optional<Natural> next() override;

private:
    Natural n_;
    std::size_t index_ = 0;
};

struct KoblitzParams {
    Natural K;  // expansion factor, >= 2
};

// Maps M to the point (x, y) with x = M^e mod n for the first exponent whose
// x lands on the curve; y is the smaller square root. Exponents come from
// the strategy; candidates that are not invertible mod phi are skipped
// without being counted. Throws DegenerateMessage (M in {0, 1} is a fixed
// point of every power map), MessageTooLarge (M >= n), ModulusTooLarge
// (n >= p), NoEmbeddingFound (attempt budget or policy exhausted).
EmbeddingResult rsa_embed(const CurveParams& curve, const RsaEmbedKey& key, const Natural& message,
                          ExponentStrategy& exponents, std::size_t max_attempts = 128);

// Same with the default ascending-coprime policy.
EmbeddingResult rsa_embed(const CurveParams& curve, const RsaEmbedKey& key, const Natural& message,
                          std::size_t max_attempts = 128);

// Sender-side embed when only the public modulus is known. No phi filter is
// possible here, so the strategy alone must guarantee invertible exponents.
EmbeddingResult rsa_embed_with_modulus(const CurveParams& curve, const Natural& n,
                                       const Natural& message, ExponentStrategy& exponents,
                                       std::size_t max_attempts = 128);

// M = x^d mod n with d = e^-1 mod phi. Throws PointAtInfinity, XOutOfRange
// (x >= n cannot have come from this key), NotCoprime (e not invertible).
Natural rsa_unembed(const RsaEmbedKey& key, const ECPoint& point, const Natural& e);

// Classic expansion embedding: scans x = K*M + j for j = 1 .. K-1 until the
// curve side is a residue. Throws MessageTooLarge ((M+1)*K >= p) and
// NoEmbeddingFound (all K-1 candidates miss, heuristic probability 2^-(K-1)).
ECPoint koblitz_embed(const CurveParams& curve, const KoblitzParams& params,
                      const Natural& message);

// M = floor(x / K). Throws PointAtInfinity.
Natural koblitz_unembed(const KoblitzParams& params, const ECPoint& point);

enum class ModulusPolicy {
    // any semiprime in range
    Unrestricted,
    // additionally phi > kPublicExponentCeiling and phi coprime to every odd
    // prime <= the ceiling, so blind senders always pick invertible exponents
    PublicExponentSafe,
};

// Random semiprime key with message_bound < q*r < p, q != r. Throws
// NoSuitableModulus when the search budget runs out.
RsaEmbedKey generate_embed_key(const Natural& message_bound, const Natural& p, SeededRng& rng,
                               ModulusPolicy policy = ModulusPolicy::Unrestricted);

}  // namespace ecrse

#endif
