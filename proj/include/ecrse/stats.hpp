#ifndef ECRSE_STATS_HPP
#define ECRSE_STATS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "ecrse/bigmath.hpp"
#include "ecrse/ec_group.hpp"
#include "ecrse/embedding.hpp"
#include "ecrse/rng.hpp"

namespace ecrse {

// Monte Carlo outcome. Failed trials are bucketed under histogram key 0
// (a success always needs at least one attempt), so frequencies sum to
// trials. mean_attempts averages over successes only.
struct TrialReport {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double mean_attempts = 0.0;
    std::map<std::size_t, std::size_t> histogram;
};

// (residues, nonresidues) over [1, p-1] by exhaustive Euler-criterion scan.
// Both counts equal (p-1)/2 for every odd prime. Guard: p <= 10^6, else
// CurveTooLarge.
std::pair<Natural, Natural> qr_density(const Natural& p);

// Runs rsa_embed with seeded-random exponents on uniform messages in
// [2, n-1], recording how many exponents each embedding consumed. The mean
// approaches 1/rho, rho = fraction of [0, n) that are valid x-coordinates.
TrialReport embed_attempt_distribution(const CurveParams& curve, const RsaEmbedKey& key,
                                       std::size_t trials, SeededRng& rng);

// Frequency of Koblitz embedding failure over uniform messages satisfying
// (M+1)*K < p. Successful trials are bucketed by the candidate index j that
// landed on the curve.
TrialReport koblitz_failure_rate(const CurveParams& curve, const Natural& K, std::size_t trials,
                                 SeededRng& rng);

// "trials,successes,mean_attempts" followed by flattened histogram pairs.
std::string to_csv(const TrialReport& report);

// Aligned human-readable rendering of the same numbers.
std::string to_table(const TrialReport& report);

}  // namespace ecrse

#endif
