#include "ecrse/stats.hpp"

#include <iomanip>
#include <sstream>

namespace ecrse {

std::pair<Natural, Natural> qr_density(const Natural& p) {
    if (p > 1000000) throw CurveTooLarge();
    Natural residues = 0;
    for (Natural v = 1; v < p; ++v)
        if (is_quadratic_residue(v, p)) ++residues;
    return {residues, p - 1 - residues};
}

TrialReport embed_attempt_distribution(const CurveParams& curve, const RsaEmbedKey& key,
                                       std::size_t trials, SeededRng& rng) {
    TrialReport report;
    report.trials = trials;
    double total_attempts = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Natural message = rng.between(2, key.n - 1);
        SeededRandomExponents exponents(key.phi, rng);
        try {
            EmbeddingResult result = rsa_embed(curve, key, message, exponents);
            ++report.successes;
            ++report.histogram[result.attempts];
            total_attempts += static_cast<double>(result.attempts);
        } catch (const NoEmbeddingFound&) {
            ++report.histogram[0];
        }
    }
    if (report.successes > 0)
        report.mean_attempts = total_attempts / static_cast<double>(report.successes);
    return report;
}

TrialReport koblitz_failure_rate(const CurveParams& curve, const Natural& K, std::size_t trials,
                                 SeededRng& rng) {
    TrialReport report;
    report.trials = trials;
    if (trials == 0) return report;
    if (K < 2 || (curve.p - 1) / K < 1)
        throw Error("expansion factor leaves no valid message");

    const KoblitzParams params{K};
    const Natural message_cap = (curve.p - 1) / K - 1;  // largest M with (M+1)K < p
    double total_attempts = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Natural message = rng.below(message_cap + 1);
        try {
            ECPoint point = koblitz_embed(curve, params, message);
            // x = KM + j, so the candidate index that landed is x mod K
            Natural j = point.x % K;
            std::size_t attempts = mpz_get_ui(j.get_mpz_t());
            ++report.successes;
            ++report.histogram[attempts];
            total_attempts += static_cast<double>(attempts);
        } catch (const NoEmbeddingFound&) {
            ++report.histogram[0];
        }
    }
    if (report.successes > 0)
        report.mean_attempts = total_attempts / static_cast<double>(report.successes);
    return report;
}

std::string to_csv(const TrialReport& report) {
    std::ostringstream out;
    out << report.trials << ',' << report.successes << ',' << report.mean_attempts;
    for (const auto& [attempts, frequency] : report.histogram)
        out << ',' << attempts << ',' << frequency;
    out << '\n';
    return out.str();
}

std::string to_table(const TrialReport& report) {
    std::ostringstream out;
    out << "trials         " << report.trials << '\n';
    out << "successes      " << report.successes << '\n';
    out << "mean attempts  " << report.mean_attempts << '\n';
    if (!report.histogram.empty()) {
        out << "attempts  frequency\n";
        for (const auto& [attempts, frequency] : report.histogram)
            out << std::setw(8) << attempts << "  " << frequency << '\n';
    }
    return out.str();
}

}  // namespace ecrse
