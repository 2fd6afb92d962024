#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dialeval/linalg.hpp"
#include "dialeval/scorer.hpp"

namespace dialeval {

struct EmbeddingSet {
    std::vector<Vec> vectors;  // non-empty, uniform dimension

    Vec mean() const;
};

struct LineScanResult {
    std::vector<double> deltas;  // in [0,1]
    std::vector<double> scores;  // same length
    // Largest absolute deviation of the scores from their least-squares line
    // in delta. Exactly affine scorers keep this at rounding noise.
    double max_affine_residual = 0.0;
};

struct SpreadReport {
    double conicity = 0.0;
    double atm_mean = 0.0;
    double atm_min = 0.0;
    double atm_max = 0.0;
    double pairwise_cosine_mean = 0.0;
    std::size_t count = 0;
    std::size_t dim = 0;
    bool pairwise_sampled = false;
};

// Alignment to mean: cosine of v against the set's mean vector.
// Zero v or zero mean raise NumericError (alignment undefined).
double atm(const Vec& v, const EmbeddingSet& set);

// Mean ATM over the set. High conicity = vectors huddled in a narrow cone.
double conicity(const EmbeddingSet& set);

// Scores along the segment rhat(delta) = r1 + delta (r2 - r1) at
// delta = k / (steps - 1), k = 0..steps-1, plus the affine-fit residual.
LineScanResult line_scan(const SentenceEmbedding& r1, const SentenceEmbedding& r2,
                         const SentenceEmbedding& c, const SentenceEmbedding& r,
                         const ScorerParams& params, std::size_t steps);

// Conicity, ATM extremes, and mean pairwise cosine over ordered distinct
// pairs — exact when |V| <= exact_threshold, otherwise over a seeded sample
// of exact_threshold^2 pairs (i != j, modulo draws per rng.hpp).
SpreadReport spread_report(const EmbeddingSet& set, std::uint64_t seed = 0,
                           std::size_t exact_threshold = 2000);

// Exact ordered-pair path regardless of size (oracle hook for tests).
double mean_pairwise_cosine_exact(const EmbeddingSet& set);

// JSON object with keys conicity, atm_mean, atm_min, atm_max,
// pairwise_cosine_mean, count, dim.
std::string spread_report_json(const SpreadReport& report);

}  // namespace dialeval
