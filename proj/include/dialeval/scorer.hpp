#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dialeval/embed.hpp"
#include "dialeval/linalg.hpp"

namespace dialeval {

// Bilinear response scorer: (c^T M rhat + r^T N rhat - alpha) / beta.
struct ScorerParams {
    Mat M;  // n x n
    Mat N;  // n x n
    double alpha = 0.0;
    double beta = 1.0;  // nonzero

    std::size_t dim() const { return M.rows; }
    static ScorerParams identity(std::size_t n, double alpha = 0.0, double beta = 1.0);
};

struct TrainConfig {
    double gamma = 0.0;        // L2 weight, >= 0
    double step_size = 1e-3;   // > 0
    std::size_t epochs = 100;
    std::uint64_t seed = 0;    // recorded for reproducibility bookkeeping; the
                               // full-batch path draws no randomness
};

// score(rhat) == a . rhat - b for every candidate embedding.
struct AffineForm {
    Vec a;
    double b = 0.0;

    double eval(const Vec& rhat) const { return dot(a, rhat) - b; }
};

struct TrainSample {
    SentenceEmbedding c;
    SentenceEmbedding r;
    SentenceEmbedding rhat;
    double human = 0.0;
};

struct TrainResult {
    ScorerParams params;
    std::vector<double> loss_trace;  // loss at init, then after each epoch
};

// Raw score, unclamped. Dimension mismatch raises InputError.
double score(const SentenceEmbedding& c, const SentenceEmbedding& r, const SentenceEmbedding& rhat,
             const ScorerParams& params);

// a = (M^T c + N^T r) / beta, b = alpha / beta.
AffineForm affine_form(const SentenceEmbedding& c, const SentenceEmbedding& r,
                       const ScorerParams& params);

// d score / d rhat, which is exactly the affine form's a.
Vec score_gradient(const SentenceEmbedding& c, const SentenceEmbedding& r,
                   const ScorerParams& params);

// beta = sample SD of the raw scores, alpha = mean - 3 beta, so that
// (raw - alpha) / beta has mean 3 and sample SD 1. Fewer than two scores is
// an InputError; zero variance is a NumericError (set beta manually).
std::pair<double, double> calibrate(const std::vector<double>& raw_scores);

// Full-batch gradient descent on
//   L = sum_i (score_i - human_i)^2 + gamma (||M||_F^2 + ||N||_F^2),
// starting from init; alpha and beta stay fixed. Deterministic. If the loss
// rises for 5 consecutive epochs, aborts with NumericError recommending a
// smaller step_size. epochs == 0 returns init unchanged.
TrainResult train(const std::vector<TrainSample>& dataset, const TrainConfig& config,
                  const ScorerParams& init);

// Versioned text persistence: header "BILIN1 n", then "alpha beta", then the
// n rows of M and the n rows of N, one row per line.
std::string serialize_scorer(const ScorerParams& params);
ScorerParams parse_scorer(const std::string& bytes);
void save_scorer(const ScorerParams& params, const std::string& path);
ScorerParams load_scorer(const std::string& path);

}  // namespace dialeval
