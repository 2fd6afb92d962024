#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dialeval {

struct ScoreSeries {
    std::vector<double> values;  // finite, length >= 1
    std::string label;
};

struct Description {
    double mean = 0.0;
    double sd = 0.0;  // sample SD, divisor length - 1
    double min = 0.0;
    double max = 0.0;
    double pct_within_1sd = 0.0;  // |x - mean| <= sd, inclusive, as a percentage
    bool zero_sd = false;         // constant series flag
};

enum class CorrelationStat { pearson, spearman };

// Length < 2 raises InputError (SD undefined). A constant series is returned
// with zero_sd set and pct_within_1sd = 100.
Description describe(const ScoreSeries& s);

// Sample Pearson product-moment coefficient. Requires equal lengths >= 3 and
// both series nonconstant (otherwise NumericError).
double pearson(const ScoreSeries& x, const ScoreSeries& y);

// Pearson over average ranks; ties receive the mean of their rank positions.
double spearman(const ScoreSeries& x, const ScoreSeries& y);

// Average ranks (1-based) with ties sharing the mean rank.
std::vector<double> average_ranks(const std::vector<double>& v);

// Two-sided permutation test: fraction of seeded permutations of y whose
// |statistic| >= |observed|, smoothed as (count + 1) / (iterations + 1).
// Iteration i permutes with seed derive_seed(seed, i, statistic id), so the
// result is schedule-independent. iterations >= 100 required.
double permutation_p_value(const ScoreSeries& x, const ScoreSeries& y, CorrelationStat statistic,
                           std::size_t iterations, std::uint64_t seed);

// 100 * (count of strictly greater pairs) / length. Lengths must match.
double pct_better(const ScoreSeries& variant, const ScoreSeries& original);

}  // namespace dialeval
