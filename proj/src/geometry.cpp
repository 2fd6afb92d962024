#include "dialeval/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "dialeval/rng.hpp"

namespace dialeval {

Vec EmbeddingSet::mean() const {
    if (vectors.empty()) throw InputError("embedding set is empty");
    Vec m(vectors.front().size(), 0.0);
    for (const Vec& v : vectors) {
        if (v.size() != m.size()) throw InputError("embedding set has mixed dimensions");
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += v[i];
    }
    for (double& x : m) x /= static_cast<double>(vectors.size());
    return m;
}

double atm(const Vec& v, const EmbeddingSet& set) {
    const Vec m = set.mean();
    if (norm(v) == 0.0) throw NumericError("atm undefined for a zero vector");
    if (norm(m) == 0.0) throw NumericError("atm undefined: set mean is the zero vector");
    return cosine(v, m);
}

double conicity(const EmbeddingSet& set) {
    const Vec m = set.mean();
    if (norm(m) == 0.0) throw NumericError("conicity undefined: set mean is the zero vector");
    double total = 0.0;
    for (const Vec& v : set.vectors) {
        if (norm(v) == 0.0) throw NumericError("conicity undefined: set contains a zero vector");
        total += cosine(v, m);
    }
    return total / static_cast<double>(set.vectors.size());
}

LineScanResult line_scan(const SentenceEmbedding& r1, const SentenceEmbedding& r2,
                         const SentenceEmbedding& c, const SentenceEmbedding& r,
                         const ScorerParams& params, std::size_t steps) {
    if (steps < 2) throw InputError("line_scan requires steps >= 2");
    if (r1.vector.size() != r2.vector.size())
        throw InputError("line_scan: endpoint dimensions differ");

    LineScanResult res;
    res.deltas.reserve(steps);
    res.scores.reserve(steps);
    const Vec dir = sub(r2.vector, r1.vector);
    for (std::size_t k = 0; k < steps; ++k) {
        const double delta = static_cast<double>(k) / static_cast<double>(steps - 1);
        SentenceEmbedding rhat;
        rhat.vector = add(r1.vector, scale(dir, delta));
        res.deltas.push_back(delta);
        res.scores.push_back(score(c, r, rhat, params));
    }

    // Least-squares line through (delta, score); residual = worst deviation.
    const double n = static_cast<double>(steps);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        sx += res.deltas[k];
        sy += res.scores[k];
        sxx += res.deltas[k] * res.deltas[k];
        sxy += res.deltas[k] * res.scores[k];
    }
    const double det = n * sxx - sx * sx;
    const double slope = det == 0.0 ? 0.0 : (n * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / n;
    double worst = 0.0;
    for (std::size_t k = 0; k < steps; ++k)
        worst = std::max(worst, std::fabs(res.scores[k] - (intercept + slope * res.deltas[k])));
    res.max_affine_residual = worst;
    return res;
}

double mean_pairwise_cosine_exact(const EmbeddingSet& set) {
    const std::size_t n = set.vectors.size();
    if (n == 1) return 1.0;
    std::vector<Vec> unit(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double nv = norm(set.vectors[i]);
        if (nv == 0.0) throw NumericError("pairwise cosine undefined: zero vector in set");
        unit[i] = scale(set.vectors[i], 1.0 / nv);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) total += dot(unit[i], unit[j]);
    // Ordered distinct pairs double the unordered sum and the count.
    return total / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

SpreadReport spread_report(const EmbeddingSet& set, std::uint64_t seed,
                           std::size_t exact_threshold) {
    SpreadReport rep;
    rep.count = set.vectors.size();
    rep.dim = set.vectors.front().size();

    const Vec m = set.mean();
    if (norm(m) == 0.0) throw NumericError("spread report undefined: set mean is the zero vector");
    double total = 0.0, lo = 1.0, hi = -1.0;
    for (const Vec& v : set.vectors) {
        if (norm(v) == 0.0) throw NumericError("spread report undefined: zero vector in set");
        const double a = cosine(v, m);
        total += a;
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    rep.atm_mean = total / static_cast<double>(rep.count);
    rep.conicity = rep.atm_mean;
    rep.atm_min = lo;
    rep.atm_max = hi;

    const std::size_t n = rep.count;
    if (n <= exact_threshold) {
        rep.pairwise_cosine_mean = mean_pairwise_cosine_exact(set);
    } else {
        rep.pairwise_sampled = true;
        std::vector<Vec> unit(n);
        for (std::size_t i = 0; i < n; ++i)
            unit[i] = scale(set.vectors[i], 1.0 / norm(set.vectors[i]));
        const std::size_t draws = exact_threshold * exact_threshold;
        std::mt19937_64 rng(seed);
        double s = 0.0;
        for (std::size_t d = 0; d < draws; ++d) {
            std::size_t i = static_cast<std::size_t>(rng() % n);
            std::size_t j = static_cast<std::size_t>(rng() % n);
            while (j == i) j = static_cast<std::size_t>(rng() % n);
            s += dot(unit[i], unit[j]);
        }
        rep.pairwise_cosine_mean = s / static_cast<double>(draws);
    }
    return rep;
}

std::string spread_report_json(const SpreadReport& r) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "{\"conicity\":%.17g,\"atm_mean\":%.17g,\"atm_min\":%.17g,\"atm_max\":%.17g,"
                  "\"pairwise_cosine_mean\":%.17g,\"count\":%zu,\"dim\":%zu}",
                  r.conicity, r.atm_mean, r.atm_min, r.atm_max, r.pairwise_cosine_mean, r.count,
                  r.dim);
    return buf;
}

}  // namespace dialeval
