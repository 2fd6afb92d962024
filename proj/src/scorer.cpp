#include "dialeval/scorer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dialeval {

namespace {

void check_square(const ScorerParams& p) {
    if (p.M.rows != p.M.cols || p.N.rows != p.N.cols || p.M.rows != p.N.rows)
        throw InputError("scorer: M and N must be square with equal dimension");
    if (p.beta == 0.0) throw InputError("scorer: beta must be nonzero");
}

void check_dims(const ScorerParams& p, const SentenceEmbedding& c, const SentenceEmbedding& r) {
    check_square(p);
    if (c.vector.size() != p.dim() || r.vector.size() != p.dim())
        throw InputError("scorer: embedding dimension does not match parameters");
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

ScorerParams ScorerParams::identity(std::size_t n, double alpha, double beta) {
    return {Mat::identity(n), Mat::identity(n), alpha, beta};
}

double score(const SentenceEmbedding& c, const SentenceEmbedding& r, const SentenceEmbedding& rhat,
             const ScorerParams& params) {
    check_dims(params, c, r);
    if (rhat.vector.size() != params.dim())
        throw InputError("scorer: candidate dimension does not match parameters");
    const Vec mr = matvec(params.M, rhat.vector);
    const Vec nr = matvec(params.N, rhat.vector);
    return (dot(c.vector, mr) + dot(r.vector, nr) - params.alpha) / params.beta;
}

AffineForm affine_form(const SentenceEmbedding& c, const SentenceEmbedding& r,
                       const ScorerParams& params) {
    check_dims(params, c, r);
    const Vec mc = matvec_transpose(params.M, c.vector);
    const Vec nr = matvec_transpose(params.N, r.vector);
    AffineForm f;
    f.a.resize(params.dim());
    for (std::size_t i = 0; i < params.dim(); ++i) f.a[i] = (mc[i] + nr[i]) / params.beta;
    f.b = params.alpha / params.beta;
    return f;
}

Vec score_gradient(const SentenceEmbedding& c, const SentenceEmbedding& r,
                   const ScorerParams& params) {
    return affine_form(c, r, params).a;
}

std::pair<double, double> calibrate(const std::vector<double>& raw_scores) {
    if (raw_scores.size() < 2) throw InputError("calibrate requires at least two raw scores");
    double mean = 0.0;
    for (double x : raw_scores) mean += x;
    mean /= static_cast<double>(raw_scores.size());
    double ss = 0.0;
    for (double x : raw_scores) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(raw_scores.size() - 1));
    if (sd == 0.0)
        throw NumericError("calibrate: zero variance in raw scores; set beta manually");
    const double beta = sd;
    const double alpha = mean - 3.0 * beta;
    return {alpha, beta};
}

namespace {

double training_loss(const std::vector<TrainSample>& data, const ScorerParams& p, double gamma) {
    double loss = 0.0;
    for (const auto& s : data) {
        const double e = score(s.c, s.r, s.rhat, p) - s.human;
        loss += e * e;
    }
    return loss + gamma * (frobenius_sq(p.M) + frobenius_sq(p.N));
}

}  // namespace

TrainResult train(const std::vector<TrainSample>& dataset, const TrainConfig& config,
                  const ScorerParams& init) {
    if (dataset.empty()) throw InputError("train: dataset is empty");
    if (config.step_size <= 0.0) throw InputError("train: step_size must be positive");
    if (config.gamma < 0.0) throw InputError("train: gamma must be nonnegative");
    check_square(init);
    const std::size_t n = init.dim();
    for (const auto& s : dataset)
        if (s.c.vector.size() != n || s.r.vector.size() != n || s.rhat.vector.size() != n)
            throw InputError("train: sample dimension does not match parameters");

    TrainResult res;
    res.params = init;
    res.loss_trace.push_back(training_loss(dataset, res.params, config.gamma));

    int rising = 0;
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        Mat gM(n, n), gN(n, n);
        for (const auto& s : dataset) {
            const double e = score(s.c, s.r, s.rhat, res.params) - s.human;
            const double coef = 2.0 * e / res.params.beta;
            for (std::size_t i = 0; i < n; ++i) {
                const double gc = coef * s.c.vector[i];
                const double gr = coef * s.r.vector[i];
                for (std::size_t j = 0; j < n; ++j) {
                    gM(i, j) += gc * s.rhat.vector[j];
                    gN(i, j) += gr * s.rhat.vector[j];
                }
            }
        }
        for (std::size_t k = 0; k < n * n; ++k) {
            gM.data[k] += 2.0 * config.gamma * res.params.M.data[k];
            gN.data[k] += 2.0 * config.gamma * res.params.N.data[k];
            res.params.M.data[k] -= config.step_size * gM.data[k];
            res.params.N.data[k] -= config.step_size * gN.data[k];
        }
        const double loss = training_loss(dataset, res.params, config.gamma);
        if (loss > res.loss_trace.back()) {
            if (++rising >= 5)
                throw NumericError("train: loss rose for 5 consecutive epochs; reduce step_size");
        } else {
            rising = 0;
        }
        res.loss_trace.push_back(loss);
    }
    return res;
}

std::string serialize_scorer(const ScorerParams& params) {
    check_square(params);
    const std::size_t n = params.dim();
    std::string out = "BILIN1 " + std::to_string(n) + "\n";
    out += fmt_double(params.alpha) + " " + fmt_double(params.beta) + "\n";
    for (const Mat* m : {&params.M, &params.N}) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ' ';
                out += fmt_double((*m)(i, j));
            }
            out += '\n';
        }
    }
    return out;
}

ScorerParams parse_scorer(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string magic;
    std::size_t n = 0;
    if (!(in >> magic >> n) || magic != "BILIN1" || n == 0)
        throw InputError("scorer file: expected header 'BILIN1 n'");
    ScorerParams p;
    if (!(in >> p.alpha >> p.beta)) throw InputError("scorer file: missing alpha/beta");
    if (p.beta == 0.0) throw InputError("scorer file: beta must be nonzero");
    p.M = Mat(n, n);
    p.N = Mat(n, n);
    for (Mat* m : {&p.M, &p.N})
        for (std::size_t k = 0; k < n * n; ++k)
            if (!(in >> m->data[k])) throw InputError("scorer file: truncated matrix data");
    double extra;
    if (in >> extra) throw InputError("scorer file: trailing data");
    return p;
}

void save_scorer(const ScorerParams& params, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write scorer file: " + path);
    out << serialize_scorer(params);
}

ScorerParams load_scorer(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open scorer file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scorer(ss.str());
}

}  // namespace dialeval
