#pragma once

#include <cstddef>
#include <vector>

#include "dialeval/errors.hpp"

namespace dialeval {

using Vec = std::vector<double>;

// Dense square-ish matrix, row-major. Small n throughout this project, so a
// flat vector with index arithmetic is all we need.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Mat identity(std::size_t n);

    bool operator==(const Mat& o) const = default;
};

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);

// Cosine similarity. Throws NumericError if either vector has zero norm.
double cosine(const Vec& a, const Vec& b);

Vec matvec(const Mat& m, const Vec& x);            // m * x
Vec matvec_transpose(const Mat& m, const Vec& x);  // m^T * x

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, double t);

double frobenius_sq(const Mat& m);

}  // namespace dialeval
