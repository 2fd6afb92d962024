#include "dialeval/linalg.hpp"

#include <cmath>

namespace dialeval {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double cosine(const Vec& a, const Vec& b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na == 0.0 || nb == 0.0) throw NumericError("cosine undefined for zero-norm vector");
    return dot(a, b) / (na * nb);
}

Vec matvec(const Mat& m, const Vec& x) {
    if (m.cols != x.size()) throw InputError("matvec: dimension mismatch");
    Vec y(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Vec matvec_transpose(const Mat& m, const Vec& x) {
    if (m.rows != x.size()) throw InputError("matvec_transpose: dimension mismatch");
    Vec y(m.cols, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double xi = x[i];
        for (std::size_t j = 0; j < m.cols; ++j) y[j] += m(i, j) * xi;
    }
    return y;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("add: dimension mismatch");
    Vec y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = a[i] + b[i];
    return y;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("sub: dimension mismatch");
    Vec y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = a[i] - b[i];
    return y;
}

Vec scale(const Vec& a, double t) {
    Vec y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = a[i] * t;
    return y;
}

double frobenius_sq(const Mat& m) {
    double s = 0.0;
    for (double v : m.data) s += v * v;
    return s;
}

}  // namespace dialeval
