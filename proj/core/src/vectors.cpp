#include "mmipm/vectors.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mmipm {

DenseVector ones(std::size_t n) { return DenseVector(n, 1.0); }
DenseVector zeros(std::size_t n) { return DenseVector(n, 0.0); }

double dot(const DenseVector& a, const DenseVector& b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const DenseVector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double norm3(const DenseVector& v) {
    double s = 0.0;
    for (double x : v) {
        const double a = std::fabs(x);
        s += a * a * a;
    }
    return std::cbrt(s);
}

double norm4(const DenseVector& v) {
    double s = 0.0;
    for (double x : v) {
        const double a = x * x;
        s += a * a;
    }
    return std::sqrt(std::sqrt(s));
}

double norm_inf(const DenseVector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double norm_p(const DenseVector& v, int p) {
    switch (p) {
        case 2: return norm2(v);
        case 3: return norm3(v);
        case 4: return norm4(v);
        default: throw std::invalid_argument("norm_p: p must be 2, 3 or 4");
    }
}

double min_entry(const DenseVector& v) {
    double m = std::numeric_limits<double>::infinity();
    for (double x : v) m = std::min(m, x);
    return m;
}

double max_entry(const DenseVector& v) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : v) m = std::max(m, x);
    return m;
}

bool all_finite(const DenseVector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool all_positive(const DenseVector& v) {
    for (double x : v)
        if (!(x > 0.0)) return false;
    return true;
}

}  // namespace mmipm
