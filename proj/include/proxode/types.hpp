#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace proxode {

/// d-dimensional real state at one time instant.
using StateVector = std::vector<double>;

/// Dense row-major matrix, used for Jacobians and small linear algebra.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    void resize(int r, int c) {
        rows = r;
        cols = c;
        data.assign(static_cast<std::size_t>(r) * c, 0.0);
    }
};

inline double dot(const StateVector& a, const StateVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double l2_norm(const StateVector& v) { return std::sqrt(dot(v, v)); }

inline double l2_distance(const StateVector& a, const StateVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// y += a*x
inline void axpy(double a, const StateVector& x, StateVector& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline void scale(StateVector& v, double a) {
    for (double& x : v) x *= a;
}

inline bool all_finite(const StateVector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace proxode
