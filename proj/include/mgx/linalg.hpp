#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "mgx/common.hpp"

namespace mgx {

// Exact Gaussian elimination; returns nothing when the matrix is singular.
inline std::optional<std::vector<Rational>> solve_linear_rational(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) { piv = row; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const Rational f = a[row][col] / a[col][col];
            for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (int row = n - 1; row >= 0; --row) {
        Rational s = b[row];
        for (int j = row + 1; j < n; ++j) s -= a[row][j] * x[j];
        x[row] = s / a[row][row];
    }
    return x;
}

// Floating-point elimination with partial pivoting; near-singular systems
// (pivot below eps) are reported as unsolvable.
inline std::optional<std::vector<double>> solve_linear_double(
    std::vector<std::vector<double>> a, std::vector<double> b, double eps = 1e-12) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int row = col + 1; row < n; ++row)
            if (std::fabs(a[row][col]) > std::fabs(a[piv][col])) piv = row;
        if (std::fabs(a[piv][col]) < eps) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int row = col + 1; row < n; ++row) {
            const double f = a[row][col] / a[col][col];
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int row = n - 1; row >= 0; --row) {
        double s = b[row];
        for (int j = row + 1; j < n; ++j) s -= a[row][j] * x[j];
        x[row] = s / a[row][row];
    }
    return x;
}

}  // namespace mgx
