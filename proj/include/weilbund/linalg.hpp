#pragma once

#include <optional>
#include <vector>

#include "weilbund/rational.hpp"

namespace weilbund {

// Dense rational matrix, row-major. Sized for desk scale (<= a few thousand
// entries per side); all arithmetic is exact.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool is_zero() const;
    bool operator==(const QMatrix& other) const { return rows == other.rows && cols == other.cols && a == other.a; }

    static QMatrix identity(int n);
};

// Exact rank by fraction-free Bareiss elimination on the integer matrix
// obtained by clearing denominators row by row.
int rank_bareiss(const QMatrix& m);

// In-place reduced row echelon form with the fixed first-nonzero pivot rule;
// returns the rank and, if requested, records the pivot columns.
int rref(QMatrix& m, std::vector<int>* pivot_cols = nullptr);

// Basis of the right kernel {x : m x = 0}.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

std::optional<QMatrix> inverse(const QMatrix& m);

// Exact product; rows are computed independently (OpenMP when available),
// so the result does not depend on the thread count.
QMatrix multiply(const QMatrix& lhs, const QMatrix& rhs);

}  // namespace weilbund
