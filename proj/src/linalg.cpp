#include "weilbund/linalg.hpp"

#include "weilbund/errors.hpp"

namespace weilbund {

bool QMatrix::is_zero() const {
    for (const auto& x : a)
        if (!weilbund::is_zero(x)) return false;
    return true;
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

int rank_bareiss(const QMatrix& m) {
    const int rows = m.rows, cols = m.cols;
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators per row; scaling a row by a nonzero integer
    // preserves rank.
    std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < cols; ++j) {
            const mpz_class& den = m.at(i, j).get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
        for (int j = 0; j < cols; ++j) {
            const Rational& q = m.at(i, j);
            z[i][j] = q.get_num() * (l / q.get_den());
        }
    }

    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (z[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(z[rank], z[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                // Bareiss update: exact integer division by the previous pivot.
                mpz_class t = z[rank][col] * z[i][j] - z[i][col] * z[rank][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][col] = 0;
        }
        prev = z[rank][col];
        ++rank;
    }
    return rank;
}

int rref(QMatrix& m, std::vector<int>* pivot_cols) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i) {
            if (!is_zero(m.at(i, col))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        Rational inv = 1 / m.at(rank, col);
        for (int j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || is_zero(m.at(i, col))) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    QMatrix r = m;
    std::vector<int> pivots;
    int rank = rref(r, &pivots);

    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols);
        v[free_col] = 1;
        for (int i = 0; i < rank; ++i) v[pivots[i]] = -r.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    const int n = m.rows;
    QMatrix work(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) work.at(i, j) = m.at(i, j);
        work.at(i, n + i) = 1;
    }
    std::vector<int> pivots;
    rref(work, &pivots);
    // Invertible iff all pivots land in the left block.
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = work.at(i, n + j);
    return inv;
}

QMatrix multiply(const QMatrix& lhs, const QMatrix& rhs) {
    if (lhs.cols != rhs.rows)
        throw DimensionMismatch("matrix product: " + std::to_string(lhs.cols) + " columns vs " +
                                std::to_string(rhs.rows) + " rows");
    QMatrix out(lhs.rows, rhs.cols);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < lhs.rows; ++i) {
        for (int k = 0; k < lhs.cols; ++k) {
            const Rational& l = lhs.at(i, k);
            if (is_zero(l)) continue;
            for (int j = 0; j < rhs.cols; ++j) {
                const Rational& r = rhs.at(k, j);
                if (!is_zero(r)) out.at(i, j) += l * r;
            }
        }
    }
    return out;
}

}  // namespace weilbund
