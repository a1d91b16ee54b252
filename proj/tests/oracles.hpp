// Test-only oracles, written independently of the library code paths they
// check. Nothing in here is used by the production library.
#pragma once

#include <vector>

#include "weilbund/linalg.hpp"
#include "weilbund/rational.hpp"
#include "weilbund/weil_algebra.hpp"

namespace weilbund::oracle {

// Brute-force Weil-algebra axiom check on the raw table: dense products,
// all pairs and triples, no symmetry shortcuts. Used to classify mutants
// independently of WeilAlgebra::validate.
inline bool table_is_weil_algebra(const WeilAlgebra& a) {
    const int d = a.dim();
    auto mul = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> out(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (is_zero(x[i]) || is_zero(y[j])) continue;
                for (int g = 0; g < d; ++g) {
                    Rational c = a.structure_constant(i, j, g);
                    if (!is_zero(c)) out[g] += x[i] * y[j] * c;
                }
            }
        return out;
    };
    auto basis = [&](int i) {
        std::vector<Rational> v(static_cast<std::size_t>(d));
        v[i] = 1;
        return v;
    };

    // Unit on both sides.
    for (int b = 0; b < d; ++b) {
        if (mul(basis(0), basis(b)) != basis(b)) return false;
        if (mul(basis(b), basis(0)) != basis(b)) return false;
    }
    // Commutativity.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (mul(basis(i), basis(j)) != mul(basis(j), basis(i))) return false;
    // Associativity, all triples.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
                    return false;
    // The span of e_1..e_{d-1} must be closed under products (augmentation
    // multiplicative on basis pairs) ...
    for (int i = 1; i < d; ++i)
        for (int j = 1; j < d; ++j)
            if (!is_zero(mul(basis(i), basis(j))[0])) return false;
    // ... and every basis generator of it nilpotent; in a commutative
    // associative algebra that makes the whole ideal nilpotent.
    for (int i = 1; i < d; ++i) {
        std::vector<Rational> p = basis(i);
        bool vanished = false;
        for (int it = 0; it <= d + 1; ++it) {
            bool zero = true;
            for (const auto& c : p)
                if (!is_zero(c)) zero = false;
            if (zero) {
                vanished = true;
                break;
            }
            p = mul(p, basis(i));
        }
        if (!vanished) return false;
    }
    return true;
}

// Independent rank oracle: plain Gauss-Jordan over the rationals with
// partial pivoting by first nonzero entry, written without reference to
// the production elimination code.
inline int rank_gauss_oracle(QMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || is_zero(m.at(r, col))) continue;
            Rational f = m.at(r, col) / m.at(rank, col);
            for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
        if (rank == m.rows) break;
    }
    return rank;
}

}  // namespace weilbund::oracle
