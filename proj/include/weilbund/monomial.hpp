#pragma once

#include <numeric>
#include <string>
#include <vector>

namespace weilbund {

// Dense exponent vector; the canonical monomial representation everywhere.
struct Monomial {
    std::vector<int> e;

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool operator==(const Monomial& other) const { return e == other.e; }
};

// Canonical term order: ascending total degree, and within a degree the
// lexicographically greater exponent vector comes first (so x1^2 < x1 x2 <
// x2^2). Listing a basis in this order starts at the constant monomial.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

// All monomials in `nvars` variables of total degree exactly `deg`,
// in canonical order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (deg == 0) out.push_back(Monomial{{}});
        return out;
    }
    std::vector<int> current(static_cast<std::size_t>(nvars));
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            current[var] = remaining;
            out.push_back(Monomial{current});
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            current[var] = k;
            self(self, var + 1, remaining - k);
        }
    };
    rec(rec, 0, deg);
    return out;
}

inline std::vector<Monomial> monomials_up_to_degree(int nvars, int max_deg) {
    std::vector<Monomial> out;
    for (int d = 0; d <= max_deg; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// Display form with custom variable names, e.g. "y1^2*y2"; "1" for the
// constant monomial.
inline std::string monomial_label(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace weilbund
