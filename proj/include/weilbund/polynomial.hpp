#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "weilbund/errors.hpp"
#include "weilbund/monomial.hpp"
#include "weilbund/ring.hpp"

namespace weilbund {

// Sparse multivariate polynomial over a coefficient ring (rationals or a
// Weil algebra). Terms are kept in graded-lex order with no stored zeros,
// so structural equality is semantic equality.
template <class Ring>
class Polynomial {
public:
    using Coeff = typename Ring::Elem;
    using TermMap = std::map<Monomial, Coeff, GrlexLess>;

    Polynomial(Ring ring, int num_vars) : ring_(std::move(ring)), nvars_(num_vars) {}

    static Polynomial constant(Ring ring, int num_vars, Coeff value) {
        Polynomial p(std::move(ring), num_vars);
        p.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(num_vars))}, std::move(value));
        return p;
    }

    static Polynomial variable(Ring ring, int num_vars, int index0) {
        if (index0 < 0 || index0 >= num_vars)
            throw IndexOutOfRange("variable index " + std::to_string(index0 + 1) + " of " +
                                  std::to_string(num_vars));
        Monomial m{std::vector<int>(static_cast<std::size_t>(num_vars))};
        m.e[static_cast<std::size_t>(index0)] = 1;
        Coeff one = ring.one();
        Polynomial p(std::move(ring), num_vars);
        p.add_term(std::move(m), std::move(one));
        return p;
    }

    const Ring& ring() const { return ring_; }
    int num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int degree() const {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        return terms_.rbegin()->first.degree() == d;
    }

    void add_term(Monomial m, Coeff c) {
        if (static_cast<int>(m.e.size()) != nvars_)
            throw VariableCountMismatch("monomial arity " + std::to_string(m.e.size()) + " vs " +
                                        std::to_string(nvars_));
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!ring_.is_zero(c)) terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Coeff coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    Polynomial operator+(const Polynomial& other) const {
        check_compatible(other);
        Polynomial out = *this;
        for (const auto& [m, c] : other.terms_) out.add_term(m, c);
        return out;
    }

    Polynomial operator-(const Polynomial& other) const {
        check_compatible(other);
        Polynomial out = *this;
        for (const auto& [m, c] : other.terms_) out.add_term(m, ring_.neg(c));
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(ring_, nvars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, ring_.neg(c));
        return out;
    }

    Polynomial operator*(const Polynomial& other) const {
        check_compatible(other);
        Polynomial out(ring_, nvars_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : other.terms_) {
                Coeff c = ring_.mul(ca, cb);
                if (ring_.is_zero(c)) continue;
                Monomial m = ma;
                for (int v = 0; v < nvars_; ++v) m.e[v] += mb.e[v];
                out.add_term(std::move(m), std::move(c));
            }
        }
        return out;
    }

    Polynomial scaled(const Coeff& s) const {
        Polynomial out(ring_, nvars_);
        for (const auto& [m, c] : terms_) out.add_term(m, ring_.mul(s, c));
        return out;
    }

    Polynomial scaled_rational(const Rational& s) const {
        Polynomial out(ring_, nvars_);
        for (const auto& [m, c] : terms_) out.add_term(m, ring_.scale(s, c));
        return out;
    }

    bool operator==(const Polynomial& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }

    // Formal partial derivative with respect to variable index0 (0-based).
    Polynomial partial_derivative(int index0) const {
        if (index0 < 0 || index0 >= nvars_)
            throw IndexOutOfRange("derivative index " + std::to_string(index0 + 1) + " of " +
                                  std::to_string(nvars_));
        Polynomial out(ring_, nvars_);
        for (const auto& [m, c] : terms_) {
            int e = m.e[static_cast<std::size_t>(index0)];
            if (e == 0) continue;
            Monomial dm = m;
            dm.e[static_cast<std::size_t>(index0)] -= 1;
            out.add_term(std::move(dm), ring_.scale(Rational(e), c));
        }
        return out;
    }

    // Substitute every variable by the corresponding polynomial; all targets
    // must share a number of variables, which becomes the result arity.
    Polynomial substitute(const std::vector<Polynomial>& assignment) const {
        if (static_cast<int>(assignment.size()) != nvars_)
            throw MissingAssignment("assignment covers " + std::to_string(assignment.size()) +
                                    " of " + std::to_string(nvars_) + " variables");
        int target_vars = assignment.empty() ? nvars_ : assignment[0].num_vars();
        for (const auto& p : assignment)
            if (p.num_vars() != target_vars)
                throw VariableCountMismatch("substitution targets disagree on variable count");

        Polynomial out(ring_, target_vars);
        std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(nvars_));
        auto power_of = [&](int v, int e) -> const Polynomial& {
            auto& cache = powers[static_cast<std::size_t>(v)];
            if (cache.empty()) cache.push_back(constant(ring_, target_vars, ring_.one()));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * assignment[v]);
            return cache[static_cast<std::size_t>(e)];
        };
        for (const auto& [m, c] : terms_) {
            Polynomial term = constant(ring_, target_vars, c);
            for (int v = 0; v < nvars_; ++v)
                if (m.e[v] > 0) term = term * power_of(v, m.e[v]);
            out = out + term;
        }
        return out;
    }

    // Substitution given as a partial map over the 0-based variable indices;
    // every variable actually appearing must be covered.
    Polynomial substitute(const std::map<int, Polynomial>& assignment, int target_vars) const {
        std::vector<Polynomial> full;
        full.reserve(static_cast<std::size_t>(nvars_));
        std::vector<bool> appears(static_cast<std::size_t>(nvars_), false);
        for (const auto& [m, c] : terms_)
            for (int v = 0; v < nvars_; ++v)
                if (m.e[v] > 0) appears[v] = true;
        for (int v = 0; v < nvars_; ++v) {
            auto it = assignment.find(v);
            if (it != assignment.end()) {
                full.push_back(it->second);
            } else {
                if (appears[v])
                    throw MissingAssignment("no assignment for variable x" + std::to_string(v + 1));
                full.push_back(Polynomial(ring_, target_vars));
            }
        }
        return substitute(full);
    }

    // Evaluate at a point with coordinates in the coefficient ring.
    Coeff eval(const std::vector<Coeff>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw DimensionMismatch("point arity " + std::to_string(point.size()) + " vs " +
                                    std::to_string(nvars_));
        Coeff out = ring_.zero();
        std::vector<std::vector<Coeff>> powers(static_cast<std::size_t>(nvars_));
        auto power_of = [&](int v, int e) -> const Coeff& {
            auto& cache = powers[static_cast<std::size_t>(v)];
            if (cache.empty()) cache.push_back(ring_.one());
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(ring_.mul(cache.back(), point[static_cast<std::size_t>(v)]));
            return cache[static_cast<std::size_t>(e)];
        };
        for (const auto& [m, c] : terms_) {
            Coeff t = c;
            for (int v = 0; v < nvars_; ++v)
                if (m.e[v] > 0) t = ring_.mul(t, power_of(v, m.e[v]));
            out = ring_.add(out, t);
        }
        return out;
    }

private:
    void check_compatible(const Polynomial& other) const {
        if (nvars_ != other.nvars_)
            throw VariableCountMismatch(std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) +
                                        " variables");
        if (!ring_.same(other.ring_))
            throw RingMismatch("operands live in different coefficient rings");
    }

    Ring ring_;
    int nvars_;
    TermMap terms_;
};

using PolyQ = Polynomial<RationalRing>;
using PolyA = Polynomial<WeilRing>;

// Coefficient-wise injection Q -> Q*1_A. This is the prolongation f -> f^A
// on the polynomial model (module prolong re-exports it under that name).
PolyA inject_coefficients(const PolyQ& p, const WeilRing& ring);

// Evaluate a rational polynomial at a tuple of algebra points.
AlgElement eval_at_algebra_point(const PolyQ& p, const WeilRing& ring,
                                 const std::vector<AlgElement>& point);

// Grammar: poly := ['+'|'-'] term (('+'|'-') term)* ;
//          term := coeff? (var ('^' uint)?)+ | coeff ;
//          coeff := int ('/' uint)? ; var := 'x' uint (1-based).
// Whitespace-insensitive; juxtaposition multiplies.
PolyQ parse_poly(const std::string& text, int num_vars);
// Variant that infers the variable count from the largest index used.
PolyQ parse_poly_auto(const std::string& text, int min_vars = 1);

std::string poly_str(const PolyQ& p);
std::string poly_str(const PolyQ& p, const std::vector<std::string>& names);
std::string poly_str(const PolyA& p);
std::string poly_str(const PolyA& p, const std::vector<std::string>& names);

// Deterministic sampler used by property tests and the claim checker:
// at most `max_terms` monomials of total degree <= max_deg with small
// integer coefficients drawn from the given inclusive range.
template <class Ring>
Polynomial<Ring> random_polynomial(std::mt19937_64& rng, const Ring& ring, int num_vars, int max_deg,
                                   int max_terms = 4, int coeff_bound = 3) {
    Polynomial<Ring> out(ring, num_vars);
    auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m{std::vector<int>(static_cast<std::size_t>(num_vars))};
        int budget = uniform(0, max_deg);
        for (int v = 0; v < num_vars && budget > 0; ++v) {
            int e = uniform(0, budget);
            m.e[v] = e;
            budget -= e;
        }
        int c = 0;
        while (c == 0) c = uniform(-coeff_bound, coeff_bound);
        out.add_term(std::move(m), ring.scale(Rational(c), ring.one()));
    }
    return out;
}

// Random algebra element with small integer coordinates.
AlgElement random_element(std::mt19937_64& rng, const WeilAlgebra& algebra, int coeff_bound = 3);

}  // namespace weilbund
