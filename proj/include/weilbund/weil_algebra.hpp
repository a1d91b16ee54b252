#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weilbund/rational.hpp"

namespace weilbund {

// Element of a Weil algebra, as coordinates in the basis e_0,...,e_{dim-1}.
// The owning algebra is passed explicitly to the operations; elements are
// plain coefficient vectors so they can double as matrix rows.
struct AlgElement {
    std::vector<Rational> coeffs;

    bool operator==(const AlgElement& other) const { return coeffs == other.coeffs; }
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!weilbund::is_zero(c)) return false;
        return true;
    }
};

// Covector p on the algebra, p(e_alpha) = coeffs[alpha].
struct LinearForm {
    std::vector<Rational> coeffs;

    Rational apply(const AlgElement& a) const;
};

struct ValidationDefect {
    enum class Kind { structure, unit, commutativity, associativity, locality };
    Kind kind;
    std::vector<int> indices;  // the offending basis indices
    std::string detail;        // human-readable residual / witness

    std::string to_string() const;
};

struct ValidationReport {
    std::vector<ValidationDefect> defects;
    // Full defect enumerations can be enormous for mutated tables; the report
    // keeps the first few of each kind and counts the rest.
    std::size_t suppressed = 0;

    bool ok() const { return defects.empty() && suppressed == 0; }
    std::string to_string() const;
};

struct NilpotencyWitness {
    bool nilpotent;
    int exponent;  // smallest j with a^j = 0 when nilpotent, else 0
};

struct FrobeniusForm {
    std::vector<Rational> matrix;  // dim x dim, row-major: B[a][b] = p(e_a e_b)
    bool nondegenerate;
    std::vector<AlgElement> dual_basis;   // present iff nondegenerate
    std::vector<AlgElement> kernel;       // present iff degenerate
};

// Finite-dimensional commutative local algebra over the rationals, given by
// structure constants e_a * e_b = sum_g c[a][b][g] e_g with e_0 the unit and
// m = span(e_1,...,e_{dim-1}) the maximal ideal. Values are immutable after
// construction and safe to share across threads.
class WeilAlgebra {
public:
    // Generators. Each returns a fully validated algebra.
    static WeilAlgebra trivial();                       // A = Q, dim 1, height 0
    static WeilAlgebra dual_numbers();                  // Q[eps]/(eps^2)
    static WeilAlgebra jet(int k);                      // Q[t]/(t^{k+1})
    static WeilAlgebra truncated_poly(int r, int k);    // Q[y_1..y_r]/(deg > k)
    static WeilAlgebra tensor(const WeilAlgebra& left, const WeilAlgebra& right);

    // Arbitrary table, given as (a, b, g, value) entries; unlisted entries are
    // zero. Throws ConfigError on malformed input and Error("validation",...)
    // carrying the report text when the table is not a Weil algebra.
    static WeilAlgebra custom(int dim, const std::vector<std::tuple<int, int, int, Rational>>& entries,
                              std::vector<std::string> labels = {});

    // Validation entry point used by custom(); also callable on any table.
    // `quick` stops at the first defect.
    ValidationReport validate(bool quick = false, std::size_t max_per_kind = 8) const;

    int dim() const { return dim_; }
    int height() const { return height_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::string& description() const { return description_; }

    // Structure constant c[a][b][g].
    Rational structure_constant(int a, int b, int g) const;
    // Nonzero part of the product e_a e_b as (index, coefficient) pairs.
    const std::vector<std::pair<int, Rational>>& product_row(int a, int b) const;

    AlgElement zero() const { return AlgElement{std::vector<Rational>(static_cast<std::size_t>(dim_))}; }
    AlgElement unit() const { return basis_element(0); }
    AlgElement basis_element(int idx) const;
    AlgElement element(std::vector<Rational> coeffs) const;

    AlgElement add(const AlgElement& a, const AlgElement& b) const;
    AlgElement sub(const AlgElement& a, const AlgElement& b) const;
    AlgElement neg(const AlgElement& a) const;
    AlgElement mul(const AlgElement& a, const AlgElement& b) const;
    AlgElement scale(const Rational& s, const AlgElement& a) const;
    AlgElement power(const AlgElement& a, unsigned long n) const;

    Rational augmentation(const AlgElement& a) const;

    // Basis of m^j (j >= 1), computed by spanning products and row reduction.
    std::vector<AlgElement> ideal_power_basis(int j) const;
    const std::vector<std::vector<AlgElement>>& ideal_filtration() const { return filtration_; }

    NilpotencyWitness is_nilpotent(const AlgElement& a) const;

    FrobeniusForm frobenius_form(const LinearForm& p) const;

    bool structurally_equal(const WeilAlgebra& other) const;

    std::string element_str(const AlgElement& a) const;

    // Raw-table constructor; computes the height/filtration caches without
    // validating. Used by generators (correct by construction), by custom()
    // (which validates first), and by tests that build broken tables.
    static WeilAlgebra from_table_unchecked(int dim, std::vector<std::vector<std::pair<int, Rational>>> rows,
                                            std::vector<std::string> labels, std::string description);

    // Copy of the table with one structure constant changed by `delta`
    // (symmetrized is false: only the (a,b) row is touched, so commutativity
    // defects become visible). Caches are recomputed lazily on validate.
    WeilAlgebra mutated(int a, int b, int g, const Rational& delta) const;

private:
    WeilAlgebra() = default;

    void check_element(const AlgElement& a) const;
    // Accumulate s * (e_a e_b) into the dense scratch vector.
    void accumulate_product(int a, int b, const Rational& s, std::vector<Rational>& scratch) const;
    void compute_filtration();

    int dim_ = 0;
    int height_ = 0;
    std::vector<std::string> labels_;
    std::string description_;
    // rows_[a * dim_ + b] holds the nonzero entries of e_a e_b sorted by index.
    std::vector<std::vector<std::pair<int, Rational>>> rows_;
    std::vector<std::vector<AlgElement>> filtration_;  // filtration_[j-1] = basis of m^j
    bool filtration_valid_ = false;
};

using AlgebraPtr = std::shared_ptr<const WeilAlgebra>;

inline AlgebraPtr share(WeilAlgebra a) { return std::make_shared<const WeilAlgebra>(std::move(a)); }

}  // namespace weilbund
