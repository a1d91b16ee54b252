#include "weilbund/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace weilbund {

PolyA inject_coefficients(const PolyQ& p, const WeilRing& ring) {
    PolyA out(ring, p.num_vars());
    for (const auto& [m, c] : p.terms()) out.add_term(m, ring.from_rational(c));
    return out;
}

AlgElement eval_at_algebra_point(const PolyQ& p, const WeilRing& ring,
                                 const std::vector<AlgElement>& point) {
    return inject_coefficients(p, ring).eval(point);
}

AlgElement random_element(std::mt19937_64& rng, const WeilAlgebra& algebra, int coeff_bound) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(algebra.dim()));
    for (auto& c : coeffs) {
        long v = static_cast<long>(rng() % static_cast<unsigned long>(2 * coeff_bound + 1)) - coeff_bound;
        c = Rational(v);
    }
    return AlgElement{std::move(coeffs)};
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, int num_vars, bool auto_vars)
        : text_(text), num_vars_(num_vars), auto_vars_(auto_vars) {}

    PolyQ run() {
        std::vector<std::tuple<Rational, std::vector<std::pair<int, int>>>> parsed_terms;
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (text_[pos_] == '-') sign = -1;
            ++pos_;
        }
        parsed_terms.push_back(parse_term(sign));
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c != '+' && c != '-') fail({"'+'", "'-'", "end of input"});
            ++pos_;
            parsed_terms.push_back(parse_term(c == '-' ? -1 : 1));
        }

        int nv = num_vars_;
        if (auto_vars_) {
            nv = num_vars_;  // acts as the minimum
            for (const auto& [c, factors] : parsed_terms)
                for (const auto& [idx, e] : factors)
                    if (idx > nv) nv = idx;
        }
        PolyQ out(RationalRing{}, nv);
        for (auto& [c, factors] : parsed_terms) {
            Monomial m{std::vector<int>(static_cast<std::size_t>(nv))};
            for (const auto& [idx, e] : factors) m.e[static_cast<std::size_t>(idx) - 1] += e;
            out.add_term(std::move(m), c);
        }
        return out;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": found '" + found + "'",
                         pos_, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    long parse_uint(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({what});
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) fail({"smaller integer"});
            ++pos_;
        }
        return value;
    }

    // term := coeff? (var ('^' uint)?)+ | coeff
    std::tuple<Rational, std::vector<std::pair<int, int>>> parse_term(int sign) {
        skip_ws();
        Rational coeff(sign);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            long num = parse_uint("coefficient");
            long den = 1;
            if (peek() == '/') {
                ++pos_;
                den = parse_uint("denominator");
                if (den == 0) fail({"nonzero denominator"});
            }
            coeff *= rat(num, den);
            have_coeff = true;
        }
        std::vector<std::pair<int, int>> factors;
        while (true) {
            skip_ws();
            if (peek() != 'x') break;
            ++pos_;
            long idx = parse_uint("variable index");
            if (idx < 1) fail({"variable index >= 1"});
            if (!auto_vars_ && idx > num_vars_)
                throw ParseError("variable x" + std::to_string(idx) + " exceeds the " +
                                     std::to_string(num_vars_) + "-variable context",
                                 pos_, {"x1..x" + std::to_string(num_vars_)});
            int exp = 1;
            if (peek() == '^') {
                ++pos_;
                exp = static_cast<int>(parse_uint("exponent"));
            }
            factors.emplace_back(static_cast<int>(idx), exp);
        }
        if (!have_coeff && factors.empty()) fail({"coefficient", "variable"});
        return {coeff, factors};
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int num_vars_;
    bool auto_vars_;
};

std::string default_name(int index0) { return "x" + std::to_string(index0 + 1); }

std::string monomial_part(const Monomial& m, const std::vector<std::string>* names) {
    std::string s;
    for (std::size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] == 0) continue;
        if (!s.empty()) s += " ";
        s += names ? (*names)[v] : default_name(static_cast<int>(v));
        if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
    }
    return s;
}

std::string poly_str_q(const PolyQ& p, const std::vector<std::string>* names) {
    if (p.is_zero()) return "0";
    std::string out;
    // Canonical print order is descending graded-lex.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars = monomial_part(m, names);
        if (vars.empty()) {
            out += rational_str(mag);
        } else {
            if (mag != 1) out += rational_str(mag) + " ";
            out += vars;
        }
    }
    return out;
}

std::string poly_str_a(const PolyA& p, const std::vector<std::string>* names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += " + ";
        out += "(" + p.ring().str(c) + ")";
        std::string vars = monomial_part(m, names);
        if (!vars.empty()) out += " " + vars;
    }
    return out;
}

}  // namespace

PolyQ parse_poly(const std::string& text, int num_vars) {
    return PolyParser(text, num_vars, /*auto_vars=*/false).run();
}

PolyQ parse_poly_auto(const std::string& text, int min_vars) {
    return PolyParser(text, min_vars, /*auto_vars=*/true).run();
}

std::string poly_str(const PolyQ& p) { return poly_str_q(p, nullptr); }
std::string poly_str(const PolyQ& p, const std::vector<std::string>& names) { return poly_str_q(p, &names); }
std::string poly_str(const PolyA& p) { return poly_str_a(p, nullptr); }
std::string poly_str(const PolyA& p, const std::vector<std::string>& names) { return poly_str_a(p, &names); }

}  // namespace weilbund
