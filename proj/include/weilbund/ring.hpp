#pragma once

#include <string>
#include <vector>

#include "weilbund/errors.hpp"
#include "weilbund/rational.hpp"
#include "weilbund/weil_algebra.hpp"

namespace weilbund {

// Coefficient rings for polynomials. Exactly two instances exist: the
// rationals and a Weil algebra. Ring handles are small value types stored
// inside each polynomial, so operations never need external context.

struct RationalRing {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem scale(const Rational& s, const Elem& a) const { return s * a; }
    Elem from_rational(const Rational& q) const { return q; }
    bool is_zero(const Elem& a) const { return weilbund::is_zero(a); }
    bool same(const RationalRing&) const { return true; }
    std::string str(const Elem& a) const { return rational_str(a); }
    std::string name() const { return "Q"; }

    // Real-coordinate view used when flattening matrices over the ring.
    int real_dim() const { return 1; }
    void real_coords(const Elem& a, std::vector<Rational>& out) const { out.assign(1, a); }
    Elem basis(int idx) const {
        if (idx != 0) throw IndexOutOfRange("rational ring basis index");
        return Rational(1);
    }
};

struct WeilRing {
    AlgebraPtr algebra;

    using Elem = AlgElement;

    Elem zero() const { return algebra->zero(); }
    Elem one() const { return algebra->unit(); }
    Elem add(const Elem& a, const Elem& b) const { return algebra->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return algebra->sub(a, b); }
    Elem neg(const Elem& a) const { return algebra->neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return algebra->mul(a, b); }
    Elem scale(const Rational& s, const Elem& a) const { return algebra->scale(s, a); }
    Elem from_rational(const Rational& q) const {
        Elem e = algebra->zero();
        e.coeffs[0] = q;
        return e;
    }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool same(const WeilRing& other) const {
        return algebra == other.algebra || algebra->structurally_equal(*other.algebra);
    }
    std::string str(const Elem& a) const { return algebra->element_str(a); }
    std::string name() const { return "A[" + algebra->description() + "]"; }

    int real_dim() const { return algebra->dim(); }
    void real_coords(const Elem& a, std::vector<Rational>& out) const { out = a.coeffs; }
    Elem basis(int idx) const { return algebra->basis_element(idx); }
};

}  // namespace weilbund
