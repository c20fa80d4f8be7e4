#pragma once

#include <string>
#include <vector>

#include "simplexbound/numeric.hpp"

namespace simplexbound {

// Dense univariate polynomial over Z, coefficients stored degree-0 first with
// no trailing zeros. The zero polynomial has an empty vector and degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(const Int& c) { if (sgn(c) != 0) c_.push_back(c); }
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly monomial(const Int& c, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(std::size_t i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Int& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly pow(unsigned long e) const;
    UniPoly derivative() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;

    // max over coefficients of bitsize; requires nonzero.
    unsigned long poly_bitsize() const;

    // gcd of |coefficients|, always positive; requires nonzero.
    Int content() const;
    // p / content(p); leading sign preserved.
    UniPoly primitive_part() const;

    // p(x + c), exact.
    UniPoly taylor_shift(const Int& c) const;
    // p(c * x).
    UniPoly scale_arg(const Int& c) const;
    // x^n * p(1/x) for formal degree n >= degree(); requires n >= degree().
    UniPoly reverse(std::size_t n) const;

    std::string to_string(const std::string& var = "T") const;

  private:
    void trim();
    std::vector<Int> c_;
};

// lc(b)^t * a reduced mod b for some 0 <= t <= deg a - deg b + 1; the exact
// power is irrelevant to primitive-PRS callers. Requires b nonzero.
UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b);

// Exact division; throws std::logic_error if the remainder is nonzero.
UniPoly divexact(const UniPoly& a, const UniPoly& b);

// Integer gcd (content folded in), positive leading coefficient.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'): primitive, positive leading coefficient, same distinct real
// roots as p without multiplicity. Requires p nonzero.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace simplexbound
