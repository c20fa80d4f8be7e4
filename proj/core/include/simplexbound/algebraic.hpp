#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "simplexbound/interval.hpp"
#include "simplexbound/numeric.hpp"
#include "simplexbound/unipoly.hpp"

namespace simplexbound {

// A real algebraic number: a square-free primitive defining polynomial with
// positive leading coefficient, plus an isolating interval. Point intervals
// (lo == hi) hold exact rational values; open intervals (lo, hi) contain
// exactly one root of poly and neither endpoint is a root, so
// poly(lo) * poly(hi) < 0.
struct AlgebraicNumber {
    UniPoly poly;
    RatInterval iv;
    int sign_lo = 0;  // sign of poly at iv.lo; 0 for point intervals

    bool is_rational() const { return iv.is_point(); }
    const Rat& rational_value() const { return iv.lo; }
};

AlgebraicNumber algebraic_from_rational(const Rat& r);

// Distinct real roots of p, ascending, each as a point interval (exact
// rational hits) or an open isolating interval of squarefree_part(p). With a
// range, returns exactly the roots in the closed interval [range.first,
// range.second]. Requires p nonzero.
std::vector<AlgebraicNumber> isolate_real_roots(
    const UniPoly& p, const std::optional<std::pair<Rat, Rat>>& range = std::nullopt);

// Shrinks the isolating interval to width <= target by sign-preserving
// bisection; collapses to a point interval when a midpoint lands on the root.
void refine(AlgebraicNumber& a, const Rat& target_width);

// Three-way comparison of exact real values: -1, 0, +1. A fixed number of
// halving rounds first, then a gcd-based exact equality decision.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
int compare(const AlgebraicNumber& a, const Rat& r);
inline int compare(const Rat& r, const AlgebraicNumber& a) { return -compare(a, r); }

// Exact sign of q at the point a (0 when q vanishes there). Decided by
// gcd-divisibility for the zero case and interval refinement otherwise.
int sign_of_poly_at(const UniPoly& q, const AlgebraicNumber& a);

// Signs of p', p'', ..., p^(deg p) at the point a. Distinct roots of a
// square-free p always receive distinct vectors.
std::vector<int> thom_signs_at(const UniPoly& p, const AlgebraicNumber& a);

}  // namespace simplexbound
