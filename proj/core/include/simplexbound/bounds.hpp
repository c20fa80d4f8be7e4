#pragma once

#include <string>

#include "simplexbound/numeric.hpp"

namespace simplexbound {

// A certified positive lower bound 2^-L on a minimum, plus a display-grade
// upper estimate of log2(1/bound) (dyadic, 64 fractional bits, rounded up).
// L alone carries certification weight.
struct BoundValue {
    Int L;
    Rat log2_inverse_upper;
    std::string provenance;
};

struct UnivariateBound {
    BoundValue value;
    Rat conservative;  // rational minorant in lowest terms, weaker but closed-form
};

// Minimum of a positive integer polynomial of degree d and bitsize tau over
// [0,1] exceeds 3^(d/2) / (2^((2d-1)tau) * (d+1)^(2d-1/2)) > 2^-L.
// Requires d >= 1, tau >= 1.
UnivariateBound univariate_bound(unsigned long d, unsigned long tau);

struct RurSizeBounds {
    Int degree;     // d_u
    Int bitsize;    // tau_u
    Int tau_prime;  // intermediate data bitsize feeding tau_u
};

struct SamplingSizeBounds {
    Int degree;
    Int bitsize;
    Int tau_prime;
};

struct PuSizeBounds {
    Int degree;   // d_Pu
    Int bitsize;  // tau_Pu
};

// Representation sizes for the critical-set parametrization of a k-variate
// degree-d bitsize-tau input. Requires k, d, tau >= 1.
RurSizeBounds rur_size_bounds(unsigned long k, unsigned long d, unsigned long tau);

// General sampling form: sizes of a parametrization of the zero set of a
// k-variate polynomial of degree d_q and bitsize tau_q. rur_size_bounds is the
// closed-form counterpart at d_q = 2d-2; the two agree on the degree and
// differ on bitsize by a bounded, logged amount (see tests).
SamplingSizeBounds sampling_size_bounds(unsigned long k, unsigned long d_q, unsigned long tau_q);

// Sizes of the input polynomial composed with the parametrization.
PuSizeBounds pu_size_bounds(unsigned long k, unsigned long d, unsigned long tau,
                            const RurSizeBounds& rur);

// L = dU*(tauPu+1) + (dU/2)*ceil_log2(dPu+1) + dPu*tauU + (dPu/2)*ceil_log2(dU+1).
// Requires dU, dPu >= 2 and even.
BoundValue minimum_bound_from_sizes(const Int& dU, const Int& tauU, const Int& dPu,
                                    const Int& tauPu);

struct SimplexBound {
    BoundValue value;
    RurSizeBounds rur;
    PuSizeBounds pu;
};

// End-to-end: positive minimum of a k-variate degree-d bitsize-tau integer
// polynomial over the standard simplex exceeds 2^-L.
SimplexBound simplex_min_bound(unsigned long k, unsigned long d, unsigned long tau);

// Single-expression magnitude estimate of L (log2-of-inverse-bound units):
// tau*2^(k+3)*d^(k+1)*k + 2^(k+6)*d^(k+2)*k^2 + 2^(k+5)*d^(k+2)*k*log2(k)
// + 2^(k+5)*d^(k+1)*k^2*log2(d), logs rounded up to the dyadic grid.
Rat compact_bound(unsigned long k, unsigned long d, unsigned long tau);

// Comparison magnitudes from earlier general-purpose bounds, same log2 units.
Rat loera_santos_bound(unsigned long k, unsigned long d, unsigned long tau, const Rat& c);
Rat canny_bound(unsigned long k, unsigned long d, unsigned long tau);

}  // namespace simplexbound
