#include "simplexbound/bounds.hpp"

#include <stdexcept>

namespace simplexbound {

namespace {

void require_positive(unsigned long v, const char* name) {
    if (v < 1) throw std::domain_error(std::string(name) + " must be >= 1");
}

Int bit(unsigned long v) { return Int(bitsize(Int(v))); }
Int bit(const Int& v) { return Int(bitsize(v)); }

}  // namespace

UnivariateBound univariate_bound(unsigned long d, unsigned long tau) {
    require_positive(d, "d");
    require_positive(tau, "tau");
    // squared inverse bound: 2^(2(2d-1)tau) * (d+1)^(4d-1) / 3^d is exact, so
    // the minimal L with 4^L >= it is ceil(ceil_log2(.)/2)
    Int num = pow2(2 * (2 * d - 1) * tau) * pow_int(Int(d) + 1, 4 * d - 1);
    Rat q_sq = make_rat(num, pow_int(3, d));
    long e = ceil_log2(q_sq);
    if (e < 0) e = 0;
    Int L(e / 2 + e % 2);  // ceil(e/2)

    UnivariateBound ub;
    ub.value.L = L;
    ub.value.log2_inverse_upper = Rat(Int((2 * d - 1) * tau)) +
                                  make_rat(Int(4 * d - 1), 2) * log2_upper(Int(d) + 1) -
                                  make_rat(Int(d), 2) * log2_lower(Int(3));
    ub.value.provenance = "univariate-theorem";
    ub.conservative = make_rat(pow_int(3, d / 2), pow2((2 * d - 1) * tau) * pow_int(Int(d) + 1, 2 * d));
    return ub;
}

RurSizeBounds rur_size_bounds(unsigned long k, unsigned long d, unsigned long tau) {
    require_positive(k, "k");
    require_positive(d, "d");
    require_positive(tau, "tau");
    RurSizeBounds r;
    r.degree = Int(2) * Int(d) * pow_int(Int(2) * Int(d) - 1, k - 1);
    r.tau_prime = Int(2) * Int(tau) + (Int(2) * Int(d) + 2) * bit(k) + (Int(k) + 3) * bit(d) + 5;
    Int kd2 = Int(2) * Int(k) * Int(d) - Int(2) * Int(k) + 2;
    r.bitsize = r.degree * kd2 * (r.tau_prime + 2 * bit(kd2 + 1) + 3 * bit(r.degree) + bit(k));
    return r;
}

SamplingSizeBounds sampling_size_bounds(unsigned long k, unsigned long d_q, unsigned long tau_q) {
    require_positive(k, "k");
    require_positive(d_q, "d_q");
    require_positive(tau_q, "tau_q");
    SamplingSizeBounds s;
    s.degree = (Int(d_q) + 2) * pow_int(Int(d_q) + 1, k - 1);
    Int sup = std::max(Int(tau_q), bit(2 * k));
    s.tau_prime = sup + 2 * bit(Int(k) * (Int(d_q) + 2)) + 1;
    Int kdq2 = Int(k) * Int(d_q) + 2;
    s.bitsize = s.degree * kdq2 * (s.tau_prime + 2 * bit(kdq2 + 1) + 3 * bit(s.degree) + bit(k));
    return s;
}

PuSizeBounds pu_size_bounds(unsigned long k, unsigned long d, unsigned long tau,
                            const RurSizeBounds& rur) {
    require_positive(k, "k");
    require_positive(d, "d");
    require_positive(tau, "tau");
    PuSizeBounds p;
    p.degree = rur.degree * Int(d);
    p.bitsize = Int(d) * (rur.bitsize + bit(rur.degree + 1)) + Int(tau) + Int(d) * bit(k) +
                Int(d) + Int(k) + 1;
    return p;
}

BoundValue minimum_bound_from_sizes(const Int& dU, const Int& tauU, const Int& dPu,
                                    const Int& tauPu) {
    if (dU < 2 || dPu < 2 || dU % 2 != 0 || dPu % 2 != 0)
        throw std::domain_error("minimum_bound_from_sizes: degrees must be even and >= 2");
    if (tauU < 1 || tauPu < 1)
        throw std::domain_error("minimum_bound_from_sizes: bitsizes must be >= 1");
    BoundValue b;
    b.L = dU * (tauPu + 1) + (dU / 2) * Int(ceil_log2(Int(dPu + 1))) + dPu * tauU +
          (dPu / 2) * Int(ceil_log2(Int(dU + 1)));
    b.log2_inverse_upper = Rat(dU * (tauPu + 1)) + Rat(dU / 2) * log2_upper(Int(dPu + 1)) +
                           Rat(dPu * tauU) + Rat(dPu / 2) * log2_upper(Int(dU + 1));
    b.provenance = "from-sizes";
    return b;
}

SimplexBound simplex_min_bound(unsigned long k, unsigned long d, unsigned long tau) {
    SimplexBound s;
    s.rur = rur_size_bounds(k, d, tau);
    s.pu = pu_size_bounds(k, d, tau, s.rur);
    s.value = minimum_bound_from_sizes(s.rur.degree, s.rur.bitsize, s.pu.degree, s.pu.bitsize);
    s.value.provenance = "simplex-theorem";
    return s;
}

Rat compact_bound(unsigned long k, unsigned long d, unsigned long tau) {
    require_positive(k, "k");
    require_positive(d, "d");
    require_positive(tau, "tau");
    Int dk1 = pow_int(Int(d), k + 1);
    Int dk2 = pow_int(Int(d), k + 2);
    Rat t1(Int(tau) * pow2(k + 3) * dk1 * Int(k));
    Rat t2(pow2(k + 6) * dk2 * Int(k) * Int(k));
    Rat t3 = Rat(pow2(k + 5) * dk2 * Int(k)) * log2_upper(Int(k));
    Rat t4 = Rat(pow2(k + 5) * dk1 * Int(k) * Int(k)) * log2_upper(Int(d));
    return t1 + t2 + t3 + t4;
}

Rat loera_santos_bound(unsigned long k, unsigned long d, unsigned long tau, const Rat& c) {
    require_positive(k, "k");
    require_positive(d, "d");
    require_positive(tau, "tau");
    if (sgn(c) <= 0) throw std::domain_error("c must be positive");
    Int B = std::max(Int(d) + 1, Int(k) + 1);
    Rat exp = c * Rat(Int(k) + 1);
    return Rat(Int(tau) + 1) * pow_upper(B, exp);
}

Rat canny_bound(unsigned long k, unsigned long d, unsigned long tau) {
    require_positive(k, "k");
    require_positive(d, "d");
    require_positive(tau, "tau");
    Rat logs = log2_upper(Int(6)) + log2_upper(Int(d)) + Rat(Int(d)) * log2_upper(Int(k)) +
               Rat(Int(d)) + Rat(Int(tau));
    return Rat((Int(k) + 1) * pow_int(Int(d), k + 1)) * logs;
}

}  // namespace simplexbound
