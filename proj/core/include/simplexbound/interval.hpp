#pragma once

#include <algorithm>
#include <stdexcept>

#include "simplexbound/numeric.hpp"
#include "simplexbound/unipoly.hpp"

namespace simplexbound {

// Closed rational interval [lo, hi]; lo <= hi.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::logic_error("interval endpoints out of order");
    }
    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

inline RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval iv_sub(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

inline RatInterval iv_neg(const RatInterval& a) { return {-a.hi, -a.lo}; }

inline RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

// requires 0 not in b
inline RatInterval iv_div(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::logic_error("interval division by interval containing zero");
    Rat p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

// tight power: even powers of a zero-straddling interval start at 0
inline RatInterval iv_pow(const RatInterval& a, unsigned long e) {
    if (e == 0) return RatInterval::point(Rat(1));
    if (e % 2 == 1 || !a.contains_zero()) {
        RatInterval acc{Rat(1), Rat(1)};
        RatInterval base = a;
        unsigned long k = e;
        while (k > 0) {
            if (k & 1) acc = iv_mul(acc, base);
            k >>= 1;
            if (k) base = iv_mul(base, base);
        }
        if (e % 2 == 0 && a.contains_zero() && acc.lo < 0) acc.lo = 0;
        return acc;
    }
    Rat m = std::max(Rat(-a.lo), a.hi);
    Rat top(1);
    for (unsigned long i = 0; i < e; ++i) top *= m;
    return {Rat(0), top};
}

// Horner enclosure of p over x.
inline RatInterval interval_eval(const UniPoly& p, const RatInterval& x) {
    RatInterval acc = RatInterval::point(Rat(0));
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = iv_mul(acc, x);
        acc = iv_add(acc, RatInterval::point(Rat(p.coeff(i))));
    }
    return acc;
}

}  // namespace simplexbound
