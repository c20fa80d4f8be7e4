#include "simplexbound/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplexbound {

namespace {

// x^deg * 2-adic scaling: returns 2^deg * q(x/2), integer coefficients.
UniPoly half_arg(const UniPoly& q) {
    std::vector<Int> c = q.coeffs();
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] <<= (n - i);
    return UniPoly(std::move(c));
}

// Sign variations in the coefficient sequence, zeros skipped.
unsigned sign_variations(const UniPoly& q) {
    unsigned v = 0;
    int last = 0;
    for (const auto& c : q.coeffs()) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Descartes bound on the number of roots of q in the open unit interval.
unsigned descartes_unit_count(const UniPoly& q) {
    return sign_variations(q.reverse(static_cast<std::size_t>(q.degree())).taylor_shift(Int(1)));
}

AlgebraicNumber emit_rational(const Rat& r) {
    AlgebraicNumber a;
    a.poly = UniPoly(std::vector<Int>{-r.get_num(), r.get_den()});
    a.iv = RatInterval::point(r);
    a.sign_lo = 0;
    return a;
}

}  // namespace

AlgebraicNumber algebraic_from_rational(const Rat& r) { return emit_rational(r); }

std::vector<AlgebraicNumber> isolate_real_roots(
    const UniPoly& p, const std::optional<std::pair<Rat, Rat>>& range) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    std::vector<AlgebraicNumber> roots;
    if (p.degree() >= 1) {
        UniPoly sf = squarefree_part(p);
        UniPoly work = sf;
        // peel a root at the origin so every bisection chart has q(0) != 0
        if (sgn(work.coeff(0)) == 0) {
            roots.push_back(emit_rational(Rat(0)));
            std::vector<Int> shifted(work.coeffs().begin() + 1, work.coeffs().end());
            work = UniPoly(std::move(shifted));
        }
        if (work.degree() == 1) {
            Rat r = make_rat(-work.coeff(0), work.coeff(1));
            if (sgn(r) != 0) roots.push_back(emit_rational(r));
        } else if (work.degree() >= 2) {
            Int maxc(0);
            for (const auto& c : work.coeffs()) maxc = std::max(maxc, Int(abs(c)));
            Rat bound = Rat(1) + make_rat(maxc, abs(work.leading()));
            Int M = pow2(static_cast<unsigned long>(ceil_log2(bound)));
            // chart q on (0,1) represents w on (lo, hi); w is work with the
            // midpoint roots discovered along this path divided out, so cell
            // endpoints are never roots of w
            UniPoly q0 = work.taylor_shift(-M).scale_arg(2 * M);
            struct Node {
                UniPoly q;
                UniPoly w;
                Rat lo, hi;
            };
            std::vector<Node> stack{{q0, work, Rat(-M), Rat(M)}};
            while (!stack.empty()) {
                Node n = std::move(stack.back());
                stack.pop_back();
                unsigned v = descartes_unit_count(n.q);
                if (v == 0) continue;
                if (v == 1) {
                    AlgebraicNumber a;
                    a.poly = n.w;
                    a.iv = RatInterval(n.lo, n.hi);
                    a.sign_lo = n.w.sign_at(n.lo);
                    // a dyadic root has denominator 2^j dividing the leading
                    // coefficient; bisection endpoints stay on the dyadic grid,
                    // so refining past 2^-bit(lc) either lands on the root
                    // exactly or proves the root is not dyadic
                    refine(a, make_rat(Int(1), pow2(bitsize(n.w.leading()))));
                    roots.push_back(std::move(a));
                    continue;
                }
                UniPoly ql = half_arg(n.q);
                UniPoly qr = ql.taylor_shift(Int(1));
                Rat mid = (n.lo + n.hi) / 2;
                UniPoly w = n.w;
                if (sgn(qr.coeff(0)) == 0) {
                    roots.push_back(emit_rational(mid));
                    // the root is simple: strip it from both children, in the
                    // chart and in original coordinates
                    ql = divexact(ql, UniPoly(std::vector<Int>{Int(-1), Int(1)}));
                    std::vector<Int> s(qr.coeffs().begin() + 1, qr.coeffs().end());
                    qr = UniPoly(std::move(s));
                    w = divexact(w, UniPoly(std::vector<Int>{-mid.get_num(), mid.get_den()}));
                }
                stack.push_back({std::move(ql), w, n.lo, mid});
                stack.push_back({std::move(qr), std::move(w), mid, n.hi});
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
    if (range) {
        std::vector<AlgebraicNumber> kept;
        for (auto& r : roots)
            if (compare(r, range->first) >= 0 && compare(r, range->second) <= 0)
                kept.push_back(std::move(r));
        return kept;
    }
    return roots;
}

void refine(AlgebraicNumber& a, const Rat& target_width) {
    if (a.iv.is_point()) return;
    while (a.iv.width() > target_width) {
        Rat mid = (a.iv.lo + a.iv.hi) / 2;
        int s = a.poly.sign_at(mid);
        if (s == 0) {
            a.iv = RatInterval::point(mid);
            a.sign_lo = 0;
            return;
        }
        if (s == a.sign_lo)
            a.iv.lo = mid;
        else
            a.iv.hi = mid;
    }
}

namespace {

// one bisection step; returns false for point intervals
bool halve(AlgebraicNumber& a) {
    if (a.iv.is_point()) return false;
    Rat w = a.iv.width() / 2;
    refine(a, w);
    return true;
}

int compare_disjoint(const RatInterval& x, const RatInterval& y) {
    // open or point intervals that do not overlap compare by position;
    // a shared endpoint separates two open intervals (endpoints are not roots)
    if (x.is_point() && y.is_point()) return x.lo < y.lo ? -1 : (x.lo == y.lo ? 0 : 1);
    if (x.hi <= y.lo) return -1;
    if (y.hi <= x.lo) return 1;
    return 2;  // overlapping: undecided
}

}  // namespace

int compare(const AlgebraicNumber& a, const Rat& r) {
    if (a.is_rational()) {
        int c = cmp(a.rational_value(), r);
        return c < 0 ? -1 : (c == 0 ? 0 : 1);
    }
    if (r <= a.iv.lo) return 1;   // root lies strictly inside (lo, hi)
    if (r >= a.iv.hi) return -1;
    int s = a.poly.sign_at(r);
    if (s == 0) return 0;
    return s == a.sign_lo ? 1 : -1;  // same sign as at lo: root is to the right of r
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational()) return -compare(b, a.rational_value());
    if (b.is_rational()) return compare(a, b.rational_value());
    AlgebraicNumber x = a, y = b;
    for (int round = 0; round < 4; ++round) {
        int c = compare_disjoint(x.iv, y.iv);
        if (c != 2) return c;
        halve(x);
        halve(y);
        if (x.iv.is_point()) return -compare(y, x.rational_value());
        if (y.iv.is_point()) return compare(x, y.rational_value());
    }
    int c = compare_disjoint(x.iv, y.iv);
    if (c != 2) return c;
    // exact escalation: a common root inside the overlap is a root of the gcd,
    // and the overlap can hold at most one root of either polynomial
    UniPoly g = gcd(x.poly, y.poly);
    Rat olo = std::max(x.iv.lo, y.iv.lo);
    Rat ohi = std::min(x.iv.hi, y.iv.hi);
    if (!g.is_zero() && g.degree() >= 1 && g.sign_at(olo) * g.sign_at(ohi) < 0) return 0;
    while (true) {
        int d = compare_disjoint(x.iv, y.iv);
        if (d != 2) return d;
        halve(x);
        halve(y);
        if (x.iv.is_point()) return -compare(y, x.rational_value());
        if (y.iv.is_point()) return compare(x, y.rational_value());
    }
}

int sign_of_poly_at(const UniPoly& q, const AlgebraicNumber& a) {
    if (q.is_zero()) return 0;
    if (a.is_rational()) return q.sign_at(a.rational_value());
    UniPoly g = gcd(a.poly, q);
    if (g.degree() >= 1 && g.sign_at(a.iv.lo) * g.sign_at(a.iv.hi) < 0) return 0;
    AlgebraicNumber x = a;
    while (true) {
        RatInterval img = interval_eval(q, x.iv);
        if (!img.contains_zero()) return sgn(img.lo) > 0 ? 1 : -1;
        if (!halve(x)) return q.sign_at(x.rational_value());
    }
}

std::vector<int> thom_signs_at(const UniPoly& p, const AlgebraicNumber& a) {
    std::vector<int> out;
    UniPoly d = p.derivative();
    while (!d.is_zero()) {
        out.push_back(sign_of_poly_at(d, a));
        d = d.derivative();
    }
    return out;
}

}  // namespace simplexbound
