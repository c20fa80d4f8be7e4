#include "simplexbound/numeric.hpp"

#include "simplexbound/errors.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace simplexbound {

unsigned long bitsize(const Int& n) {
    if (sgn(n) == 0) return 1;
    Int a = abs(n);
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

unsigned long ceil_log2(const Int& n) {
    if (sgn(n) <= 0) throw std::domain_error("ceil_log2: argument must be positive");
    // bitsize(n) - 1 = floor(log2 n); exact powers of two need no bump.
    unsigned long fl = bitsize(n) - 1;
    if (mpz_popcount(n.get_mpz_t()) == 1) return fl;
    return fl + 1;
}

long ceil_log2(const Rat& q) {
    if (sgn(q) <= 0) throw std::domain_error("ceil_log2: argument must be positive");
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (den == 1) return static_cast<long>(ceil_log2(num));
    // Least e with num <= 2^e * den.
    long e = static_cast<long>(bitsize(num)) - static_cast<long>(bitsize(den)) + 1;
    Rat p2 = (e >= 0) ? Rat(pow2(static_cast<unsigned long>(e)))
                      : make_rat(1, pow2(static_cast<unsigned long>(-e)));
    while (p2 >= q) { p2 /= 2; --e; }
    while (p2 < q) { p2 *= 2; ++e; }
    return e;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int pow2(unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
    return r;
}

Int isqrt_floor(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int isqrt_ceil(const Int& n) {
    Int r = isqrt_floor(n);
    if (r * r != n) r += 1;
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    auto slash = text.find('/');
    auto dot = text.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw InputError("rational literal mixes '/' and '.': " + text);
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            return make_rat(num, den);
        }
        if (dot != std::string::npos) {
            std::string head = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            if (frac.empty()) throw std::invalid_argument("trailing '.'");
            bool neg = !head.empty() && head[0] == '-';
            if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
            if (head.empty()) head = "0";
            Int whole(head);
            Int fracnum(frac);
            Int den = pow_int(10, frac.size());
            Rat q = make_rat(whole * den + fracnum, den);
            return neg ? Rat(-q) : q;
        }
        return Rat(Int(text));
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: " + text);
    } catch (const std::domain_error&) {
        throw InputError("zero denominator in rational literal: " + text);
    }
}

namespace {

constexpr unsigned long kFracBits = 64;

// Snap an MPFR value (already a directed bound) outward to the 2^-64 grid.
Rat dyadic_from_mpfr(mpfr_t x, bool round_up) {
    mpfr_mul_2ui(x, x, kFracBits, round_up ? MPFR_RNDU : MPFR_RNDD);
    Int scaled;
    mpfr_get_z(scaled.get_mpz_t(), x, round_up ? MPFR_RNDU : MPFR_RNDD);
    return make_rat(scaled, pow2(kFracBits));
}

}  // namespace

Rat log2_upper(const Int& n) {
    if (n < 1) throw std::domain_error("log2_upper: argument must be >= 1");
    if (mpz_popcount(n.get_mpz_t()) == 1) return Rat(static_cast<long>(bitsize(n) - 1));
    mpfr_t x;
    mpfr_init2(x, bitsize(n) + kFracBits + 16);
    mpfr_set_z(x, n.get_mpz_t(), MPFR_RNDU);
    mpfr_log2(x, x, MPFR_RNDU);
    Rat r = dyadic_from_mpfr(x, true);
    mpfr_clear(x);
    return r;
}

Rat log2_lower(const Int& n) {
    if (n < 1) throw std::domain_error("log2_lower: argument must be >= 1");
    if (mpz_popcount(n.get_mpz_t()) == 1) return Rat(static_cast<long>(bitsize(n) - 1));
    mpfr_t x;
    mpfr_init2(x, bitsize(n) + kFracBits + 16);
    mpfr_set_z(x, n.get_mpz_t(), MPFR_RNDD);
    mpfr_log2(x, x, MPFR_RNDD);
    Rat r = dyadic_from_mpfr(x, false);
    mpfr_clear(x);
    return r;
}

Rat pow_upper(const Int& base, const Rat& exp) {
    if (base < 1) throw std::domain_error("pow_upper: base must be >= 1");
    if (sgn(exp) < 0) throw std::domain_error("pow_upper: exponent must be >= 0");
    if (exp.get_den() == 1 && exp.get_num().fits_ulong_p())
        return Rat(pow_int(base, exp.get_num().get_ui()));
    // base >= 1 and rounding up at every step keeps the result an upper bound.
    Int prec_need = Int(bitsize(base)) * (exp.get_num() / exp.get_den() + 2) + 256;
    if (prec_need > (1 << 20)) prec_need = 1 << 20;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(prec_need.get_ui());
    mpfr_t b, e, r;
    mpfr_init2(b, prec);
    mpfr_init2(e, prec);
    mpfr_init2(r, prec);
    mpfr_set_z(b, base.get_mpz_t(), MPFR_RNDU);
    mpfr_set_q(e, exp.get_mpq_t(), MPFR_RNDU);
    mpfr_pow(r, b, e, MPFR_RNDU);
    Rat out = dyadic_from_mpfr(r, true);
    mpfr_clear(b);
    mpfr_clear(e);
    mpfr_clear(r);
    return out;
}

std::string decimal_string_round_up(const Rat& q, unsigned digits) {
    Int scale = pow_int(10, digits);
    Int num = q.get_num() * scale;
    const Int& den = q.get_den();
    Int quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(rem) != 0) quo += 1;  // ceiling
    bool neg = sgn(quo) < 0;
    Int a = abs(quo);
    std::string s = a.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return neg ? "-" + s : s;
}

}  // namespace simplexbound
