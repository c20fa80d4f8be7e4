#include "simplexbound/unipoly.hpp"

#include <stdexcept>

namespace simplexbound {

namespace {
const Int kZero(0);
}

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(const Int& c, std::size_t deg) {
    if (sgn(c) == 0) return UniPoly();
    std::vector<Int> v(deg + 1, Int(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

const Int& UniPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Int& UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Int& s) const {
    if (sgn(s) == 0) return UniPoly();
    UniPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly base(*this), acc(Int(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Int> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
    return UniPoly(std::move(v));
}

Int UniPoly::eval(const Int& x) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

int UniPoly::sign_at(const Rat& x) const {
    // Horner over Z on the numerator of p(a/b) * b^deg.
    if (is_zero()) return 0;
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int acc(0), bp(1);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * a + c_[i] * bp;
        if (i > 0) bp *= b;
    }
    return sgn(acc);
}

unsigned long UniPoly::poly_bitsize() const {
    if (is_zero()) throw std::domain_error("poly_bitsize of zero polynomial");
    unsigned long m = 0;
    for (const auto& c : c_) m = std::max(m, bitsize(c));
    return m;
}

Int UniPoly::content() const {
    if (is_zero()) throw std::domain_error("content of zero polynomial");
    Int g(0);
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    Int g = content();
    UniPoly r(*this);
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

UniPoly UniPoly::taylor_shift(const Int& c) const {
    if (c_.size() <= 1 || sgn(c) == 0) return *this;
    std::vector<Int> a = c_;
    std::size_t n = a.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j-- > i;) a[j] += c * a[j + 1];
    return UniPoly(std::move(a));
}

UniPoly UniPoly::scale_arg(const Int& c) const {
    std::vector<Int> a = c_;
    Int p(1);
    for (std::size_t i = 1; i < a.size(); ++i) { p *= c; a[i] *= p; }
    return UniPoly(std::move(a));
}

UniPoly UniPoly::reverse(std::size_t n) const {
    if (degree() > static_cast<long>(n))
        throw std::logic_error("reverse: formal degree below actual degree");
    std::vector<Int> v(n + 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
    return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& c = c_[i];
        if (sgn(c) == 0) continue;
        Int a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = (a == 1);
        if (i == 0 || !unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem: zero divisor");
    if (a.degree() < b.degree()) return a;
    UniPoly r = a;
    const Int& lb = b.leading();
    long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        long shift = r.degree() - db;
        Int lr = r.leading();
        r = r * lb - b * UniPoly::monomial(lr, static_cast<std::size_t>(shift));
    }
    return r;
}

UniPoly divexact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("divexact: zero divisor");
    if (a.is_zero()) return UniPoly();
    long db = b.degree();
    if (a.degree() < db) throw std::logic_error("divexact: not divisible (degree)");
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db) + 1, Int(0));
    UniPoly r = a;
    while (!r.is_zero() && r.degree() >= db) {
        long shift = r.degree() - db;
        if (!mpz_divisible_p(r.leading().get_mpz_t(), b.leading().get_mpz_t()))
            throw std::logic_error("divexact: not divisible (leading)");
        Int c;
        mpz_divexact(c.get_mpz_t(), r.leading().get_mpz_t(), b.leading().get_mpz_t());
        q[static_cast<std::size_t>(shift)] = c;
        // top terms cancel, so the degree strictly drops each pass
        r = r - b * UniPoly::monomial(c, static_cast<std::size_t>(shift));
    }
    if (!r.is_zero()) throw std::logic_error("divexact: nonzero remainder");
    return UniPoly(std::move(q));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly();
    if (a.is_zero() || b.is_zero()) {
        UniPoly r = a.is_zero() ? b : a;
        return sgn(r.leading()) < 0 ? -r : r;
    }
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    UniPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        UniPoly r = pseudo_rem(u, v);
        u = v;
        v = r.is_zero() ? UniPoly() : r.primitive_part();
    }
    UniPoly g = u * cg;
    return sgn(g.leading()) < 0 ? -g : g;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    UniPoly pp = p.primitive_part();
    if (pp.degree() == 0) return UniPoly(Int(1));
    UniPoly g = gcd(pp, pp.derivative());
    UniPoly sf = divexact(pp, g).primitive_part();
    return sgn(sf.leading()) < 0 ? -sf : sf;
}

}  // namespace simplexbound
