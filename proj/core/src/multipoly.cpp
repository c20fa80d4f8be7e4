#include "simplexbound/multipoly.hpp"

#include <stdexcept>

namespace simplexbound {

MultiPoly MultiPoly::constant(unsigned nvars, const Int& c) {
    MultiPoly p(nvars);
    if (sgn(c) != 0) p.t_.emplace(std::vector<unsigned>(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned i) {
    if (i >= nvars) throw std::domain_error("variable index out of range");
    MultiPoly p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    p.t_.emplace(std::move(e), Int(1));
    return p;
}

Int MultiPoly::constant_value() const {
    if (t_.empty()) return Int(0);
    if (!is_constant()) throw std::logic_error("constant_value of nonconstant polynomial");
    return t_.begin()->second;
}

void MultiPoly::add_term(const std::vector<unsigned>& exps, const Int& c) {
    if (exps.size() != nvars_) throw std::domain_error("exponent vector length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = t_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

void MultiPoly::check_same_space(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::domain_error("operands live in different variable spaces");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_space(o);
    MultiPoly r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_space(o);
    MultiPoly r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_space(o);
    MultiPoly r(nvars_);
    std::vector<unsigned> e(nvars_);
    for (const auto& [ea, ca] : t_)
        for (const auto& [eb, cb] : o.t_) {
            for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Int& s) const {
    if (sgn(s) == 0) return MultiPoly(nvars_);
    MultiPoly r(*this);
    for (auto& [e, c] : r.t_) c *= s;
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly base(*this), acc = constant(nvars_, 1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

MultiPoly MultiPoly::partial(unsigned i) const {
    if (i >= nvars_) throw std::domain_error("partial: variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : t_) {
        if (e[i] == 0) continue;
        std::vector<unsigned> d = e;
        d[i] -= 1;
        r.add_term(d, c * Int(e[i]));
    }
    return r;
}

long MultiPoly::total_degree() const {
    if (t_.empty()) return -1;
    // descending graded order: the first term carries the total degree
    unsigned long d = 0;
    for (unsigned e : t_.begin()->first) d += e;
    return static_cast<long>(d);
}

unsigned long MultiPoly::poly_bitsize() const {
    if (t_.empty()) throw std::domain_error("poly_bitsize of zero polynomial");
    unsigned long m = 0;
    for (const auto& [e, c] : t_) m = std::max(m, bitsize(c));
    return m;
}

Rat MultiPoly::eval(const std::vector<Rat>& x) const {
    if (x.size() != nvars_) throw std::domain_error("eval: wrong point dimension");
    Rat acc(0);
    for (const auto& [e, c] : t_) {
        Rat term(c);
        for (unsigned i = 0; i < nvars_; ++i)
            for (unsigned j = 0; j < e[i]; ++j) term *= x[i];
        acc += term;
    }
    return acc;
}

UniPoly MultiPoly::to_unipoly() const {
    if (is_constant()) return UniPoly(constant_value());
    if (nvars_ != 1) throw std::logic_error("to_unipoly: polynomial is not univariate");
    std::vector<Int> c(static_cast<std::size_t>(total_degree()) + 1, Int(0));
    for (const auto& [e, coef] : t_) c[e[0]] = coef;
    return UniPoly(std::move(c));
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p) {
    MultiPoly r(1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.add_term({static_cast<unsigned>(i)}, p.coeff(i));
    return r;
}

}  // namespace simplexbound
