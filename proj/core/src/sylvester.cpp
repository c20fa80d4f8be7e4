#include "simplexbound/sylvester.hpp"

#include <stdexcept>

#include "simplexbound/errors.hpp"

namespace simplexbound {

std::vector<std::vector<Int>> SylvesterMatrix::evaluate(const Int& z) const {
    std::vector<std::vector<Int>> m(dim(), std::vector<Int>(dim(), Int(0)));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) m[i][j] = entries[i][j].c0 + entries[i][j].c1 * z;
    return m;
}

std::vector<std::vector<UniPoly>> SylvesterMatrix::symbolic() const {
    std::vector<std::vector<UniPoly>> m(dim(), std::vector<UniPoly>(dim()));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            m[i][j] = UniPoly(std::vector<Int>{entries[i][j].c0, entries[i][j].c1});
    return m;
}

SylvesterMatrix sylvester_matrix(const UniPoly& A, const UniPoly& B, const UniPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("sylvester_matrix: g is zero");
    if (A.is_zero() && B.is_zero()) throw std::invalid_argument("sylvester_matrix: pencil is zero");
    const std::size_t nf = static_cast<std::size_t>(std::max({A.degree(), B.degree(), 0L}));
    const std::size_t ng = static_cast<std::size_t>(g.degree());
    if (nf == 0 && ng == 0)
        throw std::invalid_argument("sylvester_matrix: pencil and g both constant");

    SylvesterMatrix s;
    s.deg_f = nf;
    s.deg_g = ng;
    s.entries.assign(s.dim(), std::vector<AffineZ>(s.dim(), AffineZ{Int(0), Int(0)}));
    // row i of the f-block: coefficients of T^(nf), ..., T^0 of A - Z*B,
    // occupying columns i..i+nf
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j <= nf; ++j)
            s.entries[i][i + j] = AffineZ{A.coeff(nf - j), -B.coeff(nf - j)};
    for (std::size_t i = 0; i < nf; ++i)
        for (std::size_t j = 0; j <= ng; ++j)
            s.entries[ng + i][i + j] = AffineZ{g.coeff(ng - j), Int(0)};
    return s;
}

Int det_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("det_bareiss: matrix not square");
    if (n == 0) return Int(1);
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t r = k + 1;
            while (r < n && sgn(m[r][k]) == 0) ++r;
            if (r == n) return Int(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

ParamResultant resultant_in_Z(const UniPoly& A, const UniPoly& B, const UniPoly& g) {
    SylvesterMatrix s = sylvester_matrix(A, B, g);
    // Z appears only in the deg_g pencil rows, so deg_Z R <= deg_g: deg_g + 1
    // integer nodes pin R down.
    const std::size_t nodes = s.deg_g + 1;
    std::vector<Int> values(nodes);
    bool all_zero = true;
    for (std::size_t z = 0; z < nodes; ++z) {
        values[z] = det_bareiss(s.evaluate(Int(static_cast<unsigned long>(z))));
        if (sgn(values[z]) != 0) all_zero = false;
    }
    if (all_zero) throw DegenerateResultant("resultant vanishes identically in Z");

    // exact Lagrange interpolation over the integer nodes
    std::vector<Rat> acc(nodes, Rat(0));
    for (std::size_t z = 0; z < nodes; ++z) {
        if (sgn(values[z]) == 0) continue;
        // numerator polynomial prod_{w != z} (Z - w), denominator prod (z - w)
        std::vector<Rat> numer{Rat(1)};
        Int denom(1);
        for (std::size_t w = 0; w < nodes; ++w) {
            if (w == z) continue;
            std::vector<Rat> next(numer.size() + 1, Rat(0));
            Rat mw(-static_cast<long>(w));
            for (std::size_t i = 0; i < numer.size(); ++i) {
                next[i] += numer[i] * mw;
                next[i + 1] += numer[i];
            }
            numer = std::move(next);
            denom *= Int(static_cast<long>(z)) - Int(static_cast<long>(w));
        }
        Rat scale = make_rat(values[z], denom);
        for (std::size_t i = 0; i < numer.size(); ++i) acc[i] += numer[i] * scale;
    }
    std::vector<Int> coeffs(nodes, Int(0));
    for (std::size_t i = 0; i < nodes; ++i) {
        if (acc[i].get_den() != 1)
            throw std::logic_error("resultant interpolation produced a non-integer coefficient");
        coeffs[i] = acc[i].get_num();
    }
    ParamResultant pr;
    pr.R = UniPoly(std::move(coeffs));
    pr.leading_p = static_cast<unsigned long>(pr.R.degree());
    pr.trailing_q = 0;
    while (sgn(pr.R.coeff(pr.trailing_q)) == 0) ++pr.trailing_q;
    return pr;
}

Int hadamard_bound(const std::vector<std::vector<Int>>& rows) {
    Int prod(1);
    for (const auto& row : rows) {
        Int s(0);
        for (const auto& v : row) s += v * v;
        if (sgn(s) == 0) return Int(0);
        prod *= s;
    }
    return isqrt_ceil(prod);
}

Rat nonzero_root_lower_bound(const ParamResultant& pr) {
    if (pr.R.is_zero()) throw std::domain_error("nonzero_root_lower_bound: zero polynomial");
    Int s(0);
    for (const auto& c : pr.R.coeffs()) s += abs(c);
    return make_rat(1, s);
}

}  // namespace simplexbound
