#pragma once

#include <cstddef>
#include <vector>

#include "simplexbound/numeric.hpp"
#include "simplexbound/unipoly.hpp"

namespace simplexbound {

// matrix entry c0 + c1 * Z
struct AffineZ {
    Int c0;
    Int c1;
};

// Sylvester matrix of the pencil f(T, Z) = A(T) - Z * B(T) and g(T), in the
// layout with deg(g) stacked rows of f's coefficients (descending, shifting
// right) followed by deg(f) rows of g's. f's formal T-degree is
// max(deg A, deg B), so deg B > deg A is legal and simply puts affine entries
// in the leading columns.
struct SylvesterMatrix {
    std::size_t deg_f = 0;  // formal degree of the pencil in T
    std::size_t deg_g = 0;
    std::vector<std::vector<AffineZ>> entries;  // (deg_f + deg_g)^2

    std::size_t dim() const { return deg_f + deg_g; }
    std::vector<std::vector<Int>> evaluate(const Int& z) const;
    // entries as degree <= 1 polynomials in Z, for the symbolic determinant route
    std::vector<std::vector<UniPoly>> symbolic() const;
};

// Requires g nonzero, A and B not both zero, and the pencil and g not both
// constant in T.
SylvesterMatrix sylvester_matrix(const UniPoly& A, const UniPoly& B, const UniPoly& g);

// Fraction-free determinant (Bareiss) with row pivoting; exact over Z.
Int det_bareiss(std::vector<std::vector<Int>> m);

// Cofactor-expansion determinant for cross-checking; dimension capped at 10.
// Ring needs Ring(), Ring(const Int&), +, -, *.
template <class Ring>
Ring det_naive(const std::vector<std::vector<Ring>>& m) {
    const std::size_t n = m.size();
    if (n > 10) throw std::domain_error("det_naive: dimension capped at 10");
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("det_naive: matrix not square");
    if (n == 0) return Ring(Int(1));
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    struct Rec {
        const std::vector<std::vector<Ring>>& a;
        Ring run(std::size_t row, std::vector<std::size_t>& cs) {
            if (cs.size() == 1) return a[row][cs[0]];
            Ring acc{};
            for (std::size_t j = 0; j < cs.size(); ++j) {
                std::size_t c = cs[j];
                cs.erase(cs.begin() + static_cast<long>(j));
                Ring sub = run(row + 1, cs);
                cs.insert(cs.begin() + static_cast<long>(j), c);
                Ring term = a[row][c] * sub;
                if (j % 2 == 0)
                    acc = acc + term;
                else
                    acc = acc - term;
            }
            return acc;
        }
    } rec{m};
    return rec.run(0, cols);
}

// R(Z) = Res_T(A - Z*B, g): coefficient record with the trailing-zero index q
// (multiplicity of the root Z = 0) and leading index p = deg R.
struct ParamResultant {
    UniPoly R;
    unsigned long trailing_q = 0;
    unsigned long leading_p = 0;
};

// Evaluation-interpolation at Z = 0, 1, ..., deg(g); each specialization's
// determinant is computed fraction-free and the interpolation is exact with an
// integrality check. Throws DegenerateResultant if R vanishes identically.
ParamResultant resultant_in_Z(const UniPoly& A, const UniPoly& B, const UniPoly& g);

// ceil(sqrt(prod_i sum_j rows[i][j]^2)): row-norm determinant bound.
Int hadamard_bound(const std::vector<std::vector<Int>>& rows);

// 1 / sum_i |r_i|: every nonzero root r of the integer polynomial R satisfies
// |r| >= this value (the trailing nonzero coefficient has absolute value >= 1).
Rat nonzero_root_lower_bound(const ParamResultant& pr);

}  // namespace simplexbound
