#pragma once

#include <string>
#include <vector>

#include "simplexbound/interval.hpp"
#include "simplexbound/multipoly.hpp"

namespace simplexbound {

// A nonempty face of the standard k-simplex conv{0, e_1, ..., e_k} in R^k,
// named by the ascending list of its vertex indices in {0, ..., k} (vertex 0
// is the origin). dim() == 0 is a vertex, dim() == k the whole simplex.
struct SimplexFace {
    unsigned k = 0;
    std::vector<unsigned> vertices;

    unsigned dim() const { return static_cast<unsigned>(vertices.size()) - 1; }
    bool contains_origin() const { return !vertices.empty() && vertices[0] == 0; }
    // "2" or "0_1_3": stable key for maps and RUR file names
    std::string key() const;
};

// All 2^(k+1) - 1 nonempty faces, dimension ascending, lexicographic within a
// dimension. Requires k >= 1.
std::vector<SimplexFace> enumerate_faces(unsigned k);

// tau + 1 + bit(k) * d: bitsize bound for any face restriction of a
// k-variate polynomial of degree d and bitsize tau.
unsigned long restriction_bitsize_bound(unsigned long tau, unsigned long d, unsigned k);

// 2*tau + (2d+1)*bit(k) + (k+2)*bit(d) + 2: bitsize bound for the gradient
// sum of squares of any face restriction.
unsigned long gradient_sos_bitsize_bound(unsigned long tau, unsigned long d, unsigned k);

// P pulled back to a face: a polynomial in s = dim() local coordinates
// Y_1..Y_s ranging over the standard s-simplex.
struct RestrictedPoly {
    SimplexFace face;
    MultiPoly poly{0};
    unsigned long ambient_degree = 0;
    unsigned long ambient_bitsize = 0;
    unsigned long declared_bitsize = 0;  // restriction_bitsize_bound at ambient sizes
};

// Zeroes the coordinates of absent vertices; when the origin is absent,
// substitutes the lowest present coordinate by 1 - sum of the others.
// Requires P nonzero with nvars == face.k.
RestrictedPoly restrict_to_face(const MultiPoly& P, const SimplexFace& face);

// Local face coordinates to ambient simplex coordinates (affine, exact).
std::vector<Rat> embed_point(const SimplexFace& face, const std::vector<Rat>& y);
std::vector<RatInterval> embed_box(const SimplexFace& face, const std::vector<RatInterval>& y);

// Q = sum over local coordinates of (dP_sigma/dY_i)^2; Q == 0 exactly when
// the restriction is constant (every point of the face is critical, flagged).
struct GradientSOS {
    MultiPoly q{0};
    bool restriction_constant = false;
    unsigned long degree_bound = 0;   // 2d - 2 in the ambient degree
    unsigned long bitsize_bound = 0;  // gradient_sos_bitsize_bound at ambient sizes
};

// Requires face.dim() >= 1.
GradientSOS gradient_sum_of_squares(const RestrictedPoly& rp);

}  // namespace simplexbound
