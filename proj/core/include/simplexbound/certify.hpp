#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "simplexbound/algebraic.hpp"
#include "simplexbound/bounds.hpp"
#include "simplexbound/faces.hpp"
#include "simplexbound/multipoly.hpp"
#include "simplexbound/sylvester.hpp"

namespace simplexbound {

// Which real roots of F the parametrization is restricted to.
struct SelectAll {};
struct SelectInterval {
    RatInterval iv;  // closed
};
struct SelectThom {
    std::vector<int> signs;  // signs of F', F'', ... at the root
};
using RurSelector = std::variant<SelectAll, SelectInterval, SelectThom>;

// Rational parametrization of a finite point set: for each selected real root
// t of F, the point (g[1](t)/g[0](t), ..., g[s](t)/g[0](t)).
struct Rur {
    UniPoly F;
    std::vector<UniPoly> g;  // g[0] is the common denominator; s = g.size() - 1
    RurSelector selector = SelectAll{};

    unsigned s() const { return static_cast<unsigned>(g.size()) - 1; }
};

// Checks F nonzero, g[0] nonzero, s >= 1, gcd(F, g[0]) constant.
void validate_rur(const Rur& u);

// P_sigma composed with the parametrization, denominators cleared by the
// ambient degree: pu = g0^d * P_sigma(g1/g0, ..., gs/g0), g0d = g0^d.
struct ComposedInput {
    UniPoly pu;
    UniPoly g0d;
    unsigned long clearing_exponent = 0;
    bool rur_oversized = false;  // supplied parametrization exceeds declared size bounds
};
ComposedInput compose_pu(const RestrictedPoly& psigma, const Rur& u);

// R(Z) = Res_T(pu - Z * g0d, F) and the distinct real roots of its square-free
// part, ascending. Every value of pu/g0d at a root of F is among the roots.
struct CriticalValues {
    ParamResultant resultant;
    UniPoly r_squarefree;
    std::vector<AlgebraicNumber> values;
};
CriticalValues critical_values(const ComposedInput& ci, const UniPoly& F);

// Coordinate enclosure of the point attached to the root t of u.F, each
// coordinate interval no wider than width. Refines t in place.
std::vector<RatInterval> associated_point(const Rur& u, AlgebraicNumber& t, const Rat& width);

enum class CertStatus { Complete, Nonpositive, Incomplete };
std::string to_string(CertStatus s);

enum class WitnessLocation { Inside, Outside, Undecided };
std::string to_string(WitnessLocation w);

struct UnivariateCandidate {
    AlgebraicNumber location;  // a point of [0, 1]
    AlgebraicNumber value;
    bool endpoint = false;
};

// Exact minimum of p over [0, 1] from the candidate set {p(0), p(1)} plus the
// interior critical values, each certified to be a root of the parametric
// resultant R(Z) = Res_T(p - Z, p').
struct UnivariateCertificate {
    std::vector<UnivariateCandidate> candidates;
    std::optional<ParamResultant> resultant;  // present when deg p >= 1
    AlgebraicNumber minimum;
    std::vector<std::size_t> argmin;  // all candidate indices attaining the minimum
    bool positive = false;
    CertStatus status = CertStatus::Complete;
    std::optional<UnivariateBound> bound;  // present when positive and deg p >= 1
    bool bound_checked = false;            // minimum > 2^-L verified exactly
};
UnivariateCertificate certify_univariate_min(const UniPoly& p);

struct RurWitness {
    AlgebraicNumber t;
    std::size_t value_index = 0;          // into the face's critical values
    std::vector<RatInterval> point;       // local face coordinates
    WitnessLocation location = WitnessLocation::Undecided;
};

struct MinCandidate {
    AlgebraicNumber value;
    std::size_t face_index = 0;
    bool attained = false;  // value certainly attained on the closed simplex
    std::string origin;     // vertex | edge | constant | zero-restriction | interior-critical
};

struct FaceReport {
    SimplexFace face;
    std::string kind;  // vertex | edge | constant | zero-restriction |
                       // no-critical-points | missing-rur | interior-rur
    std::optional<Rat> vertex_value;
    std::optional<UnivariateCertificate> edge;
    std::optional<ParamResultant> resultant;
    std::vector<AlgebraicNumber> critical_values;
    std::vector<RurWitness> witnesses;
    bool rur_oversized = false;
};

struct SimplexCertificate {
    unsigned long k = 0, d = 0, tau = 0;
    std::vector<FaceReport> faces;
    std::vector<MinCandidate> candidates;
    AlgebraicNumber minimum;             // greatest lower bound this run certified
    std::vector<std::size_t> argmin;
    bool minimum_attained = false;       // some argmin candidate is certainly attained
    bool positive = false;
    CertStatus status = CertStatus::Complete;
    std::vector<SimplexFace> missing;    // faces that needed a parametrization
    std::optional<SimplexBound> bound;   // present when minimum > 0
    bool bound_checked = false;
    AlgebraicNumber lower_bound_all;     // min over candidates and all critical values,
                                         // dropped witnesses included
};

// Certifies min over the standard k-simplex by exhausting faces: vertices
// exactly, dimension-1 faces by the univariate pipeline, higher faces by
// supplied parametrizations of their critical sets (keyed by face.key()).
// Requires P nonzero with nvars >= 1. When within is given, the sweep covers
// that closed face only (the face and all its subfaces), certifying the
// minimum over the closed sub-simplex.
SimplexCertificate certify_simplex_min(const MultiPoly& P, const std::map<std::string, Rur>& rurs,
                                       const std::optional<SimplexFace>& within = std::nullopt);

}  // namespace simplexbound
