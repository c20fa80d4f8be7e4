#include <doctest.h>

#include <map>

#include "simplexbound/certify.hpp"
#include "simplexbound/errors.hpp"
#include "support.hpp"

using namespace simplexbound;

namespace {

UniPoly up(std::vector<long> cs) {
    std::vector<Int> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

// x^2 y^2 (x^2 + y^2 - 1) + 1
MultiPoly berg() {
    MultiPoly p(2);
    p.add_term({4, 2}, Int(1));
    p.add_term({2, 4}, Int(1));
    p.add_term({2, 2}, Int(-1));
    p.add_term({0, 0}, Int(1));
    return p;
}

// Parametrization of the four stationary points of the sextic: t runs over
// the roots of 3T^4 - 10T^2 + 3, the point is ((t^2+1)/(3t^3-5t), (2t^2-2)/(3t^3-5t)).
Rur berg_rur() {
    Rur u;
    u.F = up({3, 0, -10, 0, 3});
    u.g = {up({0, -5, 0, 3}), up({1, 0, 1}), up({-2, 0, 2})};
    return u;
}

// 1 + (cx - a)^2 + (cy - b)^2, minimized at (a/c, b/c) with value 1
MultiPoly paraboloid(long c, long a, long b) {
    MultiPoly p(2);
    p.add_term({2, 0}, Int(c) * Int(c));
    p.add_term({1, 0}, Int(-2) * c * a);
    p.add_term({0, 2}, Int(c) * Int(c));
    p.add_term({0, 1}, Int(-2) * c * b);
    p.add_term({0, 0}, Int(a) * a + Int(b) * b + 1);
    return p;
}

// its critical set: the single rational point (a/c, b/c)
Rur paraboloid_rur(long c, long a) {
    Rur u;
    u.F = up({-a, c});
    u.g = {up({1}), up({0, 1}), up({0, 1})};
    return u;
}

SimplexFace face_of(unsigned k, std::vector<unsigned> vs) {
    SimplexFace f;
    f.k = k;
    f.vertices = std::move(vs);
    return f;
}

}  // namespace

TEST_CASE("parametrization validation") {
    Rur u;
    u.F = up({-3, 0, 1});
    CHECK_THROWS_AS(validate_rur(u), InputError);  // no coordinates at all
    u.g = {up({1}), up({0, 1})};
    CHECK_NOTHROW(validate_rur(u));
    u.F = UniPoly();
    CHECK_THROWS_AS(validate_rur(u), InputError);
    u.F = up({-1, 0, 1});
    u.g[0] = UniPoly();
    CHECK_THROWS_AS(validate_rur(u), InputError);
    u.g[0] = up({-1, 1});  // shares the root 1 with F
    CHECK_THROWS_AS(validate_rur(u), InputError);
}

TEST_CASE("composition clears denominators exactly") {
    MultiPoly b = berg();
    RestrictedPoly rp = restrict_to_face(b, face_of(2, {0, 1, 2}));
    Rur u = berg_rur();
    ComposedInput ci = compose_pu(rp, u);
    CHECK(ci.clearing_exponent == 6);
    CHECK(ci.g0d == u.g[0].pow(6));
    CHECK_FALSE(ci.rur_oversized);

    // pu(t) = g0(t)^6 * P(g1/g0, g2/g0) at rational probe points
    for (const Rat& q : {Rat(2), Rat(-1), Rat(1, 2)}) {
        Rat g0v = u.g[0].eval(q);
        REQUIRE(sgn(g0v) != 0);
        Rat lhs = ci.pu.eval(q);
        Rat rhs = b.eval({u.g[1].eval(q) / g0v, u.g[2].eval(q) / g0v});
        for (int i = 0; i < 6; ++i) rhs *= g0v;
        CHECK(lhs == rhs);
    }

    Rur narrow;
    narrow.F = up({-2, 0, 1});
    narrow.g = {up({1}), up({0, 1})};
    CHECK_THROWS_AS(compose_pu(rp, narrow), InputError);  // s = 1 on a 2-face

    MultiPoly xy(2);
    xy.add_term({1, 1}, Int(1));
    RestrictedPoly zero_rp = restrict_to_face(xy, face_of(2, {0, 1}));
    CHECK_THROWS_AS(compose_pu(zero_rp, narrow), std::domain_error);
}

TEST_CASE("oversized parametrizations are flagged, not rejected") {
    MultiPoly p = paraboloid(2, 1, 1);
    RestrictedPoly rp = restrict_to_face(p, face_of(2, {0, 1, 2}));

    Rur tall = paraboloid_rur(2, 1);
    tall.F = UniPoly::monomial(Int(1), 13) - UniPoly(Int(2));  // degree 13 > D = 12
    CHECK(compose_pu(rp, tall).rur_oversized);

    Rur wide = paraboloid_rur(2, 1);
    wide.g[1] = UniPoly(pow2(4600));  // far past the declared coefficient size
    CHECK(compose_pu(rp, wide).rur_oversized);

    CHECK_FALSE(compose_pu(rp, paraboloid_rur(2, 1)).rur_oversized);
}

TEST_CASE("critical values of the composed sextic system") {
    MultiPoly b = berg();
    RestrictedPoly rp = restrict_to_face(b, face_of(2, {0, 1, 2}));
    Rur u = berg_rur();
    ComposedInput ci = compose_pu(rp, u);
    CriticalValues cv = critical_values(ci, u.F);

    // R(Z) = 2^48 * 3^6 * (27Z - 26)^4, bit for bit
    UniPoly expected = up({-26, 27}).pow(4) * UniPoly(pow2(48) * pow_int(Int(3), 6));
    CHECK(cv.resultant.R == expected);
    CHECK(cv.resultant.trailing_q == 0);
    CHECK(cv.resultant.leading_p == 4);
    CHECK(cv.r_squarefree == up({-26, 27}));
    REQUIRE(cv.values.size() == 1);
    REQUIRE(cv.values[0].is_rational());
    CHECK(cv.values[0].rational_value() == Rat(26, 27));
}

TEST_CASE("univariate certificate: strictly convex quadratic") {
    UnivariateCertificate c = certify_univariate_min(up({1, -2, 2}));
    REQUIRE(c.candidates.size() == 3);
    CHECK(c.candidates[0].endpoint);
    CHECK(c.candidates[0].value.rational_value() == Rat(1));
    CHECK(c.candidates[1].endpoint);
    CHECK(c.candidates[1].value.rational_value() == Rat(1));
    CHECK_FALSE(c.candidates[2].endpoint);
    CHECK(c.candidates[2].location.rational_value() == Rat(1, 2));
    REQUIRE(c.minimum.is_rational());
    CHECK(c.minimum.rational_value() == Rat(1, 2));
    CHECK(c.argmin == std::vector<std::size_t>{2});
    CHECK(c.positive);
    CHECK(c.status == CertStatus::Complete);
    REQUIRE(c.resultant.has_value());
    CHECK(c.resultant->R == up({8, -16}));
    REQUIRE(c.bound.has_value());
    CHECK(c.bound->value.L == 10);
    CHECK(c.bound_checked);
}

TEST_CASE("univariate certificate: the diagonal sextic") {
    UnivariateCertificate c = certify_univariate_min(up({1, 0, 0, -2, 6, -6, 2}));
    REQUIRE(c.candidates.size() == 3);
    CHECK(c.candidates[2].location.rational_value() == Rat(1, 2));
    REQUIRE(c.minimum.is_rational());
    CHECK(c.minimum.rational_value() == Rat(31, 32));
    CHECK(c.argmin == std::vector<std::size_t>{2});
    CHECK(c.positive);
    REQUIRE(c.resultant.has_value());
    // every candidate value is a root of the parametric resultant
    CHECK(c.resultant->R.sign_at(Rat(31, 32)) == 0);
    CHECK(c.resultant->R.sign_at(Rat(1)) == 0);
    CHECK(c.resultant->leading_p == 5);
    CHECK(c.resultant->trailing_q == 0);
    CHECK(c.bound_checked);
}

TEST_CASE("univariate certificate: linear, constant, empty") {
    UnivariateCertificate lin = certify_univariate_min(up({0, 1}));
    CHECK(lin.candidates.size() == 2);
    REQUIRE(lin.minimum.is_rational());
    CHECK(lin.minimum.rational_value() == Rat(0));
    CHECK(lin.argmin == std::vector<std::size_t>{0});
    CHECK_FALSE(lin.positive);
    CHECK(lin.status == CertStatus::Nonpositive);
    REQUIRE(lin.resultant.has_value());
    CHECK(lin.resultant->R == UniPoly(Int(1)));  // empty product
    CHECK_FALSE(lin.bound.has_value());

    UnivariateCertificate five = certify_univariate_min(UniPoly(Int(5)));
    CHECK(five.minimum.rational_value() == Rat(5));
    CHECK(five.positive);
    CHECK(five.status == CertStatus::Complete);
    CHECK_FALSE(five.resultant.has_value());
    CHECK_FALSE(five.bound.has_value());

    UnivariateCertificate neg = certify_univariate_min(UniPoly(Int(-3)));
    CHECK(neg.status == CertStatus::Nonpositive);

    CHECK_THROWS_AS(certify_univariate_min(UniPoly()), std::domain_error);
}

TEST_CASE("univariate certificate: irrational interior minimum") {
    UnivariateCertificate c = certify_univariate_min(up({0, -5, 0, 3}));
    REQUIRE(c.candidates.size() == 3);
    CHECK_FALSE(c.minimum.is_rational());
    // -10 sqrt(5) / 9 = -2.4845...
    CHECK(compare(c.minimum, Rat(-249, 100)) > 0);
    CHECK(compare(c.minimum, Rat(-62, 25)) < 0);
    CHECK(c.argmin == std::vector<std::size_t>{2});
    CHECK(c.status == CertStatus::Nonpositive);
    CHECK_FALSE(c.bound.has_value());
    REQUIRE(c.resultant.has_value());
    CHECK(sign_of_poly_at(c.resultant->R, c.minimum) == 0);
}

TEST_CASE("sharp family: minimum sits between the bound and its dyadic cap") {
    for (unsigned long d = 2; d <= 4; ++d)
        for (unsigned long k = 1; k <= 3; ++k) {
            UniPoly affine = up({-1, static_cast<long>(1ul << k)});
            UniPoly p = affine * affine + UniPoly::monomial(Int(1), d);
            UnivariateCertificate c = certify_univariate_min(p);
            CHECK(c.positive);
            CHECK(c.status == CertStatus::Complete);
            // p(2^-k) = 2^-dk caps the minimum from above
            CHECK(compare(c.minimum, make_rat(Int(1), pow2(d * k))) <= 0);
            UnivariateBound b = univariate_bound(d, 2 * k);
            CHECK(compare(c.minimum, make_rat(Int(1), pow2(b.value.L.get_ui()))) > 0);
            CHECK(compare(c.minimum, b.conservative) > 0);
        }
}

TEST_CASE("simplex certificate: sextic with its interior parametrization") {
    std::map<std::string, Rur> rurs;
    rurs.emplace("0_1_2", berg_rur());
    SimplexCertificate cert = certify_simplex_min(berg(), rurs);

    CHECK(cert.k == 2);
    CHECK(cert.d == 6);
    CHECK(cert.tau == 1);
    REQUIRE(cert.faces.size() == 7);
    CHECK(cert.faces[0].kind == "vertex");
    CHECK(*cert.faces[0].vertex_value == Rat(1));
    CHECK(*cert.faces[1].vertex_value == Rat(1));
    CHECK(*cert.faces[2].vertex_value == Rat(1));
    CHECK(cert.faces[3].kind == "edge");  // axis edges restrict to the constant 1
    CHECK(cert.faces[3].edge->minimum.rational_value() == Rat(1));
    CHECK(cert.faces[4].edge->minimum.rational_value() == Rat(1));
    CHECK(cert.faces[5].face.key() == "1_2");
    CHECK(cert.faces[5].edge->minimum.rational_value() == Rat(31, 32));

    const FaceReport& interior = cert.faces[6];
    CHECK(interior.kind == "interior-rur");
    CHECK_FALSE(interior.rur_oversized);
    UniPoly expected = up({-26, 27}).pow(4) * UniPoly(pow2(48) * pow_int(Int(3), 6));
    CHECK(interior.resultant->R == expected);
    REQUIRE(interior.critical_values.size() == 1);
    CHECK(interior.critical_values[0].rational_value() == Rat(26, 27));
    REQUIRE(interior.witnesses.size() == 4);
    for (const RurWitness& w : interior.witnesses) {
        CHECK(w.value_index == 0);
        CHECK(w.location == WitnessLocation::Outside);
    }

    // the witness at t = sqrt(3) encloses (1/sqrt3, 1/sqrt3) to width 2^-32
    const RurWitness& top = interior.witnesses[3];
    std::vector<AlgebraicNumber> roots = isolate_real_roots(up({-1, 0, 3}));
    REQUIRE(roots.size() == 2);
    AlgebraicNumber inv_sqrt3 = roots[1];
    Rat cap = make_rat(Int(1), pow2(32));
    for (const RatInterval& c : top.point) {
        CHECK(c.width() <= cap);
        CHECK(compare(inv_sqrt3, c.lo) >= 0);
        CHECK(compare(inv_sqrt3, c.hi) <= 0);
    }

    REQUIRE(cert.candidates.size() == 6);
    REQUIRE(cert.minimum.is_rational());
    CHECK(cert.minimum.rational_value() == Rat(31, 32));
    CHECK(cert.argmin == std::vector<std::size_t>{5});
    CHECK(cert.candidates[5].origin == "edge");
    CHECK(cert.minimum_attained);
    CHECK(cert.positive);
    CHECK(cert.status == CertStatus::Complete);
    CHECK(cert.missing.empty());
    REQUIRE(cert.lower_bound_all.is_rational());
    CHECK(cert.lower_bound_all.rational_value() == Rat(26, 27));
    REQUIRE(cert.bound.has_value());
    CHECK(cert.bound->rur.degree == 132);
    CHECK(cert.bound_checked);
}

TEST_CASE("simplex certificate: missing parametrization is reported, not guessed") {
    SimplexCertificate cert = certify_simplex_min(berg(), {});
    CHECK(cert.status == CertStatus::Incomplete);
    REQUIRE(cert.missing.size() == 1);
    CHECK(cert.missing[0].key() == "0_1_2");
    CHECK(cert.faces[6].kind == "missing-rur");
    CHECK(cert.minimum.rational_value() == Rat(31, 32));
    CHECK(cert.positive);
    // nothing dropped, so the conservative envelope equals the minimum
    CHECK(cert.lower_bound_all.rational_value() == Rat(31, 32));
}

TEST_CASE("simplex certificate: interior minimum through the parametrization") {
    std::map<std::string, Rur> rurs;
    rurs.emplace("0_1_2", paraboloid_rur(4, 1));
    SimplexCertificate cert = certify_simplex_min(paraboloid(4, 1, 1), rurs);

    const FaceReport& interior = cert.faces[6];
    CHECK(interior.kind == "interior-rur");
    REQUIRE(interior.witnesses.size() == 1);
    CHECK(interior.witnesses[0].location == WitnessLocation::Inside);
    REQUIRE(interior.critical_values.size() == 1);
    CHECK(interior.critical_values[0].rational_value() == Rat(1));

    REQUIRE(cert.minimum.is_rational());
    CHECK(cert.minimum.rational_value() == Rat(1));
    REQUIRE(cert.argmin.size() == 1);
    CHECK(cert.candidates[cert.argmin[0]].origin == "interior-critical");
    CHECK(cert.candidates[cert.argmin[0]].attained);
    CHECK(cert.minimum_attained);
    CHECK(cert.status == CertStatus::Complete);
    CHECK(cert.lower_bound_all.rational_value() == Rat(1));
    CHECK(cert.bound_checked);
}

TEST_CASE("simplex certificate: outside witness only lowers the envelope") {
    std::map<std::string, Rur> rurs;
    rurs.emplace("0_1_2", paraboloid_rur(4, 3));
    SimplexCertificate cert = certify_simplex_min(paraboloid(4, 3, 3), rurs);

    const FaceReport& interior = cert.faces[6];
    REQUIRE(interior.witnesses.size() == 1);
    CHECK(interior.witnesses[0].location == WitnessLocation::Outside);

    REQUIRE(cert.minimum.is_rational());
    CHECK(cert.minimum.rational_value() == Rat(3));  // diagonal edge at Y = 1/2
    CHECK(cert.status == CertStatus::Complete);
    // the dropped critical value still floors the conservative envelope
    CHECK(cert.lower_bound_all.rational_value() == Rat(1));
    for (const MinCandidate& c : cert.candidates) CHECK(c.origin != "interior-critical");
}

TEST_CASE("simplex certificate: face filter certifies the closed sub-simplex") {
    SimplexCertificate cert =
        certify_simplex_min(berg(), {}, face_of(2, {1, 2}));
    REQUIRE(cert.faces.size() == 3);
    CHECK(cert.faces[0].face.key() == "1");
    CHECK(cert.faces[1].face.key() == "2");
    CHECK(cert.faces[2].face.key() == "1_2");
    CHECK(cert.minimum.rational_value() == Rat(31, 32));
    CHECK(cert.status == CertStatus::Complete);
    CHECK(cert.missing.empty());

    SimplexCertificate vertex = certify_simplex_min(berg(), {}, face_of(2, {0}));
    CHECK(vertex.faces.size() == 1);
    CHECK(vertex.minimum.rational_value() == Rat(1));

    CHECK_THROWS_AS(certify_simplex_min(berg(), {}, face_of(3, {0, 1})), InputError);
    CHECK_THROWS_AS(certify_simplex_min(berg(), {}, face_of(2, {})), InputError);
    CHECK_THROWS_AS(certify_simplex_min(berg(), {}, face_of(2, {3})), InputError);
}

TEST_CASE("simplex certificate: nonpositive minima and degenerate inputs") {
    MultiPoly x(1);
    x.add_term({1}, Int(1));
    SimplexCertificate lin = certify_simplex_min(x, {});
    REQUIRE(lin.minimum.is_rational());
    CHECK(lin.minimum.rational_value() == Rat(0));
    CHECK(lin.status == CertStatus::Nonpositive);
    CHECK_FALSE(lin.positive);
    CHECK_FALSE(lin.bound.has_value());
    CHECK(lin.argmin.size() == 2);  // the origin vertex and the edge endpoint

    CHECK_THROWS_AS(certify_simplex_min(MultiPoly(2), {}), std::domain_error);

    SimplexCertificate five = certify_simplex_min(MultiPoly::constant(2, Int(5)), {});
    CHECK(five.faces.size() == 7);
    CHECK(five.faces[6].kind == "constant");
    CHECK(five.minimum.rational_value() == Rat(5));
    CHECK(five.status == CertStatus::Complete);
    CHECK(five.bound_checked);
}

TEST_CASE("simplex certificate: zero restrictions and unhandled interiors") {
    MultiPoly xy(2);
    xy.add_term({1, 1}, Int(1));
    SimplexCertificate cert = certify_simplex_min(xy, {});
    CHECK(cert.faces[3].kind == "zero-restriction");  // x2 = 0 kills x1*x2
    CHECK(cert.faces[4].kind == "zero-restriction");
    CHECK(cert.minimum.rational_value() == Rat(0));
    // nonpositive verdict wins over the missing interior parametrization
    CHECK(cert.status == CertStatus::Nonpositive);
    CHECK(cert.missing.size() == 1);
}
