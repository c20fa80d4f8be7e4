#include "simplexbound/certify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "simplexbound/errors.hpp"

namespace simplexbound {

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Complete: return "complete";
        case CertStatus::Nonpositive: return "nonpositive";
        case CertStatus::Incomplete: return "incomplete";
    }
    return "?";
}

std::string to_string(WitnessLocation w) {
    switch (w) {
        case WitnessLocation::Inside: return "inside";
        case WitnessLocation::Outside: return "outside";
        case WitnessLocation::Undecided: return "undecided";
    }
    return "?";
}

void validate_rur(const Rur& u) {
    if (u.g.size() < 2)
        throw InputError("parametrization needs a denominator and at least one coordinate");
    if (u.F.is_zero()) throw InputError("parametrization: F is the zero polynomial");
    if (u.g[0].is_zero()) throw InputError("parametrization: denominator is the zero polynomial");
    if (gcd(u.F, u.g[0]).degree() >= 1)
        throw InputError("parametrization: F and the denominator share a root");
}

ComposedInput compose_pu(const RestrictedPoly& rp, const Rur& u) {
    validate_rur(u);
    const unsigned s = rp.face.dim();
    if (u.s() != s) throw InputError("parametrization dimension does not match the face");
    if (rp.poly.is_zero()) throw std::domain_error("compose_pu: zero restriction");
    const unsigned long d = rp.ambient_degree;

    std::vector<std::vector<UniPoly>> pows(u.g.size());
    for (std::size_t i = 0; i < u.g.size(); ++i) pows[i].push_back(UniPoly(Int(1)));
    auto pw = [&](std::size_t i, unsigned long e) -> const UniPoly& {
        auto& v = pows[i];
        while (v.size() <= e) v.push_back(v.back() * u.g[i]);
        return v[e];
    };

    UniPoly pu;
    for (const auto& [exps, c] : rp.poly.terms()) {
        unsigned long total = 0;
        UniPoly term{c};
        for (unsigned i = 0; i < s; ++i) {
            if (exps[i] == 0) continue;
            term = term * pw(i + 1, exps[i]);
            total += exps[i];
        }
        if (total > d) throw std::logic_error("restriction degree exceeds the clearing exponent");
        term = term * pw(0, d - total);
        pu = pu + term;
    }

    ComposedInput ci;
    ci.pu = std::move(pu);
    ci.g0d = pw(0, d);
    ci.clearing_exponent = d;

    // flag parametrizations larger than the declared critical-set sizes
    RurSizeBounds rb = rur_size_bounds(
        s, std::max(d, 1ul), restriction_bitsize_bound(rp.ambient_bitsize, d, rp.face.k));
    long max_deg = u.F.degree();
    unsigned long max_bits = u.F.poly_bitsize();
    for (const auto& gi : u.g) {
        max_deg = std::max(max_deg, gi.degree());
        if (!gi.is_zero()) max_bits = std::max(max_bits, gi.poly_bitsize());
    }
    ci.rur_oversized = Int(max_deg) > rb.degree || Int(max_bits) > rb.bitsize;
    if (!ci.rur_oversized && !ci.pu.is_zero() &&
        Int(ci.pu.degree()) > rb.degree * Int(d))
        throw std::logic_error("composed numerator exceeds its degree bound");
    return ci;
}

CriticalValues critical_values(const ComposedInput& ci, const UniPoly& F) {
    CriticalValues cv;
    cv.resultant = resultant_in_Z(ci.pu, ci.g0d, F);
    cv.r_squarefree = squarefree_part(cv.resultant.R);
    cv.values = isolate_real_roots(cv.r_squarefree);
    return cv;
}

namespace {

void halve_interval(AlgebraicNumber& a) {
    if (!a.iv.is_point()) refine(a, a.iv.width() / 2);
}

// Index of the root of `values` equal to the number enclosed by `enclose`
// applied to ever-tighter intervals around t. The enclosed value must be a
// root of the underlying polynomial, or this throws.
std::size_t identify_value(std::vector<AlgebraicNumber>& values, AlgebraicNumber& t,
                           const std::function<std::optional<RatInterval>(const RatInterval&)>& enclose) {
    std::vector<std::size_t> alive(values.size());
    std::iota(alive.begin(), alive.end(), std::size_t{0});
    while (true) {
        std::optional<RatInterval> J = enclose(t.iv);
        if (J) {
            std::vector<std::size_t> next;
            for (std::size_t idx : alive)
                if (values[idx].iv.intersects(*J)) next.push_back(idx);
            if (next.empty())
                throw std::logic_error("computed value is not a root of the parametric resultant");
            alive = std::move(next);
            if (alive.size() == 1) return alive[0];
            if (t.iv.is_point()) {
                // exact value: decide by exact comparison
                for (std::size_t idx : alive)
                    if (compare(values[idx], J->lo) == 0) return idx;
                throw std::logic_error("computed value is not a root of the parametric resultant");
            }
            for (std::size_t idx : alive) halve_interval(values[idx]);
        }
        halve_interval(t);
    }
}

// Certified strict comparison minimum > 2^-L for a positive minimum. Refines
// up to a generous cap; false means the theorem-backed margin was absent.
bool exceeds_dyadic(const AlgebraicNumber& m_in, const Int& L) {
    AlgebraicNumber m = m_in;
    for (int round = 0; round < 200; ++round) {
        if (sgn(m.iv.lo) > 0) {
            Rat inv = Rat(1) / m.iv.lo;
            long e = ceil_log2(inv);
            if (Int(e) < L) return true;  // m >= lo >= 2^-e > 2^-L
            if (Int(e) == L && L.fits_ulong_p()) {
                Rat dyadic = make_rat(1, pow2(L.get_ui()));
                if (m.is_rational()) return m.rational_value() > dyadic;
                if (m.iv.lo > dyadic) return true;
            }
            if (m.is_rational()) return false;
        }
        if (m.iv.is_point()) return false;
        halve_interval(m);
    }
    return false;
}

}  // namespace

std::vector<RatInterval> associated_point(const Rur& u, AlgebraicNumber& t, const Rat& width) {
    const unsigned s = u.s();
    while (true) {
        RatInterval den = interval_eval(u.g[0], t.iv);
        if (!den.contains_zero()) {
            std::vector<RatInterval> out;
            out.reserve(s);
            bool tight = true;
            for (unsigned i = 1; i <= s; ++i) {
                RatInterval xi = iv_div(interval_eval(u.g[i], t.iv), den);
                if (xi.width() > width) tight = false;
                out.push_back(std::move(xi));
            }
            if (tight) return out;
        }
        if (t.iv.is_point())
            throw std::logic_error("denominator vanishes at a parametrization root");
        halve_interval(t);
    }
}

UnivariateCertificate certify_univariate_min(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("certify_univariate_min: zero polynomial");
    UnivariateCertificate cert;
    const long d = p.degree();

    cert.candidates.push_back(
        {algebraic_from_rational(Rat(0)), algebraic_from_rational(p.eval(Rat(0))), true});
    cert.candidates.push_back(
        {algebraic_from_rational(Rat(1)), algebraic_from_rational(p.eval(Rat(1))), true});

    if (d >= 1) {
        UniPoly dp = p.derivative();
        cert.resultant = resultant_in_Z(p, UniPoly(Int(1)), dp);
        if (d >= 2) {
            UniPoly rsf = squarefree_part(cert.resultant->R);
            std::vector<AlgebraicNumber> vroots = isolate_real_roots(rsf);
            std::vector<AlgebraicNumber> crits =
                isolate_real_roots(dp, std::make_pair(Rat(0), Rat(1)));
            for (auto& x : crits) {
                if (compare(x, Rat(0)) <= 0 || compare(x, Rat(1)) >= 0) continue;
                AlgebraicNumber value;
                if (x.is_rational()) {
                    Rat v = p.eval(x.rational_value());
                    if (cert.resultant->R.sign_at(v) != 0)
                        throw std::logic_error(
                            "computed value is not a root of the parametric resultant");
                    value = algebraic_from_rational(v);
                } else {
                    auto enclose = [&](const RatInterval& iv) {
                        return std::optional<RatInterval>(interval_eval(p, iv));
                    };
                    value = vroots[identify_value(vroots, x, enclose)];
                }
                cert.candidates.push_back({std::move(x), std::move(value), false});
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < cert.candidates.size(); ++i)
        if (compare(cert.candidates[i].value, cert.candidates[best].value) < 0) best = i;
    cert.minimum = cert.candidates[best].value;
    for (std::size_t i = 0; i < cert.candidates.size(); ++i)
        if (compare(cert.candidates[i].value, cert.minimum) == 0) cert.argmin.push_back(i);
    cert.positive = compare(cert.minimum, Rat(0)) > 0;
    cert.status = cert.positive ? CertStatus::Complete : CertStatus::Nonpositive;
    if (cert.positive && d >= 1) {
        cert.bound = univariate_bound(static_cast<unsigned long>(d), p.poly_bitsize());
        cert.bound_checked = exceeds_dyadic(cert.minimum, cert.bound->value.L);
        if (!cert.bound_checked)
            throw std::logic_error("certified minimum violates its theorem bound");
    }
    return cert;
}

namespace {

bool selected(const RurSelector& sel, const UniPoly& F, const AlgebraicNumber& t) {
    if (std::holds_alternative<SelectAll>(sel)) return true;
    if (const auto* si = std::get_if<SelectInterval>(&sel))
        return compare(t, si->iv.lo) >= 0 && compare(t, si->iv.hi) <= 0;
    return thom_signs_at(F, t) == std::get<SelectThom>(sel).signs;
}

bool box_inside_simplex(const std::vector<RatInterval>& box) {
    Rat hi_sum(0);
    for (const auto& c : box) {
        if (sgn(c.lo) < 0) return false;
        hi_sum += c.hi;
    }
    return hi_sum <= 1;
}

bool box_misses_simplex(const std::vector<RatInterval>& box) {
    Rat lo_sum(0);
    for (const auto& c : box) {
        if (sgn(c.hi) < 0) return true;
        if (sgn(c.lo) > 0) lo_sum += c.lo;
    }
    return lo_sum > 1;
}

}  // namespace

namespace {

bool subface_of(const SimplexFace& f, const SimplexFace& outer) {
    return std::includes(outer.vertices.begin(), outer.vertices.end(), f.vertices.begin(),
                         f.vertices.end());
}

}  // namespace

SimplexCertificate certify_simplex_min(const MultiPoly& P, const std::map<std::string, Rur>& rurs,
                                       const std::optional<SimplexFace>& within) {
    if (P.is_zero()) throw std::domain_error("certify_simplex_min: zero polynomial");
    const unsigned k = P.nvars();
    if (k < 1) throw std::domain_error("certify_simplex_min: need at least one variable");
    if (within) {
        if (within->k != k) throw InputError("face filter does not match the variable count");
        if (within->vertices.empty()) throw InputError("face filter needs at least one vertex");
        for (unsigned v : within->vertices)
            if (v > k) throw InputError("face filter names a vertex outside 0..k");
    }

    SimplexCertificate cert;
    cert.k = k;
    cert.d = static_cast<unsigned long>(P.total_degree());
    cert.tau = P.poly_bitsize();

    const Rat witness_width = make_rat(1, pow2(32));
    const Rat giveup_width = make_rat(1, pow2(64));

    std::vector<SimplexFace> all_faces = enumerate_faces(k);
    for (const SimplexFace& face : all_faces) {
        if (within && !subface_of(face, *within)) continue;
        FaceReport fr;
        fr.face = face;
        const std::size_t face_index = cert.faces.size();
        const unsigned s = face.dim();

        if (s == 0) {
            Rat v = P.eval(embed_point(face, {}));
            fr.kind = "vertex";
            fr.vertex_value = v;
            cert.candidates.push_back(
                {algebraic_from_rational(v), face_index, true, "vertex"});
        } else {
            RestrictedPoly rp = restrict_to_face(P, face);
            if (rp.poly.is_zero()) {
                fr.kind = "zero-restriction";
                cert.candidates.push_back(
                    {algebraic_from_rational(Rat(0)), face_index, true, "zero-restriction"});
            } else if (s == 1) {
                fr.kind = "edge";
                fr.edge = certify_univariate_min(rp.poly.to_unipoly());
                cert.candidates.push_back({fr.edge->minimum, face_index, true, "edge"});
            } else if (rp.poly.is_constant()) {
                fr.kind = "constant";
                cert.candidates.push_back({algebraic_from_rational(Rat(rp.poly.constant_value())),
                                           face_index, true, "constant"});
            } else {
                GradientSOS gs = gradient_sum_of_squares(rp);
                if (gs.q.is_constant()) {
                    // nonzero constant gradient norm: no critical points; the
                    // closed-face minimum is attained on an enumerated subface
                    fr.kind = "no-critical-points";
                } else {
                    auto it = rurs.find(face.key());
                    if (it == rurs.end()) {
                        fr.kind = "missing-rur";
                        cert.missing.push_back(face);
                    } else {
                        fr.kind = "interior-rur";
                        const Rur& u = it->second;
                        ComposedInput ci = compose_pu(rp, u);
                        fr.rur_oversized = ci.rur_oversized;
                        CriticalValues cv = critical_values(ci, u.F);
                        fr.resultant = cv.resultant;
                        fr.critical_values = std::move(cv.values);

                        std::vector<AlgebraicNumber> troots = isolate_real_roots(u.F);
                        for (AlgebraicNumber& t : troots) {
                            if (!selected(u.selector, u.F, t)) continue;
                            RurWitness w;
                            w.t = t;
                            auto enclose = [&](const RatInterval& iv) -> std::optional<RatInterval> {
                                RatInterval den = interval_eval(ci.g0d, iv);
                                if (den.contains_zero()) return std::nullopt;
                                return iv_div(interval_eval(ci.pu, iv), den);
                            };
                            w.value_index = identify_value(fr.critical_values, w.t, enclose);

                            Rat width = witness_width;
                            while (true) {
                                w.point = associated_point(u, w.t, width);
                                if (box_inside_simplex(w.point)) {
                                    w.location = WitnessLocation::Inside;
                                    break;
                                }
                                if (box_misses_simplex(w.point)) {
                                    w.location = WitnessLocation::Outside;
                                    break;
                                }
                                if (width <= giveup_width) {
                                    w.location = WitnessLocation::Undecided;
                                    break;
                                }
                                width /= 256;
                            }
                            if (w.location != WitnessLocation::Outside)
                                cert.candidates.push_back({fr.critical_values[w.value_index],
                                                           face_index,
                                                           w.location == WitnessLocation::Inside,
                                                           "interior-critical"});
                            fr.witnesses.push_back(std::move(w));
                        }
                    }
                }
            }
        }
        cert.faces.push_back(std::move(fr));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < cert.candidates.size(); ++i)
        if (compare(cert.candidates[i].value, cert.candidates[best].value) < 0) best = i;
    cert.minimum = cert.candidates[best].value;
    for (std::size_t i = 0; i < cert.candidates.size(); ++i)
        if (compare(cert.candidates[i].value, cert.minimum) == 0) {
            cert.argmin.push_back(i);
            if (cert.candidates[i].attained) cert.minimum_attained = true;
        }
    cert.positive = compare(cert.minimum, Rat(0)) > 0;
    if (!cert.positive)
        cert.status = CertStatus::Nonpositive;
    else if (!cert.missing.empty())
        cert.status = CertStatus::Incomplete;
    else
        cert.status = CertStatus::Complete;

    cert.lower_bound_all = cert.minimum;
    for (const FaceReport& fr : cert.faces)
        for (const AlgebraicNumber& v : fr.critical_values)
            if (compare(v, cert.lower_bound_all) < 0) cert.lower_bound_all = v;

    if (cert.positive) {
        cert.bound = simplex_min_bound(k, std::max(cert.d, 1ul), cert.tau);
        cert.bound_checked = exceeds_dyadic(cert.minimum, cert.bound->value.L);
        bool oversized = false;
        for (const FaceReport& fr : cert.faces) oversized = oversized || fr.rur_oversized;
        if (cert.status == CertStatus::Complete && !oversized && !cert.bound_checked)
            throw std::logic_error("certified minimum violates the theorem bound");
    }
    return cert;
}

}  // namespace simplexbound
