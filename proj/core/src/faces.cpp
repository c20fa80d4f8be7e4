#include "simplexbound/faces.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplexbound {

std::string SimplexFace::key() const {
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += "_";
        s += std::to_string(vertices[i]);
    }
    return s;
}

std::vector<SimplexFace> enumerate_faces(unsigned k) {
    if (k < 1) throw std::domain_error("enumerate_faces: k must be >= 1");
    if (k > 30) throw std::domain_error("enumerate_faces: k too large");
    std::vector<SimplexFace> out;
    for (unsigned mask = 1; mask < (1u << (k + 1)); ++mask) {
        SimplexFace f;
        f.k = k;
        for (unsigned v = 0; v <= k; ++v)
            if (mask & (1u << v)) f.vertices.push_back(v);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const SimplexFace& a, const SimplexFace& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return out;
}

unsigned long restriction_bitsize_bound(unsigned long tau, unsigned long d, unsigned k) {
    return tau + 1 + bitsize(Int(k)) * d;
}

unsigned long gradient_sos_bitsize_bound(unsigned long tau, unsigned long d, unsigned k) {
    unsigned long bk = bitsize(Int(k)), bd = bitsize(Int(d));
    return 2 * tau + (2 * d + 1) * bk + (k + 2) * bd + 2;
}

RestrictedPoly restrict_to_face(const MultiPoly& P, const SimplexFace& face) {
    if (P.is_zero()) throw std::domain_error("restrict_to_face: zero polynomial");
    const unsigned k = face.k;
    if (P.nvars() != k) throw std::domain_error("restrict_to_face: face/polynomial dimension mismatch");
    if (face.vertices.empty() || face.vertices.back() > k)
        throw std::domain_error("restrict_to_face: malformed face");

    const unsigned s = face.dim();
    RestrictedPoly rp;
    rp.face = face;
    rp.ambient_degree = static_cast<unsigned long>(P.total_degree());
    rp.ambient_bitsize = P.poly_bitsize();
    rp.declared_bitsize = restriction_bitsize_bound(rp.ambient_bitsize, rp.ambient_degree, k);

    // kept[j] = local index of ambient variable j+1, or -1 if that coordinate
    // is zero on the face; pivot = coordinate substituted by 1 - sum(Y)
    std::vector<int> kept(k, -1);
    int pivot = -1;
    if (face.contains_origin()) {
        for (unsigned l = 1; l < face.vertices.size(); ++l)
            kept[face.vertices[l] - 1] = static_cast<int>(l - 1);
    } else {
        pivot = static_cast<int>(face.vertices[0]) - 1;
        for (unsigned l = 1; l < face.vertices.size(); ++l)
            kept[face.vertices[l] - 1] = static_cast<int>(l - 1);
    }

    MultiPoly acc(s);
    // 1 - Y_1 - ... - Y_s, used for the pivot coordinate
    MultiPoly one_minus(s);
    if (pivot >= 0) {
        one_minus = MultiPoly::constant(s, 1);
        for (unsigned i = 0; i < s; ++i) one_minus = one_minus - MultiPoly::variable(s, i);
    }
    std::vector<MultiPoly> pivot_pows{MultiPoly::constant(s, 1)};

    std::vector<unsigned> local(s);
    for (const auto& [exps, c] : P.terms()) {
        bool dead = false;
        unsigned pivot_exp = 0;
        std::fill(local.begin(), local.end(), 0u);
        for (unsigned j = 0; j < k; ++j) {
            if (exps[j] == 0) continue;
            if (static_cast<int>(j) == pivot) {
                pivot_exp = exps[j];
            } else if (kept[j] >= 0) {
                local[static_cast<unsigned>(kept[j])] = exps[j];
            } else {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        MultiPoly term(s);
        term.add_term(local, c);
        if (pivot_exp > 0) {
            while (pivot_pows.size() <= pivot_exp)
                pivot_pows.push_back(pivot_pows.back() * one_minus);
            term = term * pivot_pows[pivot_exp];
        }
        acc = acc + term;
    }
    rp.poly = std::move(acc);

    if (!rp.poly.is_zero() && rp.poly.poly_bitsize() > rp.declared_bitsize)
        throw std::logic_error("face restriction exceeded its declared bitsize bound");
    if (rp.poly.total_degree() > static_cast<long>(rp.ambient_degree))
        throw std::logic_error("face restriction exceeded the ambient degree");
    return rp;
}

std::vector<Rat> embed_point(const SimplexFace& face, const std::vector<Rat>& y) {
    const unsigned s = face.dim();
    if (y.size() != s) throw std::domain_error("embed_point: wrong local dimension");
    std::vector<Rat> x(face.k, Rat(0));
    if (face.contains_origin()) {
        for (unsigned l = 1; l < face.vertices.size(); ++l) x[face.vertices[l] - 1] = y[l - 1];
    } else {
        Rat rest(0);
        for (const auto& v : y) rest += v;
        x[face.vertices[0] - 1] = Rat(1) - rest;
        for (unsigned l = 1; l < face.vertices.size(); ++l) x[face.vertices[l] - 1] = y[l - 1];
    }
    return x;
}

std::vector<RatInterval> embed_box(const SimplexFace& face, const std::vector<RatInterval>& y) {
    const unsigned s = face.dim();
    if (y.size() != s) throw std::domain_error("embed_box: wrong local dimension");
    std::vector<RatInterval> x(face.k, RatInterval::point(Rat(0)));
    if (face.contains_origin()) {
        for (unsigned l = 1; l < face.vertices.size(); ++l) x[face.vertices[l] - 1] = y[l - 1];
    } else {
        RatInterval rest = RatInterval::point(Rat(1));
        for (const auto& v : y) rest = iv_sub(rest, v);
        x[face.vertices[0] - 1] = rest;
        for (unsigned l = 1; l < face.vertices.size(); ++l) x[face.vertices[l] - 1] = y[l - 1];
    }
    return x;
}

GradientSOS gradient_sum_of_squares(const RestrictedPoly& rp) {
    const unsigned s = rp.face.dim();
    if (s < 1) throw std::domain_error("gradient_sum_of_squares: face must have dimension >= 1");
    GradientSOS g;
    MultiPoly q(s);
    for (unsigned i = 0; i < s; ++i) {
        MultiPoly p = rp.poly.partial(i);
        q = q + p * p;
    }
    g.q = std::move(q);
    g.restriction_constant = g.q.is_zero();
    g.degree_bound = rp.ambient_degree >= 1 ? 2 * rp.ambient_degree - 2 : 0;
    g.bitsize_bound = gradient_sos_bitsize_bound(rp.ambient_bitsize, rp.ambient_degree, rp.face.k);
    if (!g.q.is_zero()) {
        if (g.q.total_degree() > static_cast<long>(g.degree_bound))
            throw std::logic_error("gradient sum of squares exceeded its degree bound");
        if (g.q.poly_bitsize() > g.bitsize_bound)
            throw std::logic_error("gradient sum of squares exceeded its bitsize bound");
    }
    return g;
}

}  // namespace simplexbound
