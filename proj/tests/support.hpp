#pragma once

// Shared test machinery: a Sturm-sequence root counter over exact rationals
// (independent of the library's Descartes isolation), rational square-root
// enclosures, random instance generators, and a subprocess runner.

#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "simplexbound/multipoly.hpp"
#include "simplexbound/numeric.hpp"
#include "simplexbound/unipoly.hpp"

namespace sbtest {

using simplexbound::Int;
using simplexbound::Rat;

// --- dense rational polynomials, just enough for Sturm chains ---

using RPoly = std::vector<Rat>;  // degree-0 first, trailing zeros allowed

inline RPoly rpoly_from(const simplexbound::UniPoly& p) {
    RPoly r;
    for (const Int& c : p.coeffs()) r.push_back(Rat(c));
    return r;
}

inline void rtrim(RPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline long rdeg(const RPoly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (sgn(p[i - 1]) != 0) return static_cast<long>(i - 1);
    return -1;
}

inline Rat reval(const RPoly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
    return acc;
}

inline RPoly rderiv(const RPoly& p) {
    RPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

inline RPoly rrem(RPoly a, const RPoly& b) {
    rtrim(a);
    long db = rdeg(b);
    while (rdeg(a) >= db && rdeg(a) >= 0) {
        long da = rdeg(a);
        Rat q = a[da] / b[db];
        for (long i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
        a[da] = Rat(0);
        rtrim(a);
    }
    return a;
}

// Sturm chain of p; counts distinct real roots in (a, b], requiring
// p(a) != 0 and p(b) != 0.
inline std::vector<RPoly> sturm_chain(const RPoly& p) {
    std::vector<RPoly> chain;
    RPoly p0 = p;
    rtrim(p0);
    chain.push_back(p0);
    RPoly p1 = rderiv(p0);
    rtrim(p1);
    if (rdeg(p1) < 0) return chain;
    chain.push_back(p1);
    while (true) {
        RPoly r = rrem(chain[chain.size() - 2], chain.back());
        if (rdeg(r) < 0) break;
        for (Rat& c : r) c = -c;
        chain.push_back(r);
    }
    return chain;
}

inline int sign_variations(const std::vector<RPoly>& chain, const Rat& x) {
    int v = 0, prev = 0;
    for (const RPoly& p : chain) {
        int s = sgn(reval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline int sturm_count(const RPoly& p, const Rat& a, const Rat& b) {
    auto chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Whole-line distinct-root count via a Cauchy bound on the root magnitudes.
inline int sturm_count_all(const simplexbound::UniPoly& p) {
    RPoly rp = rpoly_from(p);
    rtrim(rp);
    if (rdeg(rp) <= 0) return 0;
    Rat m(0);
    for (const Rat& c : rp)
        if (abs(c) > m) m = abs(c);
    Rat bound = Rat(1) + m / abs(rp[rp.size() - 1]);
    return sturm_count(rp, -bound, bound);
}

// --- rational enclosures of square roots of positive rationals ---

inline Rat sqrt_lower(const Rat& x, unsigned prec_bits = 64) {
    Int scaled = (x.get_num() * x.get_den()) << (2 * prec_bits);
    Int root = simplexbound::isqrt_floor(scaled);
    return simplexbound::make_rat(root, x.get_den() << prec_bits);
}

inline Rat sqrt_upper(const Rat& x, unsigned prec_bits = 64) {
    Int scaled = (x.get_num() * x.get_den()) << (2 * prec_bits);
    Int root = simplexbound::isqrt_ceil(scaled);
    return simplexbound::make_rat(root, x.get_den() << prec_bits);
}

// --- random instances ---

inline Int rand_coeff(std::mt19937_64& rng, unsigned tau) {
    // uniform magnitude below 2^tau, either sign, zero allowed
    unsigned long hi = (tau >= 63) ? ~0ul : ((1ul << tau) - 1);
    std::uniform_int_distribution<unsigned long> mag(0, hi);
    std::uniform_int_distribution<int> s(0, 1);
    Int c(static_cast<unsigned long>(mag(rng)));
    return s(rng) ? c : -c;
}

inline simplexbound::UniPoly rand_unipoly(std::mt19937_64& rng, unsigned deg, unsigned tau,
                                          bool force_degree = true) {
    std::vector<Int> cs(deg + 1);
    for (auto& c : cs) c = rand_coeff(rng, tau);
    if (force_degree && sgn(cs[deg]) == 0) cs[deg] = 1;
    return simplexbound::UniPoly(std::move(cs));
}

inline simplexbound::MultiPoly rand_multipoly(std::mt19937_64& rng, unsigned k, unsigned deg,
                                              unsigned tau, unsigned terms) {
    simplexbound::MultiPoly p(k);
    std::uniform_int_distribution<unsigned> pick(0, deg);
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<unsigned> exps(k, 0);
        unsigned budget = deg;
        for (unsigned i = 0; i < k; ++i) {
            std::uniform_int_distribution<unsigned> e(0, budget);
            exps[i] = e(rng);
            budget -= exps[i];
        }
        Int c = rand_coeff(rng, tau);
        if (sgn(c) != 0) p.add_term(exps, c);
    }
    return p;
}

// --- subprocess runner for CLI-level tests ---

struct RunResult {
    int code = -1;
    std::string out;
};

inline RunResult run_cmd(const std::string& cmd) {
    RunResult r;
    std::string full = cmd + " 2>/dev/null";
    FILE* p = popen(full.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    if (WIFEXITED(st)) r.code = WEXITSTATUS(st);
    return r;
}

inline std::string write_temp(const std::string& dir, const std::string& name,
                              const std::string& text) {
    std::string path = dir + "/" + name;
    FILE* f = std::fopen(path.c_str(), "wb");
    if (f) {
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    }
    return path;
}

}  // namespace sbtest
