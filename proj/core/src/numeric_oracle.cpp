#include "simplexbound/numeric_oracle.hpp"

#include <algorithm>
#include <random>

#include "simplexbound/errors.hpp"

namespace simplexbound {

namespace {

// No library calls with platform-dependent rounding: term-by-term products
// and a fixed accumulation order keep results bit-identical across hosts.
double eval_double(const MultiPoly& P, const std::vector<double>& x) {
    double acc = 0.0;
    for (const auto& [exps, c] : P.terms()) {
        double t = c.get_d();
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (unsigned long e = 0; e < exps[i]; ++e) t *= x[i];
        acc += t;
    }
    return acc;
}

double unit_double(std::mt19937_64& rng) {
    // top 53 bits, uniform in [0,1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on {y >= 0, sum y <= 1}: spacings of k sorted uniforms.
std::vector<double> sample_simplex(std::mt19937_64& rng, unsigned k) {
    std::vector<double> u(k);
    for (auto& v : u) v = unit_double(rng);
    std::sort(u.begin(), u.end());
    std::vector<double> y(k);
    double prev = 0.0;
    for (unsigned i = 0; i < k; ++i) {
        y[i] = u[i] - prev;
        prev = u[i];
    }
    return y;
}

void clamp_to_simplex(std::vector<double>& y) {
    double s = 0.0;
    for (auto& v : y) {
        if (v < 0.0) v = 0.0;
        s += v;
    }
    if (s > 1.0)
        for (auto& v : y) v /= s;
}

}  // namespace

NumericEstimate numeric_min_estimate(const MultiPoly& P, unsigned long n_samples,
                                     unsigned long n_refine, unsigned long seed) {
    if (n_samples < 1) throw InputError("numeric_min_estimate: need at least one sample");
    const unsigned k = P.nvars();

    std::mt19937_64 rng(seed);
    NumericEstimate est;
    est.samples = n_samples;
    est.refinement_steps = n_refine;

    std::vector<double> best;
    double best_v = 0.0;
    for (unsigned long i = 0; i < n_samples; ++i) {
        std::vector<double> y = sample_simplex(rng, k);
        double v = eval_double(P, y);
        if (i == 0 || v < best_v) {
            best_v = v;
            best = std::move(y);
        }
    }

    // directions: coordinate steps and pairwise exchanges (the latter move
    // along the sum-one facet, where plain coordinate steps stall)
    std::vector<std::vector<double>> dirs;
    for (unsigned i = 0; i < k; ++i) {
        std::vector<double> d(k, 0.0);
        d[i] = 1.0;
        dirs.push_back(d);
        d[i] = -1.0;
        dirs.push_back(d);
    }
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j) {
            std::vector<double> d(k, 0.0);
            d[i] = 1.0;
            d[j] = -1.0;
            dirs.push_back(d);
            d[i] = -1.0;
            d[j] = 1.0;
            dirs.push_back(d);
        }

    double step = 0.25;
    for (unsigned long round = 0; round < n_refine; ++round) {
        bool improved = false;
        for (const auto& d : dirs) {
            std::vector<double> cand = best;
            for (unsigned i = 0; i < k; ++i) cand[i] += step * d[i];
            clamp_to_simplex(cand);
            double v = eval_double(P, cand);
            if (v < best_v) {
                best_v = v;
                best = std::move(cand);
                improved = true;
                break;
            }
        }
        if (!improved) step *= 0.5;
    }

    est.value = best_v;
    est.argmin = std::move(best);
    return est;
}

}  // namespace simplexbound
