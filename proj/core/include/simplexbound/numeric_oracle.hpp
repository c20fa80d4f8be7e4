#pragma once

// Floating-point estimator of the simplex minimum. Validation only: results
// carry no certification weight and never feed the exact pipeline.

#include <vector>

#include "simplexbound/multipoly.hpp"

namespace simplexbound {

struct NumericEstimate {
    double value = 0.0;
    std::vector<double> argmin;
    unsigned long samples = 0;
    unsigned long refinement_steps = 0;
};

// Deterministic given the seed: best of n_samples uniform simplex points
// (sorted spacings), then n_refine rounds of projected coordinate descent
// with backtracking. Estimates from above: value >= true minimum - eps.
NumericEstimate numeric_min_estimate(const MultiPoly& P, unsigned long n_samples,
                                     unsigned long n_refine, unsigned long seed);

}  // namespace simplexbound
