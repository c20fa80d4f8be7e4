#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "simplexbound/bounds.hpp"
#include "simplexbound/certify.hpp"
#include "simplexbound/multipoly.hpp"
#include "simplexbound/numeric_oracle.hpp"
#include "simplexbound/sylvester.hpp"
#include "simplexbound/unipoly.hpp"

using namespace simplexbound;

namespace {

UniPoly up(std::vector<long> cs) {
    std::vector<Int> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

// x^4 y^2 + x^2 y^4 - x^2 y^2 + 1, the running sextic
MultiPoly sextic() {
    MultiPoly p(2);
    p.add_term({4, 2}, Int(1));
    p.add_term({2, 4}, Int(1));
    p.add_term({2, 2}, Int(-1));
    p.add_term({0, 0}, Int(1));
    return p;
}

Rur sextic_rur() {
    Rur u;
    u.F = up({3, 0, -10, 0, 3});
    u.g = {up({0, -5, 0, 3}), up({1, 0, 1}), up({-2, 0, 2})};
    return u;
}

}  // namespace

static void BM_parametric_resultant(benchmark::State& state) {
    // the sextic's interior system: pencil pu - Z * g0^6 against F
    MultiPoly P = sextic();
    SimplexFace whole{2, {0, 1, 2}};
    RestrictedPoly psigma = restrict_to_face(P, whole);
    ComposedInput ci = compose_pu(psigma, sextic_rur());
    for (auto _ : state) {
        ParamResultant r = resultant_in_Z(ci.pu, ci.g0d, sextic_rur().F);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_parametric_resultant);

static void BM_certify_univariate(benchmark::State& state) {
    UniPoly p = up({1, 0, 0, -2, 6, -6, 2});  // diagonal edge of the sextic
    for (auto _ : state) {
        UnivariateCertificate cert = certify_univariate_min(p);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_certify_univariate);

static void BM_certify_simplex(benchmark::State& state) {
    MultiPoly P = sextic();
    std::map<std::string, Rur> rurs;
    rurs.emplace("0_1_2", sextic_rur());
    for (auto _ : state) {
        SimplexCertificate cert = certify_simplex_min(P, rurs);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_certify_simplex);

static void BM_simplex_bound(benchmark::State& state) {
    for (auto _ : state) {
        SimplexBound sb = simplex_min_bound(3, 6, 8);
        benchmark::DoNotOptimize(sb);
    }
}
BENCHMARK(BM_simplex_bound);

static void BM_numeric_oracle(benchmark::State& state) {
    MultiPoly P = sextic();
    for (auto _ : state) {
        NumericEstimate est = numeric_min_estimate(P, 2000, 50, 0);
        benchmark::DoNotOptimize(est);
    }
}
BENCHMARK(BM_numeric_oracle);

BENCHMARK_MAIN();
