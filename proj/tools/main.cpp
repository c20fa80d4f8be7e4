// Command-line surface: bound, certify1d, certify, compare.
// Exit codes: 0 success, 2 positivity violated, 3 invalid input,
// 4 incomplete certification.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplexbound/bounds.hpp"
#include "simplexbound/certify.hpp"
#include "simplexbound/errors.hpp"
#include "simplexbound/io.hpp"
#include "simplexbound/numeric_oracle.hpp"
#include "simplexbound/parse.hpp"

namespace sx = simplexbound;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sx::InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw sx::InputError("cannot write file: " + out_path);
    out << text;
}

sx::Int ceil_rat(const sx::Rat& v) {
    sx::Int q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return q;
}

unsigned long oracle_seed(unsigned long flag_seed) {
    // the environment override wins so CI can pin runs without editing scripts
    if (const char* env = std::getenv("SIMPLEXBOUND_SEED")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0') return v;
        throw sx::InputError("SIMPLEXBOUND_SEED must be a nonnegative integer");
    }
    return flag_seed;
}

struct CommonFlags {
    std::string out;
    bool timings = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct BoundArgs {
    unsigned long k = 0, d = 0, tau = 0;
    std::string formula = "exact";
    std::string c_text;
    std::string poly_path;
    bool univariate = false;
    CommonFlags common;
};

int run_bound(const BoundArgs& a, sx::ReportMeta meta) {
    auto t0 = std::chrono::steady_clock::now();
    sx::BoundReportData data;
    data.formula = a.formula;

    if (!a.poly_path.empty()) {
        sx::MultiPoly P = sx::parse_poly_document(read_file(a.poly_path));
        if (P.is_zero()) throw sx::InputError("zero polynomial has no positivity bound");
        data.k = P.nvars();
        data.d = static_cast<unsigned long>(P.total_degree());
        data.tau = P.poly_bitsize();
        data.poly = sx::render_polynomial(P);
    } else {
        if (a.k == 0 || a.d == 0 || a.tau == 0)
            throw sx::InputError("need --poly or all of --k, --d, --tau (each at least 1)");
        data.k = a.k;
        data.d = a.d;
        data.tau = a.tau;
    }
    if (data.d == 0) throw sx::InputError("degree must be at least 1");
    if (data.tau == 0) throw sx::InputError("bitsize must be at least 1");

    if (a.univariate) {
        if (data.k != 1) throw sx::InputError("--univariate needs k = 1");
        if (a.formula != "exact")
            throw sx::InputError("--univariate applies to the exact formula only");
        sx::UnivariateBound ub = sx::univariate_bound(data.d, data.tau);
        data.provenance = ub.value.provenance;
        data.L = ub.value.L;
        data.log2_value = ub.value.log2_inverse_upper;
        data.conservative = ub.conservative;
    } else if (a.formula == "exact") {
        sx::SimplexBound sb = sx::simplex_min_bound(data.k, data.d, data.tau);
        data.provenance = sb.value.provenance;
        data.L = sb.value.L;
        data.log2_value = sb.value.log2_inverse_upper;
    } else if (a.formula == "compact") {
        data.log2_value = sx::compact_bound(data.k, data.d, data.tau);
        data.L = ceil_rat(data.log2_value);
        data.provenance = "compact-remark";
    } else if (a.formula == "canny") {
        data.log2_value = sx::canny_bound(data.k, data.d, data.tau);
        data.L = ceil_rat(data.log2_value);
        data.provenance = "canny-remark";
    } else if (a.formula == "ls") {
        if (a.c_text.empty()) throw sx::InputError("--formula ls needs --c");
        sx::Rat c = sx::parse_rat(a.c_text);
        if (sgn(c) <= 0) throw sx::InputError("--c must be positive");
        data.log2_value = sx::loera_santos_bound(data.k, data.d, data.tau, c);
        data.L = ceil_rat(data.log2_value);
        data.provenance = "loera-santos-remark";
    } else {
        throw sx::InputError("unknown formula: " + a.formula);
    }

    meta.wall_seconds = seconds_since(t0);
    emit(sx::bound_report(meta, data), a.common.out);
    return 0;
}

struct Certify1dArgs {
    std::string poly_path;
    CommonFlags common;
};

int run_certify1d(const Certify1dArgs& a, sx::ReportMeta meta) {
    auto t0 = std::chrono::steady_clock::now();
    sx::MultiPoly P = sx::parse_poly_document(read_file(a.poly_path));
    if (P.nvars() != 1) throw sx::InputError("certify1d needs a univariate input (nvars = 1)");
    if (P.is_zero()) throw sx::InputError("zero polynomial");
    sx::UnivariateCertificate cert = sx::certify_univariate_min(P.to_unipoly());
    meta.wall_seconds = seconds_since(t0);
    emit(sx::certify1d_report(meta, P, cert), a.common.out);
    return cert.positive ? 0 : 2;
}

struct CertifyArgs {
    std::string poly_path;
    std::string rur_dir;
    std::string face_text;
    bool numeric_check = false;
    unsigned long samples = 10000;
    unsigned long refine = 100;
    unsigned long seed = 0;
    CommonFlags common;
};

sx::SimplexFace parse_face(const std::string& text, unsigned k) {
    sx::SimplexFace f;
    f.k = k;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw sx::InputError("--face must be a comma-separated vertex list, e.g. 0,2");
        unsigned long v = std::stoul(part);
        if (v > k) throw sx::InputError("--face names a vertex outside 0..k");
        f.vertices.push_back(static_cast<unsigned>(v));
    }
    if (f.vertices.empty()) throw sx::InputError("--face needs at least one vertex");
    std::sort(f.vertices.begin(), f.vertices.end());
    f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
    return f;
}

int run_certify(const CertifyArgs& a, sx::ReportMeta meta) {
    auto t0 = std::chrono::steady_clock::now();
    sx::MultiPoly P = sx::parse_poly_document(read_file(a.poly_path));
    if (P.is_zero()) throw sx::InputError("zero polynomial");

    std::optional<sx::SimplexFace> within;
    if (!a.face_text.empty()) within = parse_face(a.face_text, P.nvars());

    std::map<std::string, sx::Rur> rurs;
    if (!a.rur_dir.empty()) {
        for (const sx::SimplexFace& f : sx::enumerate_faces(P.nvars())) {
            if (f.dim() < 2) continue;
            std::string path = a.rur_dir + "/face_" + f.key() + ".rur";
            std::ifstream probe(path);
            if (!probe) continue;
            rurs.emplace(f.key(), sx::parse_rur_document(read_file(path)));
        }
    }

    sx::SimplexCertificate cert = sx::certify_simplex_min(P, rurs, within);

    std::optional<sx::NumericEstimate> oracle;
    if (a.numeric_check)
        oracle = sx::numeric_min_estimate(P, a.samples, a.refine, oracle_seed(a.seed));

    meta.wall_seconds = seconds_since(t0);
    emit(sx::certify_report(meta, P, cert, oracle), a.common.out);
    switch (cert.status) {
        case sx::CertStatus::Complete: return 0;
        case sx::CertStatus::Nonpositive: return 2;
        case sx::CertStatus::Incomplete: return 4;
    }
    return 0;
}

struct CompareArgs {
    unsigned long kmax = 0, dmax = 0, taumax = 0;
    std::string c_text;
    std::string out;
};

int run_compare(const CompareArgs& a) {
    if (a.kmax < 1 || a.dmax < 1 || a.taumax < 1)
        throw sx::InputError("grid bounds must be at least 1");
    if (a.c_text.empty()) throw sx::InputError("compare needs --c");
    sx::Rat c = sx::parse_rat(a.c_text);
    if (sgn(c) <= 0) throw sx::InputError("--c must be positive");

    std::vector<sx::CompareRow> rows;
    for (unsigned long k = 1; k <= a.kmax; ++k)
        for (unsigned long d = 1; d <= a.dmax; ++d)
            for (unsigned long tau = 1; tau <= a.taumax; ++tau) {
                sx::CompareRow r;
                r.k = k;
                r.d = d;
                r.tau = tau;
                r.L_exact = sx::simplex_min_bound(k, d, tau).value.L;
                r.log2_compact = sx::compact_bound(k, d, tau);
                r.log2_canny = sx::canny_bound(k, d, tau);
                r.log2_ls = sx::loera_santos_bound(k, d, tau, c);
                rows.push_back(std::move(r));
            }
    emit(sx::compare_csv(rows), a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lower bounds and positivity certificates for integer polynomials "
                 "on the standard simplex"};
    app.require_subcommand(1);

    BoundArgs ba;
    auto* b = app.add_subcommand("bound", "evaluate a lower-bound formula");
    b->add_option("--k", ba.k, "number of variables");
    b->add_option("--d", ba.d, "total degree");
    b->add_option("--tau", ba.tau, "coefficient bitsize");
    b->add_option("--formula", ba.formula, "exact|compact|canny|ls (default exact)");
    b->add_option("--c", ba.c_text, "constant for the ls formula (positive rational)");
    b->add_option("--poly", ba.poly_path, "measure k, d, tau from a polynomial file");
    b->add_flag("--univariate", ba.univariate, "k=1 theorem with conservative rational");
    b->add_option("--out", ba.common.out, "write the report here instead of stdout");
    b->add_flag("--timings", ba.common.timings, "include wall time (non-reproducible)");

    Certify1dArgs ca1;
    auto* c1 = app.add_subcommand("certify1d", "exact minimum of a univariate polynomial on [0,1]");
    c1->add_option("--poly", ca1.poly_path, "polynomial file (nvars = 1)")->required();
    c1->add_option("--out", ca1.common.out, "write the report here instead of stdout");
    c1->add_flag("--timings", ca1.common.timings, "include wall time (non-reproducible)");

    CertifyArgs ca;
    auto* c2 = app.add_subcommand("certify", "exact minimum of a polynomial on the simplex");
    c2->add_option("--poly", ca.poly_path, "polynomial file")->required();
    c2->add_option("--rur-dir", ca.rur_dir, "directory of face_<key>.rur parametrizations");
    c2->add_option("--face", ca.face_text,
                   "restrict to one closed face, comma-separated vertices (e.g. 0,2)");
    c2->add_flag("--numeric-check", ca.numeric_check, "append a floating-point estimate");
    c2->add_option("--samples", ca.samples, "oracle sample count (default 10000)");
    c2->add_option("--refine", ca.refine, "oracle refinement rounds (default 100)");
    c2->add_option("--seed", ca.seed, "oracle seed (default 0; SIMPLEXBOUND_SEED wins)");
    c2->add_option("--out", ca.common.out, "write the report here instead of stdout");
    c2->add_flag("--timings", ca.common.timings, "include wall time (non-reproducible)");

    CompareArgs cm;
    auto* c3 = app.add_subcommand("compare", "CSV sweep of the bound formulas over a grid");
    c3->add_option("--kmax", cm.kmax, "grid bound for k")->required();
    c3->add_option("--dmax", cm.dmax, "grid bound for d")->required();
    c3->add_option("--taumax", cm.taumax, "grid bound for tau")->required();
    c3->add_option("--c", cm.c_text, "constant for the ls column")->required();
    c3->add_option("--out", cm.out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    sx::ReportMeta meta;
    meta.command.push_back("simplexbound");
    for (int i = 1; i < argc; ++i) meta.command.push_back(argv[i]);

    try {
        if (b->parsed()) {
            meta.timings = ba.common.timings;
            return run_bound(ba, meta);
        }
        if (c1->parsed()) {
            meta.timings = ca1.common.timings;
            return run_certify1d(ca1, meta);
        }
        if (c2->parsed()) {
            meta.timings = ca.common.timings;
            return run_certify(ca, meta);
        }
        if (c3->parsed()) return run_compare(cm);
    } catch (const sx::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sx::DegenerateResultant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
