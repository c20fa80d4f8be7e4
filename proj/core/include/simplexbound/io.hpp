#pragma once

// Document formats and report serialization. Reports are canonical: fixed
// field order, rationals as "num/den" strings, integers as decimal strings,
// so identical inputs produce byte-identical output.

#include <optional>
#include <string>
#include <vector>

#include "simplexbound/bounds.hpp"
#include "simplexbound/certify.hpp"
#include "simplexbound/multipoly.hpp"
#include "simplexbound/numeric_oracle.hpp"

namespace simplexbound {

// {"expr": "...", "nvars": k} or
// {"nvars": k, "terms": [{"exp": [e1,...,ek], "coef": "decimal"}, ...]}
MultiPoly parse_poly_document(const std::string& text);

// {"s": n, "F": [...], "g0": [...], ..., "gn": [...],
//  "selector": "all" | {"interval": ["lo", "hi"]}}
// Coefficient lists are degree-0 first, decimal strings or small integers.
Rur parse_rur_document(const std::string& text);

struct CompareRow {
    unsigned long k = 0, d = 0, tau = 0;
    Int L_exact;
    Rat log2_compact, log2_canny, log2_ls;
};

// Header row exactly: k,d,tau,L_exact,log2_compact,log2_canny,log2_ls
// log2 fields printed with 6 decimal places, rounded up.
std::string compare_csv(const std::vector<CompareRow>& rows);

struct ReportMeta {
    std::vector<std::string> command;  // argv echo
    bool timings = false;              // volatile fields are opt-in
    double wall_seconds = 0.0;
};

struct BoundReportData {
    unsigned long k = 0, d = 0, tau = 0;
    std::optional<std::string> poly;  // canonical echo when measured from a file
    std::string formula;
    std::string provenance;
    Int L;
    Rat log2_value;
    std::optional<Rat> conservative;
};

std::string bound_report(const ReportMeta& meta, const BoundReportData& data);

std::string certify1d_report(const ReportMeta& meta, const MultiPoly& input,
                             const UnivariateCertificate& cert);

std::string certify_report(const ReportMeta& meta, const MultiPoly& input,
                           const SimplexCertificate& cert,
                           const std::optional<NumericEstimate>& oracle);

}  // namespace simplexbound
