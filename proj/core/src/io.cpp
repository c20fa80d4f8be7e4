#include "simplexbound/io.hpp"

#include <sstream>

#include <json.hpp>

#include "simplexbound/errors.hpp"
#include "simplexbound/parse.hpp"

namespace simplexbound {

namespace {

using ojson = nlohmann::ordered_json;

Int int_from(const ojson& v, const char* what) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) {
        Int n;
        if (n.set_str(v.get<std::string>(), 10) != 0)
            throw InputError(std::string(what) + ": not a decimal integer");
        return n;
    }
    throw InputError(std::string(what) + ": expected an integer or a decimal string");
}

UniPoly unipoly_from(const ojson& v, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + ": expected a coefficient list");
    std::vector<Int> cs;
    cs.reserve(v.size());
    for (const auto& c : v) cs.push_back(int_from(c, what));
    return UniPoly(std::move(cs));
}

ojson parse_json(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
}

ojson coeffs_js(const UniPoly& p) {
    ojson a = ojson::array();
    for (const Int& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

ojson alg_js(const AlgebraicNumber& a) {
    ojson o;
    if (a.is_rational()) {
        o["rational"] = rat_string(a.rational_value());
    } else {
        o["interval"] = {rat_string(a.iv.lo), rat_string(a.iv.hi)};
        o["poly"] = coeffs_js(a.poly);
    }
    return o;
}

ojson bound_core_js(const BoundValue& b) {
    ojson o;
    o["provenance"] = b.provenance;
    o["L"] = b.L.get_str();
    o["log2_display"] = decimal_string_round_up(b.log2_inverse_upper, 6);
    return o;
}

ojson ucert_js(const UnivariateCertificate& c) {
    ojson o;
    ojson cands = ojson::array();
    for (const auto& cand : c.candidates) {
        ojson e;
        e["location"] = alg_js(cand.location);
        e["value"] = alg_js(cand.value);
        e["endpoint"] = cand.endpoint;
        cands.push_back(std::move(e));
    }
    o["candidates"] = std::move(cands);
    o["resultant"] = c.resultant ? coeffs_js(c.resultant->R) : ojson(nullptr);
    o["minimum"] = alg_js(c.minimum);
    ojson am = ojson::array();
    for (std::size_t i : c.argmin) am.push_back(i);
    o["argmin"] = std::move(am);
    o["positive"] = c.positive;
    o["status"] = to_string(c.status);
    if (c.bound) {
        ojson b = bound_core_js(c.bound->value);
        b["conservative"] = rat_string(c.bound->conservative);
        o["bound"] = std::move(b);
        o["bound_checked"] = c.bound_checked;
    } else {
        o["bound"] = nullptr;
    }
    return o;
}

ojson face_js(const FaceReport& fr) {
    ojson o;
    o["face"] = fr.face.key();
    o["kind"] = fr.kind;
    if (fr.vertex_value) o["value"] = rat_string(*fr.vertex_value);
    if (fr.edge) o["certificate"] = ucert_js(*fr.edge);
    if (fr.kind == "interior-rur") {
        o["rur_oversized"] = fr.rur_oversized;
        if (fr.resultant) o["resultant"] = coeffs_js(fr.resultant->R);
        ojson cvs = ojson::array();
        for (const auto& v : fr.critical_values) cvs.push_back(alg_js(v));
        o["critical_values"] = std::move(cvs);
        ojson ws = ojson::array();
        for (const auto& w : fr.witnesses) {
            ojson e;
            e["t"] = alg_js(w.t);
            e["value_index"] = w.value_index;
            ojson pt = ojson::array();
            for (const auto& c : w.point) pt.push_back({rat_string(c.lo), rat_string(c.hi)});
            e["point"] = std::move(pt);
            e["location"] = to_string(w.location);
            ws.push_back(std::move(e));
        }
        o["witnesses"] = std::move(ws);
    }
    return o;
}

std::string dump_report(ojson& root, const ReportMeta& meta) {
    if (meta.timings) {
        ojson t;
        t["wall_seconds"] = meta.wall_seconds;
        root["timings"] = std::move(t);
    }
    return root.dump(2) + "\n";
}

ojson report_head(const ReportMeta& meta) {
    ojson root;
    ojson cmd = ojson::array();
    for (const auto& a : meta.command) cmd.push_back(a);
    root["command"] = std::move(cmd);
    return root;
}

}  // namespace

MultiPoly parse_poly_document(const std::string& text) {
    ojson j = parse_json(text);
    if (!j.is_object()) throw InputError("polynomial document: expected an object");
    if (!j.contains("nvars") || !j["nvars"].is_number_unsigned())
        throw InputError("polynomial document: missing nonnegative \"nvars\"");
    unsigned long k = j["nvars"].get<unsigned long>();
    if (k < 1) throw InputError("polynomial document: nvars must be at least 1");
    if (j.contains("expr")) {
        if (!j["expr"].is_string())
            throw InputError("polynomial document: \"expr\" must be a string");
        return parse_polynomial(j["expr"].get<std::string>(), static_cast<unsigned>(k));
    }
    if (!j.contains("terms") || !j["terms"].is_array())
        throw InputError("polynomial document: need \"expr\" or a \"terms\" list");
    MultiPoly p(static_cast<unsigned>(k));
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw InputError("polynomial document: each term needs \"exp\" and \"coef\"");
        const auto& ex = t["exp"];
        if (!ex.is_array() || ex.size() != k)
            throw InputError("polynomial document: \"exp\" must list one exponent per variable");
        std::vector<unsigned> exps;
        exps.reserve(k);
        for (const auto& e : ex) {
            if (!e.is_number_unsigned())
                throw InputError("polynomial document: exponents must be nonnegative integers");
            exps.push_back(e.get<unsigned>());
        }
        p.add_term(exps, int_from(t["coef"], "coef"));
    }
    return p;
}

Rur parse_rur_document(const std::string& text) {
    ojson j = parse_json(text);
    if (!j.is_object()) throw InputError("parametrization document: expected an object");
    if (!j.contains("s") || !j["s"].is_number_unsigned())
        throw InputError("parametrization document: missing nonnegative \"s\"");
    unsigned long s = j["s"].get<unsigned long>();
    if (s < 1) throw InputError("parametrization document: s must be at least 1");
    Rur u;
    if (!j.contains("F")) throw InputError("parametrization document: missing \"F\"");
    u.F = unipoly_from(j["F"], "F");
    for (unsigned long i = 0; i <= s; ++i) {
        std::string key = "g" + std::to_string(i);
        if (!j.contains(key))
            throw InputError("parametrization document: missing \"" + key + "\"");
        u.g.push_back(unipoly_from(j[key], key.c_str()));
    }
    u.selector = SelectAll{};
    if (j.contains("selector")) {
        const auto& sel = j["selector"];
        if (sel.is_string()) {
            if (sel.get<std::string>() != "all")
                throw InputError("parametrization document: unknown selector");
        } else if (sel.is_object() && sel.contains("interval")) {
            const auto& iv = sel["interval"];
            if (!iv.is_array() || iv.size() != 2 || !iv[0].is_string() || !iv[1].is_string())
                throw InputError(
                    "parametrization document: interval selector needs two rational strings");
            Rat lo = parse_rat(iv[0].get<std::string>());
            Rat hi = parse_rat(iv[1].get<std::string>());
            if (lo > hi)
                throw InputError("parametrization document: selector interval is reversed");
            u.selector = SelectInterval{RatInterval(lo, hi)};
        } else {
            throw InputError("parametrization document: unknown selector");
        }
    }
    validate_rur(u);
    return u;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
    std::ostringstream os;
    os << "k,d,tau,L_exact,log2_compact,log2_canny,log2_ls\n";
    for (const auto& r : rows) {
        os << r.k << ',' << r.d << ',' << r.tau << ',' << r.L_exact.get_str() << ','
           << decimal_string_round_up(r.log2_compact, 6) << ','
           << decimal_string_round_up(r.log2_canny, 6) << ','
           << decimal_string_round_up(r.log2_ls, 6) << '\n';
    }
    return os.str();
}

std::string bound_report(const ReportMeta& meta, const BoundReportData& data) {
    ojson root = report_head(meta);
    ojson in;
    in["k"] = data.k;
    in["d"] = data.d;
    in["tau"] = data.tau;
    if (data.poly) in["poly"] = *data.poly;
    in["formula"] = data.formula;
    root["inputs"] = std::move(in);
    ojson b;
    b["provenance"] = data.provenance;
    b["L"] = data.L.get_str();
    b["log2_display"] = decimal_string_round_up(data.log2_value, 6);
    if (data.conservative) b["conservative"] = rat_string(*data.conservative);
    root["bound"] = std::move(b);
    return dump_report(root, meta);
}

std::string certify1d_report(const ReportMeta& meta, const MultiPoly& input,
                             const UnivariateCertificate& cert) {
    ojson root = report_head(meta);
    ojson in;
    in["k"] = 1;
    in["d"] = input.is_zero() ? 0 : static_cast<unsigned long>(input.total_degree());
    in["tau"] = input.is_zero() ? 0 : input.poly_bitsize();
    in["poly"] = render_polynomial(input);
    root["inputs"] = std::move(in);
    root["certificate"] = ucert_js(cert);
    return dump_report(root, meta);
}

std::string certify_report(const ReportMeta& meta, const MultiPoly& input,
                           const SimplexCertificate& cert,
                           const std::optional<NumericEstimate>& oracle) {
    ojson root = report_head(meta);
    ojson in;
    in["k"] = cert.k;
    in["d"] = cert.d;
    in["tau"] = cert.tau;
    in["poly"] = render_polynomial(input);
    root["inputs"] = std::move(in);

    ojson faces = ojson::array();
    for (const auto& fr : cert.faces) faces.push_back(face_js(fr));
    root["faces"] = std::move(faces);

    ojson cands = ojson::array();
    for (const auto& c : cert.candidates) {
        ojson e;
        e["value"] = alg_js(c.value);
        e["face"] = cert.faces[c.face_index].face.key();
        e["attained"] = c.attained;
        e["origin"] = c.origin;
        cands.push_back(std::move(e));
    }
    root["candidates"] = std::move(cands);

    root["minimum"] = alg_js(cert.minimum);
    ojson am = ojson::array();
    for (std::size_t i : cert.argmin) am.push_back(i);
    root["argmin"] = std::move(am);
    root["minimum_attained"] = cert.minimum_attained;
    root["positive"] = cert.positive;
    root["status"] = to_string(cert.status);
    ojson miss = ojson::array();
    for (const auto& f : cert.missing) miss.push_back(f.key());
    root["missing"] = std::move(miss);
    root["lower_bound_all_candidates"] = alg_js(cert.lower_bound_all);

    if (cert.bound) {
        ojson b = bound_core_js(cert.bound->value);
        b["D"] = cert.bound->rur.degree.get_str();
        b["rho"] = cert.bound->rur.bitsize.get_str();
        b["rho_prime"] = cert.bound->pu.bitsize.get_str();
        root["bound"] = std::move(b);
        root["bound_checked"] = cert.bound_checked;
    } else {
        root["bound"] = nullptr;
    }

    if (oracle) {
        ojson n;
        n["value"] = oracle->value;
        ojson pt = ojson::array();
        for (double x : oracle->argmin) pt.push_back(x);
        n["argmin"] = std::move(pt);
        n["samples"] = oracle->samples;
        n["refinement_steps"] = oracle->refinement_steps;
        root["numeric_check"] = std::move(n);
    }
    return dump_report(root, meta);
}

}  // namespace simplexbound
