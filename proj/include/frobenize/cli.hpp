#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobenize.hpp"

namespace frobenize::cli {

using Json = nlohmann::ordered_json;

enum class SourceKind { Expression, Hypergeometric, Pochhammer, Order1 };

struct AnalysisRequest {
    SourceKind kind = SourceKind::Expression;
    std::string expression;
    std::vector<Rat> alpha, beta;
    Rat a = 0;
    std::vector<Rat> alphas, bs;
    std::string q;

    std::int64_t bound = 100;
    std::optional<std::int64_t> p;
    std::optional<unsigned> j_max;
    std::size_t deg_max = 128;
    std::size_t precision = 256;
    std::size_t integrality_depth = 2000;
    std::size_t terms = 10;
    std::optional<unsigned> refined_r;
    bool oracle = false;
    bool force = false;
    bool assume_semisimple = false;
    bool timings = false;
};

struct Report {
    Json doc;
    int exit_code = 0;
};

namespace detail {

inline Json rat_list(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

inline std::string join(const std::vector<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
}

struct Resolved {
    DiffOp op;
    std::string description;
    std::optional<LocalMonodromyData> local;
    std::vector<std::string> warnings;
    /// Hypergeometric parameters at operator level (n betas).
    std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> hyp;
};

inline std::vector<Rat> operator_level_beta(const std::vector<Rat>& alpha, const std::vector<Rat>& beta) {
    if (beta.size() + 1 == alpha.size()) {
        auto b = beta;
        b.push_back(Rat(1));
        return b;
    }
    if (beta.size() == alpha.size()) return beta;
    throw InputError("hypergeometric family needs n alphas and n-1 (or n) betas");
}

inline Resolved resolve(const AnalysisRequest& req) {
    switch (req.kind) {
        case SourceKind::Expression: {
            DiffOp op = parse_operator(req.expression);
            return {op, req.expression, std::nullopt, {}, std::nullopt};
        }
        case SourceKind::Hypergeometric: {
            if (req.alpha.empty()) throw InputError("hypergeometric family needs at least one alpha");
            const auto beta = operator_level_beta(req.alpha, req.beta);
            auto h = hypergeometric_operator(req.alpha, beta);
            Resolved r{h.ddz(), "hypergeometric alpha=(" + join(req.alpha) + ") beta=(" + join(beta) + ")",
                       hypergeometric_local_data(req.alpha, beta), {}, std::make_pair(req.alpha, beta)};
            if (!h.irreducible) r.warnings.push_back("some alpha_i - beta_j is an integer (reducible monodromy)");
            return r;
        }
        case SourceKind::Pochhammer: {
            DiffOp op = jordan_pochhammer_operator(req.a, req.alphas, req.bs);
            Resolved r{op,
                       "pochhammer a=" + req.a.get_str() + " alphas=(" + join(req.alphas) + ") bs=(" + join(req.bs) +
                           ")",
                       pochhammer_local_data(req.a, req.alphas, req.bs), {}, std::nullopt};
            if (!r.local->irreducible)
                r.warnings.push_back("a, some b_i or a + sum b_i is an integer (irreducibility not guaranteed)");
            return r;
        }
        case SourceKind::Order1: {
            const RatFunQ Q = parse_rational_function(req.q);
            return {order_one_operator(Q), "order1 Q=" + Q.to_string(), std::nullopt, {}, std::nullopt};
        }
    }
    throw InputError("unknown source");
}

inline Json header(const std::string& command, const Resolved& r) {
    Json doc;
    doc["command"] = command;
    doc["source"] = r.description;
    doc["operator"] = to_ddz_monic(r.op).to_string();
    doc["order"] = r.op.order();
    return doc;
}

inline Json rigidity_json(const LocalMonodromyData& data, std::size_t n, bool heuristic) {
    const auto rep = katz_rigidity(data.types, n, data.irreducible);
    Json j;
    Json pts = Json::array();
    for (std::size_t i = 0; i < data.points.size(); ++i)
        pts.push_back({{"point", data.points[i].to_string()},
                       {"jordan_type", data.types[i].to_string()},
                       {"omega", rep.omegas[i]}});
    j["local_monodromy"] = pts;
    j["omega_sum"] = rep.sum;
    j["target"] = rep.target;
    j["applicable"] = rep.applicable;
    j["rigid"] = rep.rigid;
    j["heuristic"] = heuristic;
    return j;
}

inline Json verdict_json(const PrimeVerdict& v) {
    Json reasons = Json::array();
    for (const auto& r : v.reasons) reasons.push_back(r.to_string());
    Json j;
    j["p"] = v.p;
    j["in_S"] = v.in_S;
    j["reasons"] = reasons;
    j["h_uniform"] = v.h_uniform ? Json(v.h_uniform->get_str()) : Json(nullptr);
    j["h_min"] = v.h_min ? Json(*v.h_min) : Json(nullptr);
    return j;
}

inline Prime checked_prime(std::int64_t p) { return require_prime(p); }

/// The series whose reduction is certified, with the exponents at 0 used for the refined bound.
struct SeriesData {
    std::string description;
    ExactSeries series;
    std::vector<Rat> exponents_at_zero;
    std::optional<HypSeriesSpec> spec;
};

inline SeriesData series_for(const AnalysisRequest& req, const Resolved& r) {
    if (r.hyp) {
        HypSeriesSpec spec{req.alpha, {}};
        if (req.beta.size() + 1 == req.alpha.size()) {
            spec.beta = req.beta;
        } else {
            auto b = req.beta;
            auto it = std::find(b.begin(), b.end(), Rat(1));
            if (it == b.end())
                throw EligibilityError("NO_POWER_SERIES",
                                       "no beta equals 1: 0 is not an exponent at z = 0");
            b.erase(it);
            spec.beta = b;
        }
        std::vector<Rat> ex;
        for (const auto& b : r.hyp->second) ex.push_back(Rat(1) - b);
        std::sort(ex.begin(), ex.end());
        std::string name = std::to_string(spec.order()) + "F" + std::to_string(spec.order() - 1) + "(" +
                           join(spec.alpha) + (spec.beta.empty() ? "" : ";" + join(spec.beta)) + ")";
        return {name, ExactSeries([spec](std::size_t N) { return hyper_coeffs(spec, N); }), ex, spec};
    }
    const DiffOp op = r.op;
    // Validate eagerly so eligibility errors surface before any search.
    (void)series_from_operator(op, 1);
    std::vector<Rat> ex;
    const auto pts = finite_singular_points(op);
    if (std::find(pts.begin(), pts.end(), Rat(0)) != pts.end()) {
        ex = exponents(op, SingularPoint::finite(Rat(0))).exponents;
    } else {
        for (std::size_t k = 0; k < op.order(); ++k) ex.push_back(Rat(static_cast<long>(k)));
    }
    return {"power-series solution with f(0) = 1",
            ExactSeries([op](std::size_t N) { return series_from_operator(op, N); }), ex, std::nullopt};
}

inline Json fp_polys(const std::vector<FpPoly>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(q.to_string());
    return out;
}

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

inline void finish(Report& rep, const std::vector<std::string>& warnings, const AnalysisRequest& req,
                   const Stopwatch& sw) {
    rep.doc["warnings"] = warnings;
    if (req.timings) rep.doc["timings"] = {{"total_ms", sw.ms()}};
}

inline Json error_json(const Error& e) {
    return {{"code", e.exit_code()}, {"tag", e.tag()}, {"message", e.what()}};
}

}  // namespace detail

inline Report cmd_analyze(const AnalysisRequest& req) {
    detail::Stopwatch sw;
    auto r = detail::resolve(req);
    Report rep{detail::header("analyze", r), 0};
    auto& doc = rep.doc;
    const auto fr = is_fuchsian(r.op);
    Json pts = Json::array();
    for (const auto& p : fr.points) pts.push_back({{"point", p.point.to_string()}, {"regular", p.regular}});
    doc["singular_points"] = pts;
    doc["fuchsian"] = fr.fuchsian;
    if (!fr.fuchsian) {
        std::string where;
        for (const auto& p : fr.offending) where += (where.empty() ? "" : ", ") + p.to_string();
        NotFuchsian e("operator is not Fuchsian at " + where);
        doc["error"] = detail::error_json(e);
        rep.exit_code = e.exit_code();
        detail::finish(rep, r.warnings, req, sw);
        return rep;
    }
    const auto table = exponent_table(r.op);
    Json ex = Json::array();
    for (const auto& row : table) ex.push_back({{"point", row.point.to_string()}, {"exponents", detail::rat_list(row.exponents)}});
    doc["exponents"] = ex;
    const auto m = finite_singular_points(r.op).size();
    const Rat sum = exponent_sum(r.op), expected = fuchs_relation_value(m, r.op.order());
    doc["fuchs_relation"] = {{"exponent_sum", sum.get_str()}, {"expected", expected.get_str()}, {"holds", sum == expected}};
    if (r.local) {
        doc["rigidity"] = detail::rigidity_json(*r.local, r.op.order(), false);
    } else if (req.assume_semisimple) {
        // Irreducibility is not known from exponents alone.
        doc["rigidity"] = detail::rigidity_json(assume_semisimple_local_data(table, false), r.op.order(), true);
        r.warnings.push_back("rigidity computed assuming semisimple local monodromy; irreducibility not checked");
    }
    detail::finish(rep, r.warnings, req, sw);
    return rep;
}

inline Report cmd_primes(const AnalysisRequest& req) {
    detail::Stopwatch sw;
    if (req.bound < 2) throw InputError("--bound must be at least 2");
    auto r = detail::resolve(req);
    Report rep{detail::header("primes", r), 0};
    auto& doc = rep.doc;
    doc["bound"] = req.bound;
    const auto general = prime_set(r.op, req.bound);
    const auto ambient = build_ambient_set(r.op);
    doc["ambient_set"] = detail::rat_list(ambient.elements);
    Json rows = Json::array();
    std::vector<Prime> in_s;
    if (r.hyp) {
        const auto shortcut = hypergeometric_prime_set(r.hyp->first, r.hyp->second, req.bound);
        for (std::size_t i = 0; i < general.size(); ++i) {
            Json row = detail::verdict_json(shortcut[i]);
            const bool both = general[i].in_S && shortcut[i].in_S;
            row["in_S"] = both;
            row["general"] = general[i].in_S;
            row["shortcut"] = shortcut[i].in_S;
            for (const auto& x : general[i].reasons) row["reasons"].push_back("general:" + x.to_string());
            if (!both) {
                row["h_uniform"] = nullptr;
                row["h_min"] = nullptr;
            }
            rows.push_back(row);
        }
        in_s = certified_primes(general, shortcut);
        doc["method"] = "intersection of the general set and the hypergeometric parameter test";
    } else {
        for (const auto& v : general) rows.push_back(detail::verdict_json(v));
        in_s = admitted(general);
        doc["method"] = "general";
    }
    doc["primes"] = rows;
    doc["S"] = in_s;
    detail::finish(rep, r.warnings, req, sw);
    return rep;
}

inline Report cmd_expand(const AnalysisRequest& req) {
    detail::Stopwatch sw;
    auto r = detail::resolve(req);
    Report rep{detail::header("expand", r), 0};
    auto& doc = rep.doc;
    auto s = detail::series_for(req, r);
    doc["series"] = s.description;
    doc["terms"] = req.terms;
    const auto& c = s.series.coeffs(req.terms);
    doc["coefficients"] = detail::rat_list(std::vector<Rat>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(req.terms)));
    if (req.p) {
        const Prime p = detail::checked_prime(*req.p);
        const auto iv = s.series.integrality(p, req.terms);
        doc["p"] = p;
        doc["integral"] = iv.integral;
        if (iv.integral) {
            doc["coefficients_mod_p"] = s.series.reduced(p, req.terms).coeffs();
        } else {
            doc["first_non_integral_index"] = *iv.first_offending;
        }
    }
    detail::finish(rep, r.warnings, req, sw);
    return rep;
}

inline Report cmd_certify(const AnalysisRequest& req) {
    detail::Stopwatch sw;
    if (!req.p) throw InputError("certify needs --p");
    const Prime p = detail::checked_prime(*req.p);
    auto r = detail::resolve(req);
    Report rep{detail::header("certify", r), 0};
    auto& doc = rep.doc;
    doc["p"] = p;
    auto s = detail::series_for(req, r);
    doc["series"] = s.description;

    auto fail = [&](const Error& e) {
        doc["error"] = detail::error_json(e);
        rep.exit_code = e.exit_code();
        detail::finish(rep, r.warnings, req, sw);
        return rep;
    };

    const auto iv = s.series.integrality(p, req.integrality_depth);
    doc["integrality"] = {{"checked_to", req.integrality_depth}, {"integral", iv.integral}};
    if (!iv.integral) {
        doc["integrality"]["first_non_integral_index"] = *iv.first_offending;
        return fail(EligibilityError("NOT_INTEGRAL", "coefficient " + std::to_string(*iv.first_offending) +
                                                         " is not " + std::to_string(p) + "-integral"));
    }

    const auto prof = profile_operator(r.op);
    const PrimeVerdict general = prime_verdict(prof, build_ambient_set(prof), p);
    std::uint64_t h_exp_lcm = exponent_denominator_lcm(prof.exponent_table);
    Json verdict;
    if (r.hyp) {
        const auto sc = hypergeometric_prime_set(r.hyp->first, r.hyp->second, p).back();
        verdict = detail::verdict_json(sc);
        verdict["in_S"] = general.in_S && sc.in_S;
        for (const auto& x : general.reasons) verdict["reasons"].push_back("general:" + x.to_string());
        h_exp_lcm = parameter_denominator_lcm(r.hyp->first, r.hyp->second);
    } else {
        verdict = detail::verdict_json(general);
    }
    if (!verdict["in_S"].get<bool>()) {
        verdict["h_uniform"] = nullptr;
        verdict["h_min"] = nullptr;
    }
    doc["prime"] = verdict;
    if (!verdict["in_S"].get<bool>()) {
        std::string why;
        for (const auto& x : verdict["reasons"]) why += (why.empty() ? "" : ", ") + x.get<std::string>();
        if (!req.force) return fail(EligibilityError("NOT_IN_S", std::to_string(p) + " is not in S: " + why));
        r.warnings.push_back("p is not in S (" + why + "); certifying anyway because of --force");
    }
    unsigned h = 1;
    if (std::gcd(static_cast<std::uint64_t>(p), h_exp_lcm) == 1) {
        h = static_cast<unsigned>(minimal_period(h_exp_lcm, p));
    } else if (!req.force) {
        return fail(EligibilityError("PERIOD_UNDEFINED", "p divides an exponent denominator"));
    } else {
        r.warnings.push_back("p divides an exponent denominator; using h = 1");
    }
    doc["h"] = h;

    CertifyOptions opt;
    opt.j_max = req.j_max;
    opt.deg_cap = req.deg_max;
    opt.deg_start = std::min<std::size_t>(8, req.deg_max);
    opt.min_precision = req.precision;
    opt.refined_r = req.refined_r;
    const unsigned n = static_cast<unsigned>(r.op.order());
    std::optional<Certificate> cert;
    try {
        cert = certify_series(s.series.source(p), p, n, h, s.exponents_at_zero, opt);
    } catch (const Error& e) {
        return fail(e);
    }
    const auto& rel = cert->relation;
    doc["certificate"] = {{"j", rel.j},
                          {"coefficient_degree", rel.degree},
                          {"relation", detail::fp_polys(rel.r)},
                          {"working_precision", rel.working_precision},
                          {"verified_to", rel.verified_to}};
    doc["bounds"] = {{"degree_bound", cert->degree_bound.get_str()},
                     {"theorem_bound", cert->theorem_bound.get_str()},
                     {"refined_bound", cert->refined_bound.get_str()},
                     {"r", cert->r_used},
                     {"r_heuristic", cert->r_heuristic},
                     {"within_theorem_bound", cert->degree_bound <= cert->theorem_bound},
                     {"within_refined_bound", cert->degree_bound <= cert->refined_bound}};
    if (req.oracle) {
        const BigInt cap = std::min(cert->degree_bound, BigInt(32));
        const auto d_max = static_cast<unsigned>(cap.get_ui());
        const std::size_t D_max = std::max<std::size_t>(2 * rel.degree, 8);
        auto o = try_oracle_min_poly(s.series.source(p), d_max, D_max);
        Json oj;
        oj["searched_degree"] = d_max;
        oj["searched_coefficient_degree"] = D_max;
        if (o) {
            oj["degree"] = o->degree;
            oj["polynomial"] = detail::fp_polys(o->coeffs);
            oj["verified_to"] = o->verified_to;
            oj["consistent"] = BigInt(o->degree) <= cert->degree_bound;
        } else {
            oj["degree"] = nullptr;
            r.warnings.push_back("oracle found no algebraic relation within its search limits");
        }
        doc["oracle"] = oj;
    }
    detail::finish(rep, r.warnings, req, sw);
    return rep;
}

/// Human-readable rendering of a report document.
inline std::string render_text(const Json& doc) {
    std::ostringstream out;
    auto str = [](const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
    auto list = [&](const Json& arr) {
        std::string s;
        for (const auto& x : arr) s += (s.empty() ? "" : ", ") + str(x);
        return "{" + s + "}";
    };
    out << doc["command"].get<std::string>() << ": " << str(doc["source"]) << "\n";
    out << "operator: " << str(doc["operator"]) << "  (order " << doc["order"] << ")\n";
    const std::string cmd = doc["command"];
    if (cmd == "analyze") {
        out << "singular points:\n";
        for (const auto& p : doc["singular_points"])
            out << "  " << str(p["point"]) << (p["regular"].get<bool>() ? "  regular" : "  IRREGULAR") << "\n";
        out << "fuchsian: " << (doc["fuchsian"].get<bool>() ? "yes" : "no") << "\n";
        if (doc.contains("exponents")) {
            out << "exponents:\n";
            for (const auto& row : doc["exponents"]) out << "  " << str(row["point"]) << ": " << list(row["exponents"]) << "\n";
            const auto& f = doc["fuchs_relation"];
            out << "fuchs relation: sum " << str(f["exponent_sum"]) << ", expected " << str(f["expected"])
                << (f["holds"].get<bool>() ? " (ok)" : " (MISMATCH)") << "\n";
        }
        if (doc.contains("rigidity")) {
            const auto& rg = doc["rigidity"];
            out << "rigidity" << (rg["heuristic"].get<bool>() ? " (heuristic)" : "") << ":\n";
            for (const auto& p : rg["local_monodromy"])
                out << "  " << str(p["point"]) << ": " << str(p["jordan_type"]) << "  omega " << p["omega"] << "\n";
            out << "  sum " << rg["omega_sum"] << ", target " << rg["target"] << ", applicable "
                << (rg["applicable"].get<bool>() ? "yes" : "no") << ", rigid " << (rg["rigid"].get<bool>() ? "yes" : "no")
                << "\n";
        }
    } else if (cmd == "primes") {
        out << "ambient set: " << list(doc["ambient_set"]) << "\n";
        out << "p       in_S  h_uniform  h_min  reasons\n";
        for (const auto& row : doc["primes"]) {
            std::string line = std::to_string(row["p"].get<std::uint32_t>());
            line.resize(8, ' ');
            std::string s = row["in_S"].get<bool>() ? "yes" : "no";
            s.resize(6, ' ');
            std::string hu = row["h_uniform"].is_null() ? "-" : str(row["h_uniform"]);
            hu.resize(11, ' ');
            std::string hm = row["h_min"].is_null() ? "-" : str(row["h_min"]);
            hm.resize(7, ' ');
            std::string reasons;
            for (const auto& x : row["reasons"]) reasons += (reasons.empty() ? "" : " ") + str(x);
            out << line << s << hu << hm << reasons << "\n";
        }
        out << "S (p <= " << doc["bound"] << "): " << list(doc["S"]) << "\n";
    } else if (cmd == "expand") {
        out << "series: " << str(doc["series"]) << "\n";
        out << "coefficients: " << list(doc["coefficients"]) << "\n";
        if (doc.contains("p")) {
            if (doc["integral"].get<bool>())
                out << "mod " << doc["p"] << ": " << list(doc["coefficients_mod_p"]) << "\n";
            else
                out << "not " << doc["p"] << "-integral at index " << doc["first_non_integral_index"] << "\n";
        }
    } else if (cmd == "certify") {
        out << "series: " << str(doc["series"]) << "\n";
        out << "p = " << doc["p"] << "\n";
        const auto& iv = doc["integrality"];
        out << "integrality to " << iv["checked_to"] << ": " << (iv["integral"].get<bool>() ? "ok" : "FAILED");
        if (iv.contains("first_non_integral_index")) out << " (first non-integral index " << iv["first_non_integral_index"] << ")";
        out << "\n";
        if (doc.contains("prime")) {
            const auto& v = doc["prime"];
            out << "in S: " << (v["in_S"].get<bool>() ? "yes" : "no");
            if (!v["reasons"].empty()) out << " " << list(v["reasons"]);
            out << "\n";
        }
        if (doc.contains("h")) out << "h = " << doc["h"] << "\n";
        if (doc.contains("certificate")) {
            const auto& c = doc["certificate"];
            out << "relation (level j = " << c["j"] << ", coefficient degree " << c["coefficient_degree"] << "):\n";
            std::size_t i = 0;
            for (const auto& q : c["relation"]) out << "  r_" << i++ << " = " << str(q) << "\n";
            out << "verified to z^" << c["verified_to"] << " (working precision " << c["working_precision"] << ")\n";
            const auto& b = doc["bounds"];
            out << "degree bound " << str(b["degree_bound"]) << ", theorem bound " << str(b["theorem_bound"])
                << ", refined bound " << str(b["refined_bound"]) << " (r = " << b["r"]
                << (b["r_heuristic"].get<bool>() ? ", heuristic" : "") << ")\n";
        }
        if (doc.contains("oracle")) {
            const auto& o = doc["oracle"];
            if (o["degree"].is_null()) {
                out << "oracle: no relation up to degree " << o["searched_degree"] << "\n";
            } else {
                out << "oracle: algebraic degree " << o["degree"] << ", P_k = " << list(o["polynomial"])
                    << (o["consistent"].get<bool>() ? " (consistent)" : " (INCONSISTENT)") << "\n";
            }
        }
    }
    if (doc.contains("error")) {
        const auto& e = doc["error"];
        out << "error[" << str(e["tag"]) << "] code " << e["code"] << ": " << str(e["message"]) << "\n";
    }
    for (const auto& w : doc["warnings"]) out << "warning: " << str(w) << "\n";
    if (doc.contains("timings")) out << "time: " << doc["timings"]["total_ms"] << " ms\n";
    return out.str();
}

/// CSV prime table.
inline std::string render_csv(const Json& doc) {
    if (doc["command"] != "primes") throw InputError("--csv is only available for the primes command");
    std::ostringstream out;
    out << "p,in_S,h_uniform,h_min,reasons\n";
    for (const auto& row : doc["primes"]) {
        std::string reasons;
        for (const auto& x : row["reasons"]) reasons += (reasons.empty() ? "" : ";") + x.get<std::string>();
        out << row["p"] << "," << (row["in_S"].get<bool>() ? "1" : "0") << ","
            << (row["h_uniform"].is_null() ? "" : row["h_uniform"].get<std::string>()) << ","
            << (row["h_min"].is_null() ? "" : std::to_string(row["h_min"].get<std::uint64_t>())) << ",\"" << reasons
            << "\"\n";
    }
    return out.str();
}

inline Json error_document(const Error& e) { return {{"error", detail::error_json(e)}}; }

}  // namespace frobenize::cli
