#include <iostream>

#include <CLI11.hpp>

#include "frobenize/cli.hpp"

using namespace frobenize;
using frobenize::cli::AnalysisRequest;
using frobenize::cli::Json;

namespace {

struct Flags {
    std::string op, family, alpha, beta, a, alphas, bs, q;
    std::int64_t bound = 100;
    std::optional<std::int64_t> p;
    std::optional<unsigned> jmax, r;
    std::size_t degmax = 128, precision = 256, integrality = 2000, terms = 10;
    bool oracle = false, json = false, csv = false, force = false, semisimple = false, timings = false;
};

AnalysisRequest build_request(const Flags& f) {
    AnalysisRequest req;
    const bool has_op = !f.op.empty(), has_family = !f.family.empty();
    if (has_op == has_family) throw InputError("give exactly one of --op and --family");
    if (has_op) {
        req.kind = cli::SourceKind::Expression;
        req.expression = f.op;
    } else if (f.family == "hypergeometric") {
        req.kind = cli::SourceKind::Hypergeometric;
        req.alpha = parse_rational_list(f.alpha);
        req.beta = f.beta.empty() ? std::vector<Rat>{} : parse_rational_list(f.beta);
    } else if (f.family == "pochhammer") {
        req.kind = cli::SourceKind::Pochhammer;
        if (f.a.empty()) throw InputError("pochhammer family needs --a");
        req.a = parse_rational(f.a);
        req.alphas = parse_rational_list(f.alphas);
        req.bs = parse_rational_list(f.bs);
    } else if (f.family == "order1") {
        req.kind = cli::SourceKind::Order1;
        if (f.q.empty()) throw InputError("order1 family needs --Q");
        req.q = f.q;
    } else {
        throw InputError("unknown family '" + f.family + "' (hypergeometric, pochhammer, order1)");
    }
    req.bound = f.bound;
    req.p = f.p;
    req.j_max = f.jmax;
    req.deg_max = f.degmax;
    req.precision = f.precision;
    req.integrality_depth = f.integrality;
    req.terms = f.terms;
    req.refined_r = f.r;
    req.oracle = f.oracle;
    req.force = f.force;
    req.assume_semisimple = f.semisimple;
    req.timings = f.timings;
    return req;
}

void add_source(CLI::App* sub, Flags& f) {
    sub->add_option("--op", f.op, "operator expression in D (d/dz) or T (z d/dz)");
    sub->add_option("--family", f.family, "hypergeometric | pochhammer | order1");
    sub->add_option("--alpha", f.alpha, "hypergeometric alphas, e.g. 1/2,1/2");
    sub->add_option("--beta", f.beta, "hypergeometric betas (beta_n = 1 implicit when n-1 are given)");
    sub->add_option("--a", f.a, "Jordan-Pochhammer parameter a");
    sub->add_option("--alphas", f.alphas, "Jordan-Pochhammer singular points");
    sub->add_option("--bs", f.bs, "Jordan-Pochhammer b_i");
    sub->add_option("--Q", f.q, "order-one coefficient: y' = Q y");
    sub->add_flag("--json", f.json, "emit one JSON document");
    sub->add_flag("--timings", f.timings, "include wall-clock timings");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuchsian operators, Frobenius prime sets and mod-p algebraicity certificates"};
    app.require_subcommand(1);
    Flags f;

    auto* analyze = app.add_subcommand("analyze", "singular points, exponents, Fuchs relation, rigidity");
    add_source(analyze, f);
    analyze->add_flag("--assume-semisimple", f.semisimple, "rigidity from exponents, taking local monodromy semisimple");

    auto* primes = app.add_subcommand("primes", "primes carrying a strong Frobenius structure");
    add_source(primes, f);
    primes->add_option("--bound", f.bound, "largest prime examined")->capture_default_str();
    primes->add_flag("--csv", f.csv, "CSV prime table");

    auto* certify = app.add_subcommand("certify", "Frobenius relation for the power-series solution mod p");
    add_source(certify, f);
    certify->add_option("--p", f.p, "prime")->required();
    certify->add_option("--jmax", f.jmax, "largest Frobenius level searched (default n^2)");
    certify->add_option("--degmax", f.degmax, "cap on the coefficient degree")->capture_default_str();
    certify->add_option("--precision", f.precision, "minimum working precision")->capture_default_str();
    certify->add_option("--integrality", f.integrality, "number of coefficients checked for p-integrality")
        ->capture_default_str();
    certify->add_option("--r", f.r, "dimension r for the refined bound");
    certify->add_flag("--oracle", f.oracle, "cross-check with a minimal polynomial search");
    certify->add_flag("--force", f.force, "certify even when p is not in S");

    auto* expand = app.add_subcommand("expand", "series coefficients over Q and mod p");
    add_source(expand, f);
    expand->add_option("--p", f.p, "prime");
    expand->add_option("--terms", f.terms, "number of coefficients")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const AnalysisRequest req = build_request(f);
        cli::Report rep;
        if (analyze->parsed()) rep = cli::cmd_analyze(req);
        else if (primes->parsed()) rep = cli::cmd_primes(req);
        else if (certify->parsed()) rep = cli::cmd_certify(req);
        else rep = cli::cmd_expand(req);
        if (f.json) std::cout << rep.doc.dump(2) << "\n";
        else if (f.csv) std::cout << cli::render_csv(rep.doc);
        else std::cout << cli::render_text(rep.doc);
        return rep.exit_code;
    } catch (const Error& e) {
        if (f.json) std::cout << cli::error_document(e).dump(2) << "\n";
        else std::cerr << "error[" << e.tag() << "] code " << e.exit_code() << ": " << e.what() << "\n";
        return e.exit_code();
    }
}
