// Command-line front end: builds modules, runs verification suites, computes
// PI degrees and decides isomorphisms. Reports go to standard output as JSON
// (or CSV tables); the exit status is 0 all pass, 1 a check failed, 2 invalid
// input, 3 a resource guard tripped.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsaa/error.hpp"
#include "qsaa/module_io.hpp"
#include "qsaa/pi_degree.hpp"
#include "qsaa/simple_mods.hpp"
#include "qsaa/smash.hpp"
#include "qsaa/suite.hpp"
#include "qsaa/verma.hpp"

using nlohmann::json;
using namespace qsaa;

namespace {

struct Globals {
    std::string format = "json";
    std::size_t closure_guard = 64;
    long bruteforce_guard = 10'000'000;
    std::string echo;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

double elapsed(const Globals& g) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - g.start).count();
}

int emit_report(const Globals& g, int l, json payload, const std::vector<CheckResult>& results) {
    if (g.format == "csv") {
        std::cout << "check,status,details\n";
        for (const auto& r : results)
            std::cout << csv_field(r.name) << ',' << to_string(r.status) << ',' << csv_field(r.details) << '\n';
    } else {
        json rs = json::array();
        for (const auto& r : results) rs.push_back({{"check", r.name}, {"status", to_string(r.status)}, {"details", r.details}});
        payload["command"] = g.echo;
        payload["l"] = l;
        payload["results"] = std::move(rs);
        std::ostringstream t;
        t << std::fixed << std::setprecision(3) << elapsed(g);
        payload["timing_seconds"] = std::stod(t.str());
        std::cout << payload.dump(2) << '\n';
    }
    return exit_status(results);
}

int emit_module(const Globals& g, const MatrixModule& m, const std::string& out_path) {
    const std::string text = module_to_json(m).dump(2);
    if (out_path.empty()) {
        if (g.format == "csv") fail(ErrorKind::InvalidInput, "module output is JSON only");
        std::cout << text << '\n';
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) fail(ErrorKind::InvalidInput, "cannot write " + out_path);
    out << text << '\n';
    return emit_report(g, m.order(), json{{"module_file", out_path}, {"dim", m.dim()}},
                       {{"write", Status::Pass, out_path, false}});
}

MatrixModule load_module(const std::string& path, bool verify) {
    if (path != "-") return read_module_file(path, verify);
    json j;
    try {
        j = json::parse(std::cin);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("stdin: ") + e.what());
    }
    return module_from_json(j, verify);
}

SimpleType parse_type(const std::string& s) {
    if (s == "m1") return SimpleType::M1;
    if (s == "m2") return SimpleType::M2;
    if (s == "m3") return SimpleType::M3;
    fail(ErrorKind::InvalidInput, "type must be m1, m2 or m3");
}

json strings(const std::vector<CycloNum>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

CheckResult verdict(const std::string& name, bool ok, const std::string& details) {
    return {name, ok ? Status::Pass : Status::Fail, details, false};
}

int cmd_pideg(const Globals& g, const std::string& algebra, int l, const std::string& matrix, bool bruteforce) {
    if (l < 1) fail(ErrorKind::InvalidInput, "--l must be positive");
    IntMatrix rows;
    if (!matrix.empty()) {
        try {
            rows = json::parse(matrix).get<IntMatrix>();
        } catch (const json::exception& e) {
            fail(ErrorKind::InvalidInput, std::string("--matrix: ") + e.what());
        }
    }
    std::optional<SkewIntMatrix> h;
    try {
        if (!matrix.empty()) h = SkewIntMatrix(rows);
    } catch (const Error& e) {
        fail(ErrorKind::InvalidInput, e.what());
    }
    if (!h) {
        if (algebra == "qsaa") h = qsaa_exponent_matrix();
        else if (algebra == "smash" || algebra == "B") h = smash_exponent_matrix();
        else fail(ErrorKind::InvalidInput, "--algebra must be qsaa, smash or B");
    }
    const SkewNormalForm nf = skew_normal_form(*h);
    const long p = pi_degree_from_factors(nf.factors, l);
    json payload{{"factors", nf.factors}, {"kernel_dim", nf.kernel_dim}, {"pideg", p}};
    if (matrix.empty()) payload["algebra"] = algebra;
    std::vector<CheckResult> results{verdict("pideg", true, std::to_string(p))};
    if (bruteforce) {
        const long card = image_cardinality_bruteforce(*h, l, g.bruteforce_guard);
        payload["bruteforce_h"] = card;
        results.push_back(verdict("pideg.bruteforce", p * p == card, "h=" + std::to_string(card)));
    }
    return emit_report(g, l, std::move(payload), results);
}

int cmd_verify(const Globals& g, const std::string& path, bool simple) {
    const MatrixModule m = load_module(path, false);
    const auto violations = verify_relations(m);
    std::vector<CheckResult> results;
    for (const Relation& rel : m.algebra().relations()) {
        auto it = std::find_if(violations.begin(), violations.end(), [&](const auto& v) { return v.relation == rel.name; });
        if (it == violations.end()) results.push_back(verdict("relation " + rel.name, true, ""));
        else
            results.push_back(verdict("relation " + rel.name, false,
                                      "entry (" + std::to_string(it->row) + "," + std::to_string(it->col) +
                                          ") residual " + it->residual.str()));
    }
    json payload{{"presentation", std::string(presentation_name(m.presentation()))}, {"dim", m.dim()}};
    if (simple && violations.empty()) {
        const auto rep = is_simple(m, g.closure_guard);
        CheckResult r{"simple", rep.verdict == Simplicity::Simple ? Status::Pass
                                : rep.verdict == Simplicity::NotSimple ? Status::Fail
                                                                       : Status::Undetermined,
                      to_string(rep.verdict), false};
        if (rep.witness) r.details += ", invariant subspace of dim " + std::to_string(rep.witness->dim());
        if (rep.closure_dim) {
            r.details += ", closure " + std::to_string(*rep.closure_dim);
            payload["closure_dim"] = *rep.closure_dim;
        }
        payload["simplicity"] = to_string(rep.verdict);
        results.push_back(r);
    }
    return emit_report(g, m.order(), std::move(payload), results);
}

int cmd_iso(const Globals& g, const std::string& type_name, int l, const std::string& mu_text,
            const std::string& gamma_text, bool oracle) {
    const SimpleType type = parse_type(type_name);
    const auto mu = parse_cyclo_list(l, mu_text), gamma = parse_cyclo_list(l, gamma_text);
    std::optional<IsoWitness> w;
    Matrix p(l, 0, 0);
    switch (type) {
        case SimpleType::M1:
            w = iso_m1(l, params_m1(mu), params_m1(gamma));
            if (w) p = explicit_iso_m1(l, params_m1(mu), params_m1(gamma), *w);
            break;
        case SimpleType::M2:
            w = iso_m2(l, params_m2(mu), params_m2(gamma));
            if (w) p = explicit_iso_m2(l, params_m2(mu), params_m2(gamma), *w);
            break;
        case SimpleType::M3:
            w = iso_m3(l, params_m3(mu), params_m3(gamma));
            if (w) p = explicit_iso_m3(l, params_m3(mu), params_m3(gamma), *w);
            break;
    }
    json payload{{"type", type_name}, {"isomorphic", w.has_value()}};
    std::vector<CheckResult> results{verdict("criterion", true, w ? "isomorphic" : "not isomorphic")};
    const MatrixModule a = build_type(l, type, mu), b = build_type(l, type, gamma);
    if (w) {
        if (type == SimpleType::M3) payload["r"] = w->r2;
        else {
            payload["r1"] = w->r1;
            payload["r2"] = w->r2;
        }
        const bool ok = is_hom(a, b, p) && p.try_inverse().has_value();
        payload["intertwiner_verified"] = ok;
        results.push_back(verdict("intertwiner", ok, ok ? "invertible module map" : "not an invertible module map"));
    }
    if (oracle) {
        const std::size_t d = hom_space(a, b).size();
        payload["hom_dim"] = d;
        results.push_back(verdict("hom_space oracle", (d == 1) == w.has_value(), "dim Hom = " + std::to_string(d)));
    }
    return emit_report(g, l, std::move(payload), results);
}

int cmd_classify(const Globals& g, const std::string& path, const std::string& hints_text) {
    const MatrixModule m = load_module(path, true);
    const int l = m.order();
    const std::vector<CycloNum> hints = hints_text.empty() ? std::vector<CycloNum>{} : parse_cyclo_list(l, hints_text);
    const Classification r = classify(m, hints);
    const EigenData& e = r.eigen;
    json eig{{"alpha", e.alpha.str()}, {"beta", e.beta.str()}, {"xi", e.xi.str()},
             {"lambda1", e.lambda1.str()}, {"lambda2", e.lambda2.str()}};
    if (e.alpha_prime) eig["alpha_prime"] = e.alpha_prime->str();
    if (e.beta_prime) eig["beta_prime"] = e.beta_prime->str();
    std::string type = to_string(r.type);
    std::transform(type.begin(), type.end(), type.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    json payload{{"type", type}, {"params", strings(r.params)}, {"eigen", eig}, {"shift", r.shift}, {"direct_map", r.direct_map}};
    const bool ok = is_hom(build_type(l, r.type, r.params), m, r.intertwiner) && r.intertwiner.try_inverse().has_value();
    return emit_report(g, l, std::move(payload), {verdict("intertwiner", ok, ok ? "invertible module map" : "failed")});
}

int cmd_verma(const Globals& g, int l, int p, const std::string& l1, const std::string& l2, bool census, const std::string& out) {
    const VermaParams params{parse_cyclo(l, l1), parse_cyclo(l, l2)};
    const MatrixModule m = build_q(l, p, params);
    const VermaVerdicts v = verdicts(l, p, params);
    json payload{{"p", p},
                 {"dim", m.dim()},
                 {"verdicts",
                  {{"simple", v.simple},
                   {"semisimple", v.semisimple},
                   {"indecomposable", v.indecomposable},
                   {"chain_invariant", v.chain_invariant},
                   {"has_complement", v.has_complement}}}};
    if (out.empty()) payload["module"] = module_to_json(m);
    else {
        std::ofstream f(out);
        if (!f) fail(ErrorKind::InvalidInput, "cannot write " + out);
        f << module_to_json(m).dump(2) << '\n';
        payload["module_file"] = out;
    }
    if (census) {
        json rows = json::array();
        for (const auto& c : spin_up_census(l, p, params))
            rows.push_back({{"label", c.label}, {"spin_dim", c.spin_dim}, {"member", c.member}});
        payload["census"] = std::move(rows);
    }
    std::vector<CheckResult> results;
    if (p == 1) results.push_back(verdict("simple", v.simple, "Q_1 is expected simple"));
    else {
        results.push_back(verdict("not simple", !v.simple, "Q_p with p >= 2 has the chain submodules"));
        results.push_back(verdict("not semisimple", !v.semisimple, ""));
        results.push_back(verdict("indecomposable", v.indecomposable, "dim End/rad = 1"));
        bool none_split = v.chain_invariant;
        for (bool b : v.has_complement) none_split = none_split && !b;
        results.push_back(verdict("chain members lack complements", none_split, ""));
    }
    return emit_report(g, l, std::move(payload), results);
}

int cmd_suite(const Globals& g, int l, const std::string& only, std::size_t pairs) {
    SuiteOptions opt;
    opt.closure_guard = g.closure_guard;
    opt.bruteforce_guard = g.bruteforce_guard;
    opt.iso_pairs = pairs;
    std::vector<Check> checks;
    for (auto& c : full_battery(l, opt))
        if (only.empty() || c.name.rfind(only, 0) == 0) checks.push_back(std::move(c));
    const unsigned workers = worker_count_from_env();
    const auto results = run_checks(checks, workers);
    return emit_report(g, l, json{{"checks", results.size()}}, results);
}

int cmd_pbw(const Globals& g, const std::string& algebra, int l, const std::string& expr) {
    const Presentation& p = Presentation::get(parse_presentation(algebra), l);
    const AlgebraElement x = parse_element(p, expr);
    return emit_report(g, l, json{{"algebra", algebra}, {"normal_form", x.str()}, {"central", p.is_central(x)}},
                       {verdict("normal_form", true, x.str())});
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidOrder:
        case ErrorKind::OrderMismatch:
        case ErrorKind::PresentationMismatch:
        case ErrorKind::InvalidParameter:
        case ErrorKind::InvalidInput:
        case ErrorKind::Unsupported:
        case ErrorKind::Parse:
            return 2;
        case ErrorKind::Resource:
            return 3;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    Globals g;
    for (int i = 1; i < argc; ++i) g.echo += (i > 1 ? " " : "") + std::string(argv[i]);

    CLI::App app{"Exact computations for quantum affine space smash products at roots of unity"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--closure-guard", g.closure_guard, "Largest module dimension for algebra closure");
    app.add_option("--bruteforce-guard", g.bruteforce_guard, "Largest enumeration for the PI-degree oracle");

    int l = 0, p = 1;
    std::string algebra = "qsaa", matrix, mu, gamma, module_path, hints, out, lambda1 = "1", lambda2 = "1", params, only, expr,
                type;
    bool bruteforce = false, simple = false, oracle = false, census = false;
    std::size_t pairs = 60;

    auto* pideg = app.add_subcommand("pideg", "PI degree from the skew exponent matrix");
    pideg->add_option("--algebra", algebra, "qsaa, smash or B");
    pideg->add_option("--l", l, "Root order (or modulus m for --matrix)")->required();
    pideg->add_option("--matrix", matrix, "Custom skew matrix as JSON integer rows");
    pideg->add_flag("--bruteforce", bruteforce, "Cross-check with subgroup enumeration");

    auto* build = app.add_subcommand("build", "Emit the JSON of M1, M2 or M3");
    build->add_option("type", type, "m1, m2 or m3")->required();
    build->add_option("--l", l)->required();
    build->add_option("--mu", mu, "Comma-separated cyclotomic literals")->required();
    build->add_option("--out", out, "Write to a file instead of standard output");

    auto* verify = app.add_subcommand("verify", "Check the defining relations on a module file");
    verify->add_option("--module", module_path, "Module JSON file, or - for stdin")->required();
    verify->add_flag("--simple", simple, "Also decide simplicity");

    auto* iso = app.add_subcommand("iso", "Decide isomorphism of two modules of the same type");
    iso->add_option("type", type, "m1, m2 or m3")->required();
    iso->add_option("--l", l)->required();
    iso->add_option("--mu", mu)->required();
    iso->add_option("--gamma", gamma)->required();
    iso->add_flag("--oracle", oracle, "Cross-check with the Hom-space dimension");

    auto* cls = app.add_subcommand("classify", "Identify a simple module as M1, M2 or M3");
    cls->add_option("--module", module_path)->required();
    cls->add_option("--hints", hints, "Candidate eigenvalues and roots");

    auto* verma = app.add_subcommand("verma", "Finite quotient Q_p of the Verma module");
    verma->add_option("--l", l)->required();
    verma->add_option("--p", p);
    verma->add_option("--lambda1", lambda1);
    verma->add_option("--lambda2", lambda2);
    verma->add_flag("--census", census, "Spin-up dimension of every basis vector");
    verma->add_option("--out", out, "Write the module to a file");

    auto* smash = app.add_subcommand("smash", "Modules over the smash product and its subalgebra B");
    smash->require_subcommand(1);
    smash->fallthrough();
    auto* n1 = smash->add_subcommand("build-n1", "The l^2-dimensional B-module N1");
    n1->add_option("--l", l)->required();
    n1->add_option("--params", params, "lambda1,lambda2,lambda3,xi,alpha")->required();
    n1->add_option("--out", out);
    auto* lift = smash->add_subcommand("lift", "Lift a B-module to the smash product");
    lift->add_option("--module", module_path)->required();
    lift->add_option("--out", out);
    auto* spideg = smash->add_subcommand("pideg", "PI degree of the smash product");
    spideg->add_option("--l", l)->required();

    auto* suite = app.add_subcommand("suite", "Run the verification battery for one root order");
    suite->add_option("--l", l)->required();
    suite->add_option("--only", only, "Run checks whose name starts with this prefix");
    suite->add_option("--pairs", pairs, "Isomorphism pairs per type");

    auto* pbw = app.add_subcommand("pbw", "PBW normal form of an expression");
    pbw->add_option("--algebra", algebra, "qsaa, smash or B");
    pbw->add_option("--l", l)->required();
    pbw->add_option("--expr", expr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*pideg) return cmd_pideg(g, algebra, l, matrix, bruteforce);
        if (*build) return emit_module(g, build_type(l, parse_type(type), parse_cyclo_list(l, mu)), out);
        if (*verify) return cmd_verify(g, module_path, simple);
        if (*iso) return cmd_iso(g, type, l, mu, gamma, oracle);
        if (*cls) return cmd_classify(g, module_path, hints);
        if (*verma) return cmd_verma(g, l, p, lambda1, lambda2, census, out);
        if (*n1) {
            const auto v = parse_cyclo_list(l, params);
            if (v.size() != 5) fail(ErrorKind::InvalidInput, "--params needs lambda1,lambda2,lambda3,xi,alpha");
            return emit_module(g, build_n1(l, {v[0], v[1], v[2], v[3], v[4]}), out);
        }
        if (*lift) return emit_module(g, lift_to_A(load_module(module_path, true)), out);
        if (*spideg) return cmd_pideg(g, "smash", l, "", false);
        if (*suite) return cmd_suite(g, l, only, pairs);
        if (*pbw) return cmd_pbw(g, algebra, l, expr);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
