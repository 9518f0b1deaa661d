// fxf -- transformations between Heun-type and hypergeometric-type
// second-order ODEs, with series-based residual verification.
//
// Every subcommand reads JSON (inline flags assemble it) and writes a single
// JSON document to stdout. Exit codes: 0 success/pass, 1 verification fail,
// 2 input error.

#include "fxf/errors.hpp"
#include "fxf/json_io.hpp"
#include "fxf/sampler.hpp"
#include "fxf/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fxf;
using fxf::json::Json;

namespace {

struct CommandResult {
    Json doc;
    int exit_code = 0;
};

Float float_from_json(const Json& j)
{
    if (j.is_string())
        return Float(j.get<std::string>());
    return Float(j.get<double>());
}

VerifyOptions verify_options_from(const Json& options)
{
    VerifyOptions opts;
    if (options.contains("tol"))
        opts.tol = float_from_json(options.at("tol"));
    if (options.contains("order"))
        opts.order = options.at("order").get<int>();
    if (options.contains("max_order"))
        opts.max_order = options.at("max_order").get<int>();
    if (options.contains("n_points"))
        opts.n_points = options.at("n_points").get<int>();
    if (options.contains("points"))
        for (const Json& p : options.at("points"))
            opts.points.push_back(float_from_json(p));
    if (options.contains("expansion_point"))
        opts.expansion_point = json::rat_from(options.at("expansion_point"));
    if (options.contains("exact"))
        opts.exact = options.at("exact").get<bool>();
    if (opts.tol <= 0)
        throw fxf::ParseError("tolerance must be positive");
    if (opts.order < 8 || opts.order > 512)
        throw fxf::ParseError("order must lie in [8, 512]");
    return opts;
}

std::uint64_t seed_from(const Json& options)
{
    if (options.contains("seed"))
        return options.at("seed").get<std::uint64_t>();
    return 20250810;
}

Json checks_entry(bool ok)
{
    return ok ? Json("pass") : Json("fail");
}

// ---- subcommand bodies -------------------------------------------------

CommandResult cmd_classify(const Json& input, const Json&)
{
    json::OdeInput in = json::ode_input_from(input);
    Json out;
    out["input"] = json::ode_json(in.ode);
    if (in.heun)
        out["matched_heun"] = json::heun_json(*in.heun);
    if (in.hg)
        out["matched_hypergeometric"] = json::hg_json(*in.hg);
    out["classification"] = json::classification_json(classify(in.ode));
    return {out, 0};
}

CommandResult cmd_companion(const Json& input, const Json&)
{
    RatFunc F, f;
    if (input.contains("F") && input.contains("f")) {
        F = json::ratfunc_from(input.at("F"));
        f = json::ratfunc_from(input.at("f"));
    } else {
        json::OdeInput in = json::ode_input_from(input);
        F = -in.ode.P;
        f = -in.ode.Q;
    }
    CompanionPair pair = companion(F, f);
    Json out;
    out["source"] = json::ode_json(pair.source);
    out["result"] = json::ode_json(pair.companion);
    out["map"] = Json{{"F", json::ratfunc_json(pair.F)},
                      {"f", json::ratfunc_json(pair.f)}};
    out["flags"] = Json::array();
    out["checks"] =
        Json{{"companion_Q_equals_source_Q",
              checks_entry(pair.companion.Q == pair.source.Q)}};
    return {out, 0};
}

CommandResult cmd_hg_dual(const Json& input, const Json& options)
{
    if (input.contains("sweep")) {
        int n = input.at("sweep").get<int>();
        RatSampler sampler(seed_from(options));
        int pass = 0;
        for (int i = 0; i < n; i++) {
            HGParams p = sample_hg(sampler);
            HGParams dual = hg_companion_map(p); // throws on mismatch
            LinearODE2 src = from_hypergeometric(p);
            LinearODE2 lhs = companion(-src.P, -src.Q).companion;
            if (lhs == from_hypergeometric(dual))
                pass++;
        }
        Json out;
        out["sweep"] = n;
        out["pass"] = pass;
        out["fail"] = n - pass;
        return {out, pass == n ? 0 : 1};
    }

    HGParams p = json::hg_from(input);
    HGParams dual = hg_companion_map(p);
    Json out;
    out["source"] = json::hg_json(p);
    out["result"] = json::hg_json(dual);
    out["map"] = Json{{"a", json::rat_json(dual.a)},
                      {"b", json::rat_json(dual.b)},
                      {"c", json::rat_json(dual.c)}};
    out["flags"] = Json::array();
    Json checks;
    if (p.a * p.b != 0) {
        checks["exact_dual_equality"] = "pass"; // hg_companion_map asserts it
        out["result_ode"] = json::ode_json(from_hypergeometric(dual));
    } else {
        out["flags"].push_back("zero_potential_no_companion");
    }
    out["checks"] = std::move(checks);
    return {out, 0};
}

CommandResult cmd_heun_dual(const Json& input, const Json&)
{
    Json params = input;
    if (params.contains("q_over_ab")) {
        Rat ratio = json::rat_from(params.at("q_over_ab"));
        Rat ab = json::rat_from(params.at("alpha_beta"));
        params["q"] = json::rat_json(ab * ratio);
        params.erase("q_over_ab");
    }
    HeunParams p = json::heun_from(params);
    HeunCompanion dual = heun_companion(p);

    Json out;
    out["source"] = json::heun_json(p);
    out["result"] = json::ode_json(dual.ode);
    out["map"] = dual.matched ? json::heun_json(*dual.matched) : Json(nullptr);
    Json flags = Json::array();
    if (dual.coalescence)
        flags.push_back("coalescence_" + *dual.coalescence);
    out["flags"] = std::move(flags);

    Classification cls = classify(dual.ode);
    Json checks;
    checks["singular_points"] = static_cast<int>(cls.points.size());
    if (dual.matched) {
        const HeunParams& m = *dual.matched;
        checks["fuchs_relation"] = checks_entry(
            m.gamma() + m.delta() + m.epsilon() == m.alpha_plus_beta() + 1);
        checks["round_trip"] = checks_entry(from_heun(m) == dual.ode);
    }
    out["checks"] = std::move(checks);
    out["classification"] = json::classification_json(cls);
    return {out, 0};
}

CommandResult cmd_mathieu(const Json& input, const Json&)
{
    Rat a = json::rat_from(input.at("a"));
    Rat b = json::rat_from(input.at("b"));
    Rat c = json::rat_from(input.at("c"));
    Rat m = json::rat_from(input.at("m"));
    MathieuCompanion mc = mathieu_like_companion(a, b, c, m);

    Json out;
    out["result"] = json::ode_json(mc.ode);
    out["map"] = Json{{"third_singularity", json::rat_json(mc.third_singularity)}};
    out["flags"] = mc.flags;
    Classification cls = classify(mc.ode);
    out["classification"] = json::classification_json(cls);
    bool infinity_irregular = false;
    for (const SingularPoint& pt : cls.points)
        if (pt.at_infinity && pt.kind == PointKind::Irregular)
            infinity_irregular = true;
    out["checks"] = Json{{"irregular_at_infinity", checks_entry(infinity_irregular)}};
    return {out, 0};
}

CommandResult cmd_inner_heun(const Json& input, const Json&)
{
    Rat a = json::rat_from(input.at("a"));
    Rat b = json::rat_from(input.at("b"));
    Rat c = json::rat_from(input.at("c"));
    Rat c1 = json::rat_from(input.at("c1"));
    Rat D = json::rat_from(input.at("D"));
    Rat m = json::rat_from(input.at("m"));
    Rat n = json::rat_from(input.at("n"));
    Rat mu = json::rat_from(input.at("mu"));
    Rat lambda = json::rat_from(input.at("lambda"));

    InnerHeunSpec spec = build_inner_heun(a, b, c, c1, D, m, n, mu, lambda);
    VariableChange vc = solve_eta(D, lambda, mu, c1);
    OuterEquation outer = build_outer_equation(spec, vc);

    Json out;
    out["spec"] = json::inner_spec_json(spec);
    out["variable_change"] = json::variable_change_json(vc);
    out["outer"] = json::outer_json(outer);

    // expected printed-minus-recomputed difference: (c-1) m mu / c1 in x
    Poly expected{Rat(0), (c - 1) * m * mu / c1};
    Json checks;
    checks["delta_zero"] = checks_entry(spec.heun.delta() == 0);
    checks["fuchs_relation"] = checks_entry(
        spec.heun.gamma() + spec.heun.delta() + spec.heun.epsilon() ==
        spec.heun.alpha_plus_beta() + 1);
    checks["q_equals_minus_D_d"] =
        checks_entry(spec.heun.q() == -D * spec.heun.d());
    checks["eta_integral_constancy_dev"] =
        json::to_double(eta_integral_constancy_deviation(vc, D));
    checks["n_diff_expected_x_coefficient"] =
        json::rat_json((c - 1) * m * mu / c1);
    checks["n_diff_matches_expected"] = checks_entry(outer.n_diff == expected);
    out["checks"] = std::move(checks);
    out["flags"] = Json::array();
    return {out, 0};
}

CommandResult cmd_reduce(const Json& input, const Json&)
{
    Rat a = json::rat_from(input.at("a"));
    Rat b = json::rat_from(input.at("b"));
    Rat c = json::rat_from(input.at("c"));
    Rat m = json::rat_from(input.at("m"));
    Rat n = json::rat_from(input.at("n"));
    Rat D = input.contains("D") ? json::rat_from(input.at("D")) : Rat(1);

    std::vector<ReductionSolution> sols = reduce_to_hypergeometric(a, b, c, m, n);
    ReductionClosedForms closed = reduction_closed_forms(a, b, c, m, n);

    Json out;
    Json arr = Json::array();
    for (const ReductionSolution& s : sols)
        arr.push_back(json::reduction_json(s));
    out["solutions"] = std::move(arr);

    Json closed_json;
    closed_json["R"] = closed.R ? Json(json::rat_json(*closed.R)) : Json(nullptr);
    closed_json["c1"] = closed.c1 ? Json(json::rat_json(*closed.c1)) : Json(nullptr);
    closed_json["mu"] = closed.mu ? Json(json::rat_json(*closed.mu)) : Json(nullptr);
    out["closed_forms"] = std::move(closed_json);

    Json checks;
    const ReductionSolution& s = sols.front();
    auto residuals = reduction_system_residuals(a, b, c, m, n, s.R, s.c1, s.mu);
    checks["substitution"] = checks_entry(residuals[0] == 0 && residuals[1] == 0 &&
                                          residuals[2] == 0);
    if (closed.R)
        checks["closed_form_R_matches"] = checks_entry(*closed.R == s.R);
    if (closed.c1)
        checks["closed_form_c1_matches"] = checks_entry(*closed.c1 == s.c1);
    if (closed.mu)
        checks["closed_form_mu_matches"] = checks_entry(*closed.mu == s.mu);

    ReducedOuter reduced = reduced_outer_equation(s, D, m, n);
    Json red;
    red["ode"] = json::ode_json(reduced.ode);
    red["n_recomputed"] = json::poly_json(reduced.n_recomputed);
    red["square_diff"] = json::poly_json(reduced.square_diff);
    red["classification"] = json::classification_json(classify(reduced.ode));
    out["reduced"] = std::move(red);
    checks["n_equals_R_mx_plus_n_squared"] =
        checks_entry(reduced.square_diff.is_zero());
    out["checks"] = std::move(checks);
    return {out, 0};
}

CommandResult cmd_verify(const Json& input, const Json& options)
{
    std::string id = input.at("identity").get<std::string>();
    VerifyOptions opts = verify_options_from(options);

    Json out;
    VerificationReport report;
    Json flags = Json::array();

    if (id == identity::product_eq3) {
        if (input.contains("sweep")) {
            int nn = input.at("sweep").get<int>();
            RatSampler sampler(seed_from(options));
            int pass = 0;
            for (int i = 0; i < nn; i++) {
                HeunParams p = sample_heun(sampler);
                LinearODE2 e = from_heun(p);
                CompanionPair pair = companion(-e.P, -e.Q);
                if (verify_product_identity(pair, opts).pass)
                    pass++;
            }
            out["identity"] = id;
            out["sweep"] = nn;
            out["pass"] = pass;
            out["fail"] = nn - pass;
            return {out, pass == nn ? 0 : 1};
        }
        json::OdeInput in = json::ode_input_from(input.at("equation"));
        CompanionPair pair = companion(-in.ode.P, -in.ode.Q);
        report = verify_product_identity(pair, opts);
    } else if (id == identity::quotient_eq6) {
        RatFunc F = json::ratfunc_from(input.at("F"));
        RatFunc f = json::ratfunc_from(input.at("f"));
        Rat alpha = json::rat_from(input.at("alpha"));
        report = verify_quotient_identity(F, f, alpha, opts);
    } else if (id == identity::derivative_relation) {
        report = hg_derivative_check(json::rat_from(input.at("a")),
                                     json::rat_from(input.at("b")),
                                     json::rat_from(input.at("c")), opts);
    } else if (id == identity::chain_eq22) {
        ChainRun run = verify_chain_from_params(
            json::rat_from(input.at("a")), json::rat_from(input.at("b")),
            json::rat_from(input.at("c")), json::rat_from(input.at("c1")),
            json::rat_from(input.at("D")), json::rat_from(input.at("m")),
            json::rat_from(input.at("n")), json::rat_from(input.at("mu")),
            json::rat_from(input.at("lambda")), opts);
        report = run.report;
        for (const std::string& f : run.flags)
            flags.push_back(f);
    } else if (id == identity::riccati_residual) {
        json::OdeInput in = json::ode_input_from(input.at("equation"));
        report = riccati_self_residual(in.ode, opts);
    } else {
        throw fxf::ParseError("unknown identity \"" + id + "\"");
    }

    out = json::report_json(report);
    out["flags"] = std::move(flags);
    return {out, report.pass ? 0 : 1};
}

CommandResult run_command(const std::string& name, const Json& input,
                          const Json& options)
{
    if (name == "classify")
        return cmd_classify(input, options);
    if (name == "companion")
        return cmd_companion(input, options);
    if (name == "hg-dual")
        return cmd_hg_dual(input, options);
    if (name == "heun-dual")
        return cmd_heun_dual(input, options);
    if (name == "mathieu")
        return cmd_mathieu(input, options);
    if (name == "inner-heun")
        return cmd_inner_heun(input, options);
    if (name == "reduce")
        return cmd_reduce(input, options);
    if (name == "verify")
        return cmd_verify(input, options);
    throw fxf::ParseError("unknown command \"" + name + "\"");
}

CommandResult cmd_batch(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw fxf::ParseError("cannot open batch file: " + path);
    Json items = Json::parse(in); // throws on malformed input

    if (!items.is_array())
        throw fxf::ParseError("batch input must be a JSON array of command objects");

    Json results = Json::array();
    int pass = 0, fail = 0;
    for (const Json& item : items) {
        Json entry;
        try {
            std::string name = item.at("name").get<std::string>();
            Json input = item.contains("input") ? item.at("input") : Json::object();
            Json options = item.contains("options") ? item.at("options") : Json::object();
            CommandResult r = run_command(name, input, options);
            entry["name"] = name;
            entry["exit"] = r.exit_code;
            entry["output"] = r.doc;
            (r.exit_code == 0 ? pass : fail)++;
        } catch (const fxf::Error& e) {
            entry["error"] = e.code();
            entry["message"] = e.what();
            fail++;
        } catch (const std::exception& e) {
            entry["error"] = "Exception";
            entry["message"] = e.what();
            fail++;
        }
        results.push_back(std::move(entry));
    }

    Json out;
    out["total"] = static_cast<int>(items.size());
    out["pass"] = pass;
    out["fail"] = fail;
    out["results"] = std::move(results);
    return {out, fail == 0 ? 0 : 1};
}

void emit(const CommandResult& r)
{
    std::cout << r.doc.dump(2) << "\n";
}

Json parse_inline_json(const std::string& text)
{
    return Json::parse(text);
}

} // namespace

int main(int argc, char** argv)
{
    if (const char* bits = std::getenv("FXF_PRECISION_BITS"))
        set_precision_bits(static_cast<unsigned>(std::strtoul(bits, nullptr, 10)));

    CLI::App app{"fxf -- companion transformations and series verification for "
                 "Heun-type and hypergeometric-type second-order ODEs"};
    app.require_subcommand(1);

    // shared option storage; each subcommand binds what it understands
    std::string heun_json, hg_json, ode_json, input_file;
    std::string f_big_json, f_json, alpha_str, q_over_ab;
    std::string a_str, b_str, c_str, m_str, n_str, d_str, c1_str, mu_str,
        lambda_str, tol_str = "1e-8", points_str, identity_str, batch_file;
    int order = 64, sweep = 0, n_points = 12;
    bool exact_mode = false;
    std::uint64_t seed = 20250810;

    auto add_equation_flags = [&](CLI::App* sub) {
        sub->add_option("--heun", heun_json, "Heun parameters as JSON");
        sub->add_option("--hg", hg_json, "hypergeometric parameters as JSON");
        sub->add_option("--ode", ode_json, "equation as {\"P\":...,\"Q\":...} JSON");
        sub->add_option("--input", input_file, "read the input object from a JSON file");
    };

    auto* classify_cmd = app.add_subcommand("classify", "singular point analysis");
    add_equation_flags(classify_cmd);

    auto* companion_cmd =
        app.add_subcommand("companion", "build the dual equation of y''-Fy'-fy=0");
    add_equation_flags(companion_cmd);
    companion_cmd->add_option("--F", f_big_json, "F as rational-function JSON");
    companion_cmd->add_option("--f", f_json, "f as rational-function JSON");

    auto* hg_dual_cmd =
        app.add_subcommand("hg-dual", "hypergeometric parameter dual (a,b,c) -> (-a,-b,1-c)");
    hg_dual_cmd->add_option("--hg", hg_json, "hypergeometric parameters as JSON");
    hg_dual_cmd->add_option("--a", a_str, "parameter a");
    hg_dual_cmd->add_option("--b", b_str, "parameter b");
    hg_dual_cmd->add_option("--c", c_str, "parameter c");
    hg_dual_cmd->add_option("--sweep", sweep, "run a random property sweep of this size");
    hg_dual_cmd->add_option("--seed", seed, "sweep seed");

    auto* heun_dual_cmd = app.add_subcommand("heun-dual", "companion of a Heun equation");
    heun_dual_cmd->add_option("--heun", heun_json, "Heun parameters as JSON")->required();
    heun_dual_cmd->add_option("--q-over-ab", q_over_ab,
                              "override the accessory parameter: q = alpha*beta * RATIO");

    auto* mathieu_cmd =
        app.add_subcommand("mathieu", "companion of the non-Fuchsian f = -(ab+mx)/(x(x-1)) case");
    for (auto [flag, var] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--a", &a_str}, {"--b", &b_str}, {"--c", &c_str}, {"--m", &m_str}})
        mathieu_cmd->add_option(flag, *var)->required();

    auto* inner_cmd = app.add_subcommand(
        "inner-heun", "inner Heun data, change of variable and outer equation");
    for (auto [flag, var] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--a", &a_str}, {"--b", &b_str}, {"--c", &c_str}, {"--c1", &c1_str},
             {"--D", &d_str}, {"--m", &m_str}, {"--n", &n_str}, {"--mu", &mu_str},
             {"--lambda", &lambda_str}})
        inner_cmd->add_option(flag, *var)->required();

    auto* reduce_cmd =
        app.add_subcommand("reduce", "solve the hypergeometric reduction system exactly");
    for (auto [flag, var] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--a", &a_str}, {"--b", &b_str}, {"--c", &c_str}, {"--m", &m_str},
             {"--n", &n_str}})
        reduce_cmd->add_option(flag, *var)->required();
    reduce_cmd->add_option("--D", d_str, "potential scale for the reduced equation");

    auto* verify_cmd = app.add_subcommand("verify", "series-based residual verification");
    verify_cmd->add_option("--identity", identity_str,
                           "product_eq3 | quotient_eq6 | chain_eq22 | "
                           "derivative_relation | riccati_residual")
        ->required();
    add_equation_flags(verify_cmd);
    verify_cmd->add_option("--F", f_big_json, "F as rational-function JSON");
    verify_cmd->add_option("--f", f_json, "f as rational-function JSON");
    verify_cmd->add_option("--alpha", alpha_str, "constant alpha");
    for (auto [flag, var] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--a", &a_str}, {"--b", &b_str}, {"--c", &c_str}, {"--c1", &c1_str},
             {"--D", &d_str}, {"--m", &m_str}, {"--n", &n_str}, {"--mu", &mu_str},
             {"--lambda", &lambda_str}})
        verify_cmd->add_option(flag, *var);
    verify_cmd->add_option("--tol", tol_str, "residual tolerance (default 1e-8)");
    verify_cmd->add_option("--order", order, "minimum series order, in [8, 512]");
    verify_cmd->add_option("--points", points_str, "comma separated sample points");
    verify_cmd->add_option("--n-points", n_points, "number of default sample points");
    verify_cmd->add_option("--sweep", sweep, "random property sweep size (product_eq3)");
    verify_cmd->add_flag("--exact", exact_mode,
                         "exact rational series coefficients (oracle mode)");
    verify_cmd->add_option("--seed", seed, "sweep seed");

    auto* batch_cmd = app.add_subcommand("batch", "run a JSON array of commands");
    batch_cmd->add_option("file", batch_file, "JSON file with [{name, input, options}...]")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Json input = Json::object();
        Json options = Json::object();

        auto equation_input = [&]() -> Json {
            if (!input_file.empty()) {
                std::ifstream in(input_file);
                if (!in)
                    throw fxf::ParseError("cannot open input file: " + input_file);
                return Json::parse(in);
            }
            if (!heun_json.empty()) {
                Json j = parse_inline_json(heun_json);
                j["type"] = "heun";
                return j;
            }
            if (!hg_json.empty()) {
                Json j = parse_inline_json(hg_json);
                j["type"] = "hypergeometric";
                return j;
            }
            if (!ode_json.empty())
                return parse_inline_json(ode_json);
            throw fxf::ParseError("an equation input is required (--heun/--hg/--ode/--input)");
        };
        auto put_rat = [&input](const char* key, const std::string& value) {
            if (!value.empty())
                input[key] = value;
        };

        CommandResult result;
        if (classify_cmd->parsed()) {
            result = run_command("classify", equation_input(), options);
        } else if (companion_cmd->parsed()) {
            if (!f_big_json.empty() && !f_json.empty()) {
                input["F"] = parse_inline_json(f_big_json);
                input["f"] = parse_inline_json(f_json);
            } else {
                input = equation_input();
            }
            result = run_command("companion", input, options);
        } else if (hg_dual_cmd->parsed()) {
            options["seed"] = seed;
            if (sweep > 0) {
                input["sweep"] = sweep;
            } else if (!hg_json.empty()) {
                input = parse_inline_json(hg_json);
            } else {
                put_rat("a", a_str);
                put_rat("b", b_str);
                put_rat("c", c_str);
            }
            result = run_command("hg-dual", input, options);
        } else if (heun_dual_cmd->parsed()) {
            input = parse_inline_json(heun_json);
            if (!q_over_ab.empty())
                input["q_over_ab"] = q_over_ab;
            result = run_command("heun-dual", input, options);
        } else if (mathieu_cmd->parsed()) {
            put_rat("a", a_str);
            put_rat("b", b_str);
            put_rat("c", c_str);
            put_rat("m", m_str);
            result = run_command("mathieu", input, options);
        } else if (inner_cmd->parsed()) {
            put_rat("a", a_str);
            put_rat("b", b_str);
            put_rat("c", c_str);
            put_rat("c1", c1_str);
            put_rat("D", d_str);
            put_rat("m", m_str);
            put_rat("n", n_str);
            put_rat("mu", mu_str);
            put_rat("lambda", lambda_str);
            result = run_command("inner-heun", input, options);
        } else if (reduce_cmd->parsed()) {
            put_rat("a", a_str);
            put_rat("b", b_str);
            put_rat("c", c_str);
            put_rat("m", m_str);
            put_rat("n", n_str);
            put_rat("D", d_str);
            result = run_command("reduce", input, options);
        } else if (verify_cmd->parsed()) {
            input["identity"] = identity_str;
            options["tol"] = tol_str;
            options["order"] = order;
            options["exact"] = exact_mode;
            options["n_points"] = n_points;
            options["seed"] = seed;
            if (!points_str.empty()) {
                Json pts = Json::array();
                std::stringstream ss(points_str);
                std::string item;
                while (std::getline(ss, item, ','))
                    pts.push_back(item);
                options["points"] = std::move(pts);
            }
            if (sweep > 0)
                input["sweep"] = sweep;
            if (identity_str == identity::quotient_eq6) {
                input["F"] = parse_inline_json(f_big_json);
                input["f"] = parse_inline_json(f_json);
                input["alpha"] = alpha_str;
            } else if (identity_str == identity::derivative_relation) {
                put_rat("a", a_str);
                put_rat("b", b_str);
                put_rat("c", c_str);
            } else if (identity_str == identity::chain_eq22) {
                put_rat("a", a_str);
                put_rat("b", b_str);
                put_rat("c", c_str);
                put_rat("c1", c1_str);
                put_rat("D", d_str);
                put_rat("m", m_str);
                put_rat("n", n_str);
                put_rat("mu", mu_str);
                put_rat("lambda", lambda_str);
            } else if (sweep == 0) {
                input["equation"] = equation_input();
            }
            result = run_command("verify", input, options);
        } else if (batch_cmd->parsed()) {
            result = cmd_batch(batch_file);
        }

        emit(result);
        return result.exit_code;
    } catch (const fxf::Error& e) {
        Json err;
        err["error"] = e.code();
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        std::cerr << "fxf: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        Json err;
        err["error"] = "ParseError";
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        std::cerr << "fxf: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "Exception";
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        std::cerr << "fxf: " << e.what() << "\n";
        return 2;
    }
}
