#include "fxf/json_io.hpp"
#include "fxf/errors.hpp"

namespace fxf::json {

double to_double(const Float& x)
{
    return x.convert_to<double>();
}

Json rat_json(const Rat& r)
{
    return rat_to_string(r);
}

Rat rat_from(const Json& j)
{
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    if (j.is_number_integer())
        return Rat(j.get<long long>());
    throw ParseError("expected a rational \"p/q\" string");
}

Json poly_json(const Poly& p)
{
    Json arr = Json::array();
    for (const Rat& c : p.coeffs())
        arr.push_back(rat_to_string(c));
    return arr;
}

Poly poly_from(const Json& j)
{
    if (!j.is_array())
        throw ParseError("expected a coefficient array, lowest degree first");
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const Json& c : j)
        coeffs.push_back(rat_from(c));
    return Poly(std::move(coeffs));
}

Json ratfunc_json(const RatFunc& f)
{
    return Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

RatFunc ratfunc_from(const Json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("expected {\"num\": [...], \"den\": [...]}");
    return RatFunc(poly_from(j.at("num")), poly_from(j.at("den")));
}

Json ode_json(const LinearODE2& e)
{
    return Json{{"type", "ode"},
                {"P", ratfunc_json(e.P)},
                {"Q", ratfunc_json(e.Q)}};
}

Json heun_json(const HeunParams& p)
{
    return Json{{"type", "heun"},
                {"alpha_beta", rat_json(p.alpha_beta())},
                {"alpha_plus_beta", rat_json(p.alpha_plus_beta())},
                {"gamma", rat_json(p.gamma())},
                {"delta", rat_json(p.delta())},
                {"epsilon", rat_json(p.epsilon())},
                {"d", rat_json(p.d())},
                {"q", rat_json(p.q())}};
}

HeunParams heun_from(const Json& j)
{
    for (const char* key : {"gamma", "delta", "epsilon", "alpha_beta", "d", "q"})
        if (!j.contains(key))
            throw ParseError(std::string("Heun parameters need the field \"") +
                             key + "\"");
    Rat gamma = rat_from(j.at("gamma"));
    Rat delta = rat_from(j.at("delta"));
    Rat epsilon = rat_from(j.at("epsilon"));
    Rat ab = rat_from(j.at("alpha_beta"));
    Rat sum = j.contains("alpha_plus_beta") ? rat_from(j.at("alpha_plus_beta"))
                                            : gamma + delta + epsilon - 1;
    return HeunParams(gamma, delta, epsilon, ab, sum, rat_from(j.at("d")),
                      rat_from(j.at("q")));
}

Json hg_json(const HGParams& p)
{
    return Json{{"type", "hypergeometric"},
                {"a", rat_json(p.a)},
                {"b", rat_json(p.b)},
                {"c", rat_json(p.c)}};
}

HGParams hg_from(const Json& j)
{
    for (const char* key : {"a", "b", "c"})
        if (!j.contains(key))
            throw ParseError(std::string("hypergeometric parameters need the field \"") +
                             key + "\"");
    return HGParams{rat_from(j.at("a")), rat_from(j.at("b")),
                    rat_from(j.at("c"))};
}

OdeInput ode_input_from(const Json& j)
{
    if (!j.is_object())
        throw ParseError("expected an equation object");

    std::string type;
    if (j.contains("type"))
        type = j.at("type").get<std::string>();
    else if (j.contains("P") && j.contains("Q"))
        type = "ode";
    else if (j.contains("gamma"))
        type = "heun";
    else if (j.contains("a"))
        type = "hypergeometric";
    else
        throw ParseError("cannot identify the equation schema");

    OdeInput in;
    if (type == "ode") {
        in.ode = {ratfunc_from(j.at("P")), ratfunc_from(j.at("Q"))};
        in.heun = match_heun(in.ode);
        in.hg = match_hypergeometric(in.ode);
    } else if (type == "heun") {
        in.heun = heun_from(j);
        in.ode = from_heun(*in.heun);
    } else if (type == "hypergeometric") {
        in.hg = hg_from(j);
        in.ode = from_hypergeometric(*in.hg);
    } else {
        throw ParseError("unknown equation type \"" + type + "\"");
    }
    return in;
}

namespace {

Json exponents_json(const IndicialExponents& e)
{
    Json out;
    out["indicial_p0"] = rat_json(e.p0);
    out["indicial_q0"] = rat_json(e.q0);
    out["exact"] = e.exact;
    if (e.exact) {
        out["values"] = Json::array({rat_json(e.exact_roots.first),
                                     rat_json(e.exact_roots.second)});
    } else if (e.complex_pair) {
        out["complex"] = true;
        out["re"] = to_double(e.approx.first);
        out["im"] = to_double(e.approx.second);
    } else {
        out["values"] = Json::array({to_double(e.approx.first),
                                     to_double(e.approx.second)});
    }
    return out;
}

} // namespace

Json singular_point_json(const SingularPoint& p)
{
    Json out;
    out["location"] = p.at_infinity ? Json("inf") : Json(rat_json(p.location));
    out["kind"] = p.kind == PointKind::Regular ? "regular" : "irregular";
    out["pole_order_P"] = p.pole_order_P;
    out["pole_order_Q"] = p.pole_order_Q;
    if (p.exponents)
        out["exponents"] = exponents_json(*p.exponents);
    return out;
}

Json classification_json(const Classification& c)
{
    Json out;
    Json points = Json::array();
    int regular = 0, irregular = 0;
    for (const SingularPoint& p : c.points) {
        points.push_back(singular_point_json(p));
        (p.kind == PointKind::Regular ? regular : irregular)++;
    }
    out["points"] = std::move(points);
    out["regular_count"] = regular;
    out["irregular_count"] = irregular;
    if (c.unresolved_count() > 0) {
        Json unresolved;
        if (c.unresolved_P.degree() > 0)
            unresolved["P"] = Json{{"factor", poly_json(c.unresolved_P)},
                                   {"count", c.unresolved_P.degree()}};
        if (c.unresolved_Q.degree() > 0)
            unresolved["Q"] = Json{{"factor", poly_json(c.unresolved_Q)},
                                   {"count", c.unresolved_Q.degree()}};
        out["unresolved"] = std::move(unresolved);
    }
    return out;
}

Json report_json(const VerificationReport& r)
{
    Json out;
    out["identity"] = r.identity;
    out["tolerance"] = to_double(r.tolerance);
    out["max_residual"] = to_double(r.max_residual);
    Json pts = Json::array();
    for (const Float& p : r.points)
        pts.push_back(to_double(p));
    out["points"] = std::move(pts);
    Json skipped = Json::array();
    for (const SkippedPoint& s : r.skipped)
        skipped.push_back(Json{{"x", to_double(s.x)}, {"reason", s.reason}});
    out["skipped"] = std::move(skipped);
    out["evaluated"] = r.evaluated;
    out["verdict"] = r.pass ? "pass" : "fail";
    return out;
}

Json reduction_json(const ReductionSolution& s)
{
    Json out;
    out["R"] = rat_json(s.R);
    out["c1"] = rat_json(s.c1);
    out["mu"] = rat_json(s.mu);
    out["branch"] = s.branch == ReductionBranch::Paper ? "paper" : "alternate";
    out["flags"] = s.flags;
    out["inputs"] = Json{{"a", rat_json(s.a)},
                         {"b", rat_json(s.b)},
                         {"c", rat_json(s.c)},
                         {"m", rat_json(s.m)},
                         {"n", rat_json(s.n)}};
    return out;
}

Json outer_json(const OuterEquation& o)
{
    Json out;
    out["ode"] = ode_json(o.ode);
    out["g_over_eta"] = ratfunc_json(o.g_over_eta);
    out["f1_over_eta"] = ratfunc_json(o.f1_over_eta);
    out["n_recomputed"] = poly_json(o.n_recomputed);
    out["n_printed"] = poly_json(o.n_printed);
    out["n_printed_minus_recomputed"] = poly_json(o.n_diff);
    return out;
}

Json inner_spec_json(const InnerHeunSpec& s)
{
    Json out;
    out["a"] = rat_json(s.a);
    out["b"] = rat_json(s.b);
    out["c"] = rat_json(s.c);
    out["c1"] = rat_json(s.c1);
    out["D"] = rat_json(s.D);
    out["m"] = rat_json(s.m);
    out["n"] = rat_json(s.n);
    out["mu"] = rat_json(s.mu);
    out["lambda"] = rat_json(s.lambda);
    out["G"] = ratfunc_json(s.G);
    out["H"] = ratfunc_json(s.H);
    out["heun"] = heun_json(s.heun);
    return out;
}

Json variable_change_json(const VariableChange& vc)
{
    Json out;
    out["kind"] = vc.kind == VariableChange::Kind::Identity ? "identity" : "moebius";
    out["lambda"] = rat_json(vc.lambda);
    out["c1"] = rat_json(vc.c1);
    out["c2"] = rat_json(vc.c2);
    out["mu"] = rat_json(vc.mu);
    out["forward"] = ratfunc_json(vc.forward);
    out["inverse"] = ratfunc_json(vc.inverse);
    out["eta"] = ratfunc_json(vc.eta);
    return out;
}

} // namespace fxf::json
