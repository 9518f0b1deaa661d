#include "fxf/verify.hpp"
#include "fxf/errors.hpp"

#include <algorithm>
#include <functional>

namespace fxf {

namespace {

Float float_inf()
{
    return std::numeric_limits<Float>::infinity();
}

Float chebyshev_node(const Float& lo, const Float& hi, int j, int n)
{
    Float pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    Float c = cos(pi * (2 * j + 1) / (2 * n));
    return (lo + hi) / 2 + (hi - lo) / 2 * c;
}

// evaluation that reports exact pole hits instead of throwing
std::optional<Float> try_eval(const RatFunc& f, const Float& x)
{
    try {
        return f.eval_float(x);
    } catch (const PoleEvaluation&) {
        return std::nullopt;
    }
}

struct ResidualProbe {
    // |residual| and a rigorous bound for it from the series defect
    std::function<std::optional<std::pair<Float, Float>>(
        const SeriesSolution&, const Float&, std::string&)>
        at;
};

VerificationReport run_series_check(const char* name, const LinearODE2& series_eq,
                                    const ResidualProbe& probe,
                                    const VerifyOptions& opts)
{
    Rat x0 = opts.expansion_point ? *opts.expansion_point
                                  : choose_expansion_point(series_eq);

    std::vector<Float> points = opts.points;
    if (points.empty())
        points = default_sample_points(series_eq, x0, opts.n_points);
    if (points.empty())
        throw AllPointsSkipped("no sample points available");

    Float x0f = to_float(x0);
    Float max_r(0);
    for (const Float& pt : points)
        max_r = std::max(max_r, Float(abs(pt - x0f)));

    FrobeniusOptions fopts;
    fopts.order = opts.order;
    fopts.max_order = opts.max_order;
    fopts.tail_target = opts.tail_target;
    fopts.exact = opts.exact;
    // user points beyond the certifiable disk are skipped, not fatal
    Float cert = certifiable_radius(series_eq, x0);
    fopts.declared_radius = std::min(Float(max_r * Float("1.001")),
                                     Float(cert * Float("0.9")));

    VerificationReport report;
    report.identity = name;
    report.tolerance = opts.tol;
    report.points = points;
    report.max_residual = Float(0);

    Float bound_target = opts.tol / 16;

    for (int attempt = 0;; attempt++) {
        SeriesSolution series = frobenius(series_eq, x0, opts.branch, fopts);
        report.skipped.clear();
        report.evaluated = 0;
        report.max_residual = Float(0);
        bool truncation_limited = false;

        for (const Float& pt : points) {
            std::string reason;
            auto res = probe.at(series, pt, reason);
            if (!res) {
                report.skipped.push_back({pt, reason});
                continue;
            }
            auto [residual, bound] = *res;
            if (bound > bound_target) {
                truncation_limited = true;
                report.skipped.push_back({pt, "TruncationDominates"});
                continue;
            }
            report.evaluated++;
            report.max_residual = std::max(report.max_residual, residual);
        }

        if (truncation_limited && attempt == 0 &&
            series.order() < opts.max_order) {
            fopts.order = opts.max_order;
            continue;
        }
        break;
    }

    if (report.evaluated == 0)
        throw AllPointsSkipped("every sample point was skipped for " +
                               std::string(name));
    report.pass = report.max_residual <= opts.tol &&
                  report.evaluated >= opts.min_points;
    return report;
}

} // namespace

Rat choose_expansion_point(const LinearODE2& e)
{
    Classification cls = classify(e);
    for (const SingularPoint& pt : cls.points) {
        if (pt.at_infinity || pt.kind != PointKind::Regular)
            continue;
        if (pt.exponents && !pt.exponents->complex_pair)
            return pt.location;
    }
    // fall back to an ordinary point
    for (int k = 0; k <= 64; k++) {
        Rat cand(k, 8);
        if (!classify_point(e, cand))
            return cand;
    }
    throw DomainMismatch("no usable expansion point found");
}

std::vector<Float> default_sample_points(const LinearODE2& e, const Rat& x0,
                                         int n)
{
    Float d = nearest_singularity_distance(e, x0);
    Float r1 = certifiable_radius(e, x0);
    Float basis = d == float_inf() ? Float(r1 * Float(0.7)) : Float(d / 2);
    if (Float(0.8) * basis >= Float(0.98) * r1)
        basis = Float(0.7) * r1;

    Float lo = Float(0.1) * basis;
    Float hi = Float(0.8) * basis;
    Float x0f = to_float(x0);
    std::vector<Float> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; j++)
        pts.push_back(x0f + chebyshev_node(lo, hi, j, n));
    std::sort(pts.begin(), pts.end());
    return pts;
}

namespace {

// shared probe for the logarithmic-derivative identities; `alpha_over_f`
// holds the coefficient of -h^2 (zero for the product identity, where the
// h^2 coefficient is the constant +1).
struct LogDerivCheck {
    RatFunc F, f, fprime, logf; // logf = f'/f
    std::optional<RatFunc> alpha_over_f;
    LinearODE2 series_eq;

    std::optional<std::pair<Float, Float>> operator()(const SeriesSolution& s,
                                                      const Float& x,
                                                      std::string& reason) const
    {
        auto Fv = try_eval(F, x);
        auto fv = try_eval(f, x);
        auto fpv = try_eval(fprime, x);
        auto lfv = try_eval(logf, x);
        std::optional<Float> av;
        if (alpha_over_f) {
            av = try_eval(*alpha_over_f, x);
            if (!av) {
                reason = "CoefficientPole";
                return std::nullopt;
            }
        }
        if (!Fv || !fv || !fpv || !lfv) {
            reason = "CoefficientPole";
            return std::nullopt;
        }

        SeriesSolution::Value v;
        try {
            v = s.eval(x);
        } catch (const DomainMismatch&) {
            reason = "OutsideDisk";
            return std::nullopt;
        }
        if (abs(v.dy) < Float("1e-8") * abs(v.y)) {
            reason = "NearCriticalPoint";
            return std::nullopt;
        }

        Float h = *fv * v.y / v.dy;
        Float hp = *fpv * v.y / v.dy + *fv * (1 - v.y * v.d2y / (v.dy * v.dy));
        Float h2coef = alpha_over_f ? -*av : Float(1);
        Float residual = abs(hp + h2coef * h * h + (*Fv - *lfv) * h - *fv);

        Float r = abs(x - to_float(s.expansion_point()));
        auto Pv = try_eval(series_eq.P, x);
        auto Qv = try_eval(series_eq.Q, x);
        if (!Pv || !Qv) {
            reason = "CoefficientPole";
            return std::nullopt;
        }
        Float defect = s.tail_d2y(r) + abs(*Pv) * s.tail_dy(r) +
                       abs(*Qv) * s.tail_y(r);
        Float bound = abs(*fv * v.y / (v.dy * v.dy)) * defect;
        return std::make_pair(residual, bound);
    }
};

} // namespace

VerificationReport verify_product_identity(const CompanionPair& pair,
                                           const VerifyOptions& opts)
{
    LogDerivCheck probe;
    probe.F = pair.F;
    probe.f = pair.f;
    probe.fprime = pair.f.derivative();
    probe.logf = pair.f.log_derivative();
    probe.series_eq = pair.source;

    ResidualProbe rp;
    rp.at = [probe](const SeriesSolution& s, const Float& x, std::string& why) {
        return probe(s, x, why);
    };
    return run_series_check(identity::product_eq3, pair.source, rp, opts);
}

VerificationReport verify_quotient_identity(const RatFunc& F, const RatFunc& f,
                                            const Rat& alpha,
                                            const VerifyOptions& opts)
{
    if (f.is_zero())
        throw ZeroPotential("quotient identity needs f != 0");

    LogDerivCheck probe;
    probe.F = F;
    probe.f = f;
    probe.fprime = f.derivative();
    probe.logf = f.log_derivative();
    probe.alpha_over_f = RatFunc(alpha) / f;
    probe.series_eq = {-F, RatFunc(alpha)};

    ResidualProbe rp;
    rp.at = [probe](const SeriesSolution& s, const Float& x, std::string& why) {
        return probe(s, x, why);
    };
    return run_series_check(identity::quotient_eq6, probe.series_eq, rp, opts);
}

namespace {

struct ChainCheck {
    RatFunc G, H, f, fprime; // f(x) = (D/lambda)/(x+mu)
    RatFunc forward, eta;    // xi(x), eta(xi)
    LinearODE2 outer;

    std::optional<std::pair<Float, Float>> operator()(const SeriesSolution& s,
                                                      const Float& x,
                                                      std::string& reason) const
    {
        auto xiv = try_eval(forward, x);
        if (!xiv) {
            reason = "CoefficientPole";
            return std::nullopt;
        }
        auto Gv = try_eval(G, *xiv);
        auto Hv = try_eval(H, *xiv);
        auto ev = try_eval(eta, *xiv);
        if (!Gv || !Hv || !ev)
            throw DomainMismatch("Moebius image of a sample point hits a singularity of G or H");

        auto fv = try_eval(f, x);
        auto fpv = try_eval(fprime, x);
        if (!fv || !fpv) {
            reason = "CoefficientPole";
            return std::nullopt;
        }

        SeriesSolution::Value v;
        try {
            v = s.eval(x);
        } catch (const DomainMismatch&) {
            reason = "OutsideDisk";
            return std::nullopt;
        }
        if (abs(v.dy) < Float("1e-8") * abs(v.y)) {
            reason = "NearCriticalPoint";
            return std::nullopt;
        }

        Float h = *fv * v.y / v.dy;
        Float hp = *fpv * v.y / v.dy + *fv * (1 - v.y * v.d2y / (v.dy * v.dy));
        Float dh1 = *ev * hp; // d/dxi = eta * d/dx
        Float residual = abs(dh1 + h * h + *Gv * h - *Hv);

        Float r = abs(x - to_float(s.expansion_point()));
        auto Pv = try_eval(outer.P, x);
        auto Qv = try_eval(outer.Q, x);
        if (!Pv || !Qv) {
            reason = "CoefficientPole";
            return std::nullopt;
        }
        Float defect = s.tail_d2y(r) + abs(*Pv) * s.tail_dy(r) +
                       abs(*Qv) * s.tail_y(r);
        Float bound = abs(*ev * *fv * v.y / (v.dy * v.dy)) * defect;
        return std::make_pair(residual, bound);
    }
};

VerificationReport chain_core(const RatFunc& G, const RatFunc& H,
                              const Rat& D, const Rat& lambda, const Rat& mu,
                              const VariableChange& vc, const LinearODE2& outer,
                              const VerifyOptions& opts)
{
    ChainCheck probe;
    probe.G = G;
    probe.H = H;
    probe.f = RatFunc(Poly(D / lambda), Poly::linear(-mu));
    probe.fprime = probe.f.derivative();
    probe.forward = vc.forward;
    probe.eta = vc.eta;
    probe.outer = outer;

    ResidualProbe rp;
    rp.at = [probe](const SeriesSolution& s, const Float& x, std::string& why) {
        return probe(s, x, why);
    };
    return run_series_check(identity::chain_eq22, outer, rp, opts);
}

} // namespace

VerificationReport verify_chain_identity(const InnerHeunSpec& spec,
                                         const VariableChange& vc,
                                         const LinearODE2& outer,
                                         const VerifyOptions& opts)
{
    if (spec.c1 != vc.c1 || spec.lambda != vc.lambda || spec.mu != vc.mu)
        throw DomainMismatch("inner spec and change of variable disagree on (c1, lambda, mu)");
    return chain_core(spec.G, spec.H, spec.D, spec.lambda, spec.mu, vc, outer,
                      opts);
}

VerificationReport verify_chain_reduction(const ReductionSolution& sol,
                                          const Rat& D, const Rat& lambda,
                                          const VerifyOptions& opts)
{
    auto [G, H] = inner_gh(sol.a, sol.b, sol.c, sol.c1, D, sol.m, sol.n,
                           sol.mu, lambda);
    VariableChange vc = solve_eta(D, lambda, sol.mu, sol.c1);
    ReducedOuter outer = reduced_outer_equation(sol, D, sol.m, sol.n);
    return chain_core(G, H, D, lambda, sol.mu, vc, outer.ode, opts);
}

ChainRun verify_chain_from_params(const Rat& a, const Rat& b, const Rat& c,
                                  const Rat& c1, const Rat& D, const Rat& m,
                                  const Rat& n, const Rat& mu, const Rat& lambda,
                                  const VerifyOptions& opts)
{
    ChainRun run;
    if (n == m * mu)
        run.flags.push_back("collapsed_inner_d_equals_one");
    else if (m * c1 - m * mu + n == 0)
        run.flags.push_back("inner_d_undefined");

    auto [G, H] = inner_gh(a, b, c, c1, D, m, n, mu, lambda);
    VariableChange vc = solve_eta(D, lambda, mu, c1);
    OuterEquation outer = build_outer_equation_raw(a, b, c, c1, D, m, n, mu, lambda);
    run.report = chain_core(G, H, D, lambda, mu, vc, outer.ode, opts);
    return run;
}

VerificationReport riccati_self_residual(const LinearODE2& e,
                                         const VerifyOptions& opts)
{
    ResidualProbe rp;
    rp.at = [e](const SeriesSolution& s, const Float& x,
                std::string& reason) -> std::optional<std::pair<Float, Float>> {
        auto Pv = try_eval(e.P, x);
        auto Qv = try_eval(e.Q, x);
        if (!Pv || !Qv) {
            reason = "CoefficientPole";
            return std::nullopt;
        }
        SeriesSolution::Value v;
        try {
            v = s.eval(x);
        } catch (const DomainMismatch&) {
            reason = "OutsideDisk";
            return std::nullopt;
        }
        if (abs(v.y) < Float("1e-8") * (abs(v.dy) + 1)) {
            reason = "NearCriticalPoint";
            return std::nullopt;
        }
        Float h = v.dy / v.y;
        Float hp = v.d2y / v.y - h * h;
        Float residual = abs(hp + h * h + *Pv * h + *Qv);
        Float r = abs(x - to_float(s.expansion_point()));
        Float defect = s.tail_d2y(r) + abs(*Pv) * s.tail_dy(r) +
                       abs(*Qv) * s.tail_y(r);
        Float bound = defect / abs(v.y);
        return std::make_pair(residual, bound);
    };
    return run_series_check(identity::riccati_residual, e, rp, opts);
}

Float gauss_2f1(const Rat& a, const Rat& b, const Rat& c, const Float& x,
                Float* derivative)
{
    if (is_nonpositive_integer(c))
        throw DegenerateC("2F1 parameter c is a non-positive integer");
    if (abs(x) >= Float(0.75))
        throw DomainMismatch("2F1 series evaluation restricted to |x| < 0.75");
    if (x == 0) {
        if (derivative)
            *derivative = to_float(a * b / c); // c_1 of the series
        return Float(1);
    }

    Float af = to_float(a), bf = to_float(b), cf = to_float(c);
    Float term(1), sum(1), dsum(0);
    Float tiny = pow(Float(2), -static_cast<int>(precision_bits()) - 16);
    for (long k = 0;; k++) {
        Float next = term * (af + k) * (bf + k) / ((cf + k) * (k + 1)) * x;
        dsum += next * (k + 1) / x;
        sum += next;
        term = next;
        if (k > 8 && abs(term) < tiny * (abs(sum) + 1))
            break;
        if (k > 200000)
            throw DomainMismatch("2F1 series did not converge");
    }
    if (derivative)
        *derivative = dsum;
    return sum;
}

VerificationReport hg_derivative_check(const Rat& a, const Rat& b, const Rat& c,
                                       const VerifyOptions& opts)
{
    if (is_nonpositive_integer(c) || is_nonpositive_integer(c + 1))
        throw DegenerateC("derivative relation needs c and c+1 away from non-positive integers");

    std::vector<Float> points = opts.points;
    if (points.empty()) {
        // singularity at 1: the evaluation band of the unit disk
        Float lo = Float(0.05), hi = Float(0.4);
        for (int j = 0; j < opts.n_points; j++)
            points.push_back(chebyshev_node(lo, hi, j, opts.n_points));
        std::sort(points.begin(), points.end());
    }

    VerificationReport report;
    report.identity = identity::derivative_relation;
    report.tolerance = opts.tol;
    report.points = points;
    report.max_residual = Float(0);

    Float ratio = to_float(a) * to_float(b) / to_float(c);
    for (const Float& x : points) {
        if (x == 0 || x == 1) {
            report.skipped.push_back({x, "CoefficientPole"});
            continue;
        }
        Float dvalue;
        gauss_2f1(a, b, c, x, &dvalue);
        Float rhs = ratio * gauss_2f1(a + 1, b + 1, c + 1, x);
        report.max_residual = std::max(report.max_residual, Float(abs(dvalue - rhs)));
        report.evaluated++;
    }
    if (report.evaluated == 0)
        throw AllPointsSkipped("every sample point was skipped for the derivative relation");
    report.pass = report.max_residual <= opts.tol &&
                  report.evaluated >= opts.min_points;
    return report;
}

} // namespace fxf
