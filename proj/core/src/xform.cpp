#include "fxf/xform.hpp"
#include "fxf/errors.hpp"

#include <array>

namespace fxf {

CompanionPair companion(const RatFunc& F, const RatFunc& f)
{
    if (f.is_zero())
        throw ZeroPotential("companion construction needs f != 0 (f'/f term)");
    CompanionPair out;
    out.F = F;
    out.f = f;
    out.source = {-F, -f};
    out.companion = {F - f.log_derivative(), -f};
    return out;
}

HGParams hg_companion_map(const HGParams& p)
{
    HGParams dual{-p.a, -p.b, 1 - p.c};
    if (p.a * p.b != 0) {
        LinearODE2 src = from_hypergeometric(p);
        CompanionPair pair = companion(-src.P, -src.Q);
        if (!(pair.companion == from_hypergeometric(dual)))
            throw Error("Internal", "hypergeometric dual map failed the exact equality check");
    }
    return dual;
}

MathieuCompanion mathieu_like_companion(const Rat& a, const Rat& b,
                                        const Rat& c, const Rat& m)
{
    if (m == 0)
        throw ZeroSlope("m = 0 degenerates to the pure hypergeometric dual");

    RatFunc x = RatFunc::x();
    RatFunc F = -(RatFunc(c) / x + RatFunc(a + b - c + 1) / (x - RatFunc(Rat(1))));
    RatFunc f(Poly{-a * b, -m}, Poly::x() * Poly::linear(Rat(1)));

    MathieuCompanion out;
    out.ode = companion(F, f).companion;
    out.third_singularity = -a * b / m;
    if (a * b == 0)
        out.flags.push_back("third_singularity_coalesces_with_zero");
    if (out.third_singularity == 1)
        out.flags.push_back("third_singularity_coalesces_with_one");
    return out;
}

HeunCompanion heun_companion(const HeunParams& p)
{
    if (p.alpha_beta() == 0 && p.q() == 0)
        throw TrivialPotential("trivial Heun equation: alpha*beta = q = 0 makes f vanish");

    LinearODE2 src = from_heun(p);
    CompanionPair pair = companion(-src.P, -src.Q);

    HeunCompanion out;
    out.ode = pair.companion;
    out.matched = match_heun(out.ode);
    if (out.matched) {
        if (p.alpha_beta() == 0)
            out.coalescence = "ab_zero";
        else if (p.q() == 0)
            out.coalescence = "q_zero";
        else if (p.q() == p.alpha_beta())
            out.coalescence = "q_over_ab_one";
        else if (p.q() == p.alpha_beta() * p.d())
            out.coalescence = "q_over_ab_d";
    }
    return out;
}

VariableChange VariableChange::identity()
{
    VariableChange vc;
    vc.kind = Kind::Identity;
    vc.lambda = 0;
    vc.c1 = 1;
    vc.c2 = 1;
    vc.mu = 0;
    vc.forward = RatFunc::x();
    vc.inverse = RatFunc::x();
    vc.eta = RatFunc(Rat(1));
    return vc;
}

VariableChange solve_eta(const Rat& D, const Rat& lambda, const Rat& mu,
                         const Rat& c1)
{
    if (lambda == 0)
        throw InvalidParams("solve_eta needs lambda != 0");
    if (D == 0)
        throw InvalidParams("solve_eta needs D != 0");
    if (c1 == 0)
        throw InvalidParams("integration constant c1 = e^{c'} cannot vanish");

    VariableChange vc;
    vc.kind = VariableChange::Kind::Moebius;
    vc.lambda = lambda;
    vc.c1 = c1;
    vc.c2 = Rat(1) / c1;
    vc.mu = mu;

    // xi(x) = lambda / (1 - c2 (x + mu))
    vc.forward = RatFunc(Poly(lambda), Poly{1 - vc.c2 * mu, -vc.c2});
    // x(xi) = c1 (xi - lambda)/xi - mu
    vc.inverse = RatFunc(Poly{-c1 * lambda, c1 - mu}, Poly::x());
    // eta(xi) = dx/dxi = c1 lambda / xi^2
    vc.eta = RatFunc(Poly(c1 * lambda), Poly::x() * Poly::x());

    // round-trip and derivative identities must hold exactly
    if (!(vc.forward.compose(vc.inverse) == RatFunc::x()) ||
        !(vc.inverse.compose(vc.forward) == RatFunc::x()))
        throw Error("Internal", "Moebius map round trip failed");
    if (!(vc.inverse.derivative() == vc.eta))
        throw Error("Internal", "eta is not the derivative of x(xi)");
    return vc;
}

Float eta_integral_constancy_deviation(const VariableChange& vc, const Rat& D,
                                       int n_points)
{
    // antiderivatives: (D/lambda) ln(x+mu) and (D/lambda) ln((xi-lambda)/xi)
    Float scale = to_float(D) / to_float(vc.lambda);
    Float lo = to_float(vc.lambda) * 2;
    Float first(0), dev(0);
    for (int i = 0; i < n_points; i++) {
        Float xi = lo * (1 + Float(i + 1) / n_points);
        Float x = vc.inverse.eval_float(xi);
        Float lhs = scale * log(abs(x + to_float(vc.mu)));
        Float rhs = scale * log(abs((xi - to_float(vc.lambda)) / xi));
        Float diff = lhs - rhs;
        if (i == 0)
            first = diff;
        else
            dev = std::max(dev, Float(abs(diff - first)));
    }
    return dev;
}

std::pair<RatFunc, RatFunc> inner_gh(const Rat& a, const Rat& b, const Rat& c,
                                     const Rat& c1, const Rat& D, const Rat& m,
                                     const Rat& n, const Rat& mu,
                                     const Rat& lambda)
{
    // G = [a c1 (xi - lambda) + xi (b - a mu)] / (xi [m c1 (xi - lambda) + xi (n - m mu)]) - c/xi
    Poly xi = Poly::x();
    Poly num = Poly{-a * c1 * lambda, a * c1} + Poly{Rat(0), b - a * mu};
    Poly den_inner = Poly{-m * c1 * lambda, m * c1} + Poly{Rat(0), n - m * mu};
    if (den_inner.is_zero())
        throw DegenerateSpec("the G denominator factor vanishes identically");
    RatFunc G = RatFunc(num, xi * den_inner) - RatFunc(Poly(c), xi);
    RatFunc H(Poly(D), xi * Poly::linear(lambda));
    return {G, H};
}

InnerHeunSpec build_inner_heun(const Rat& a, const Rat& b, const Rat& c,
                               const Rat& c1, const Rat& D, const Rat& m,
                               const Rat& n, const Rat& mu, const Rat& lambda)
{
    if (lambda == 0)
        throw InvalidParams("inner equation needs lambda != 0");
    if (m == 0)
        throw InvalidParams("inner equation needs m != 0");
    Rat s = m * c1 - m * mu + n;
    if (s == 0)
        throw DegenerateSpec("m c1 - m mu + n = 0: singularity d is undefined");
    if (n == m * mu)
        throw DegenerateSpec("n = m mu: the fourth singularity of G coalesces with lambda (d = 1)");
    if (c1 == 0)
        throw DegenerateSpec("c1 = 0: the singularity d coalesces with 0");

    auto [G, H] = inner_gh(a, b, c, c1, D, m, n, mu, lambda);

    Rat d = m * c1 / s;
    Rat gamma = (a - m * c) / m;
    Rat delta(0);
    Rat epsilon = (a * c1 + b - a * mu - c * m * c1 - c * (n - m * mu) -
                   ((a - m * c) / m) * s) / s;
    Rat alpha_beta = -D;
    Rat q = -D * d;
    Rat alpha_plus_beta = gamma + delta + epsilon - 1;

    // HeunParams construction re-checks d and the exponent-sum constraint
    InnerHeunSpec spec{a, b, c, c1, D, m, n, mu, lambda, G, H,
                       HeunParams(gamma, delta, epsilon, alpha_beta,
                                  alpha_plus_beta, d, q)};

    // the rescaled equation must literally be the Heun equation
    RatFunc zeta_to_xi(Poly{Rat(0), lambda}); // xi = lambda * zeta
    RatFunc G_rescaled = RatFunc(Poly(lambda)) * G.compose(zeta_to_xi);
    RatFunc H_rescaled = RatFunc(Poly(lambda * lambda)) * H.compose(zeta_to_xi);
    LinearODE2 inner{G_rescaled, -H_rescaled};
    if (!(inner == from_heun(spec.heun)))
        throw Error("Internal", "inner equation does not match its Heun parameters");
    return spec;
}

namespace {

OuterEquation outer_from_raw(const Rat& a, const Rat& b, const Rat& c,
                             const Rat& c1, const Rat& D, const Rat& m,
                             const Rat& n, const Rat& mu, const Rat& lambda)
{
    if (c1 == 0)
        throw InvalidParams("outer equation needs c1 != 0");
    if (lambda == 0)
        throw InvalidParams("outer equation needs lambda != 0");
    Rat c2 = Rat(1) / c1;

    RatFunc G = inner_gh(a, b, c, c1, D, m, n, mu, lambda).first;

    // f1(xi) = (D/(c1 lambda)) xi/(xi - lambda), g = G + f1'/f1
    RatFunc f1(Poly{Rat(0), D / (c1 * lambda)}, Poly::linear(lambda));
    RatFunc g = G + f1.log_derivative();
    RatFunc eta(Poly(c1 * lambda), Poly::x() * Poly::x());

    RatFunc xi_of_x(Poly(lambda), Poly{1 - c2 * mu, -c2});
    RatFunc g_over_eta = (g / eta).compose(xi_of_x);
    RatFunc f1_over_eta = (f1 / eta).compose(xi_of_x);

    // closed form of (f1/eta)_x must agree with the composition
    Poly w{1 - c2 * mu, -c2}; // 1 - c2 (x + mu)
    Poly xmu = Poly::linear(-mu);
    RatFunc f1_closed(Poly(D * c2), w * w * xmu);
    if (!(f1_closed == f1_over_eta))
        throw Error("Internal", "(f1/eta)_x disagrees with its closed form");

    // extract N(x): g_over_eta = N(x) / (w (m x + n)(x + mu))
    Poly denom = w * Poly{n, m} * xmu;
    RatFunc n_func = g_over_eta * RatFunc(denom);
    if (!n_func.is_polynomial())
        throw Error("Internal", "numerator extraction left a non-polynomial part");

    OuterEquation out;
    out.ode = {-g_over_eta, -f1_over_eta};
    out.g_over_eta = g_over_eta;
    out.f1_over_eta = f1_over_eta;
    out.n_recomputed = n_func.num();

    Rat l = c - 1;
    out.n_printed = Poly{b * mu / c1 - l * n * mu / c1 - n,
                         b / c1 + mu * a / c1 - n * l / c1 - m,
                         a / c1 - m * l / c1};
    out.n_diff = out.n_printed - out.n_recomputed;
    return out;
}

} // namespace

OuterEquation build_outer_equation(const InnerHeunSpec& spec,
                                   const VariableChange& vc)
{
    if (spec.c1 != vc.c1 || spec.lambda != vc.lambda || spec.mu != vc.mu)
        throw DomainMismatch("inner spec and change of variable disagree on (c1, lambda, mu)");
    return outer_from_raw(spec.a, spec.b, spec.c, spec.c1, spec.D, spec.m,
                          spec.n, spec.mu, spec.lambda);
}

OuterEquation build_outer_equation_raw(const Rat& a, const Rat& b, const Rat& c,
                                       const Rat& c1, const Rat& D, const Rat& m,
                                       const Rat& n, const Rat& mu,
                                       const Rat& lambda)
{
    return outer_from_raw(a, b, c, c1, D, m, n, mu, lambda);
}

std::array<Rat, 3> reduction_system_residuals(const Rat& a, const Rat& b,
                                              const Rat& c, const Rat& m,
                                              const Rat& n, const Rat& R,
                                              const Rat& c1, const Rat& mu)
{
    Rat l = c - 1;
    return {a / c1 - l * m / c1 - R * m * m,
            (b + mu * a) / c1 - l * (m * mu + n) / c1 - m - 2 * m * n * R,
            b * mu / c1 - n * mu * l / c1 - n - n * n * R};
}

ReductionClosedForms reduction_closed_forms(const Rat& a, const Rat& b,
                                            const Rat& c, const Rat& m,
                                            const Rat& n)
{
    ReductionClosedForms out;
    Rat l = c - 1;
    Rat L = a - l * m;
    Rat K = b - n * l;

    Rat r_den = (2 * a * m * n - b * m * m - l * m * m * n) * K - L * L * n * n;
    if (r_den != 0)
        out.R = (L * L * n - (a * m - l * m * m) * K) / r_den;

    if (out.R && *out.R != 0) {
        out.c1 = L / (*out.R * m * m);
        Rat mu_den = L * (*out.R) * m * m;
        if (mu_den != 0)
            out.mu = (L * (2 * m * n * (*out.R) + m) + (-b + l * n) * (*out.R) * m * m) / mu_den;
    }
    return out;
}

std::vector<ReductionSolution> reduce_to_hypergeometric(const Rat& a, const Rat& b,
                                                        const Rat& c, const Rat& m,
                                                        const Rat& n)
{
    if (m == 0)
        throw InvalidParams("reduction needs m != 0");

    Rat l = c - 1;
    Rat L = a - l * m; // x^2 coefficient times c1
    Rat K = b - n * l;
    Rat disc = m * K - n * L; // = b m - a n; elimination pivot

    if (disc == 0) {
        if (L == 0)
            throw NoSolution("the reduction system is inconsistent: L = K = 0 forces m = 0");
        throw IndeterminateSystem(
            "a continuum of solutions exists under the constraint a*n = b*m: "
            "any mu != n/m with R = 1/(m*mu - n), c1 = L*(m*mu - n)/m^2 solves the system");
    }

    ReductionSolution sol;
    sol.a = a;
    sol.b = b;
    sol.c = c;
    sol.m = m;
    sol.n = n;
    sol.mu = n / m;
    sol.c1 = disc / (m * m);
    sol.R = L / disc;
    sol.branch = ReductionBranch::Paper;
    sol.flags.push_back("mu_equals_n_over_m");
    sol.flags.push_back("d_equals_one");
    if (K == 0)
        sol.flags.push_back("K_zero");
    if (L == 0)
        sol.flags.push_back("L_zero");

    auto residuals = reduction_system_residuals(a, b, c, m, n, sol.R, sol.c1, sol.mu);
    for (const Rat& r : residuals)
        if (r != 0)
            throw Error("Internal", "reduction solution fails substitution into the system");

    return {sol};
}

ReducedOuter reduced_outer_equation(const ReductionSolution& sol, const Rat& D,
                                    const Rat& m, const Rat& n)
{
    if (m != sol.m || n != sol.n)
        throw InvalidParams("(m, n) disagree with the reduction solution");
    if (sol.c1 == 0)
        throw InvalidParams("reduction solution has c1 = 0");
    Rat c2 = Rat(1) / sol.c1;

    Poly w{1 - c2 * sol.mu, -c2};
    Poly xmu = Poly::linear(-sol.mu);

    ReducedOuter out;
    out.ode = {RatFunc(Poly{-sol.R * n, -sol.R * m}, w * xmu),
               RatFunc(Poly(-D * c2), w * w * xmu)};

    // recompute N(x) from first principles; it must equal R (m x + n)^2
    OuterEquation full = build_outer_equation_raw(sol.a, sol.b, sol.c, sol.c1,
                                                  D, m, n, sol.mu, Rat(1));
    out.n_recomputed = full.n_recomputed;
    Poly square = Poly{n, m} * Poly{n, m} * sol.R;
    out.square_diff = out.n_recomputed - square;

    // with N = R (m x + n)^2 the generic outer equation collapses to this one
    if (!(full.ode == out.ode) && out.square_diff.is_zero())
        throw Error("Internal", "reduced equation disagrees with the generic construction");
    return out;
}

} // namespace fxf
