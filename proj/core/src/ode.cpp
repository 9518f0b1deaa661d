#include "fxf/ode.hpp"
#include "fxf/errors.hpp"

#include <algorithm>
#include <set>

namespace fxf {

HeunParams::HeunParams(Rat gamma, Rat delta, Rat epsilon, Rat alpha_beta,
                       Rat alpha_plus_beta, Rat d, Rat q)
    : gamma_(std::move(gamma)), delta_(std::move(delta)),
      epsilon_(std::move(epsilon)), alpha_beta_(std::move(alpha_beta)),
      alpha_plus_beta_(std::move(alpha_plus_beta)), d_(std::move(d)),
      q_(std::move(q))
{
    if (d_ == 0 || d_ == 1)
        throw InvalidParams("Heun singularity d must differ from 0 and 1, got d = " +
                            rat_to_string(d_));
    if (gamma_ + delta_ + epsilon_ != alpha_plus_beta_ + 1)
        throw InvalidParams("Heun exponent-sum constraint gamma+delta+epsilon = alpha+beta+1 violated");
}

std::optional<std::pair<Rat, Rat>> HeunParams::resolve_alpha_beta() const
{
    Rat disc = alpha_plus_beta_ * alpha_plus_beta_ - 4 * alpha_beta_;
    auto root = exact_sqrt(disc);
    if (!root)
        return std::nullopt;
    Rat alpha = (alpha_plus_beta_ - *root) / 2;
    Rat beta = (alpha_plus_beta_ + *root) / 2;
    return std::make_pair(alpha, beta);
}

LinearODE2 from_heun(const HeunParams& p)
{
    RatFunc x = RatFunc::x();
    RatFunc P = RatFunc(p.gamma()) / x +
                RatFunc(p.delta()) / (x - RatFunc(Rat(1))) +
                RatFunc(p.epsilon()) / (x - RatFunc(p.d()));
    Poly num{-p.q(), p.alpha_beta()};
    Poly den = Poly::x() * Poly::linear(Rat(1)) * Poly::linear(p.d());
    RatFunc Q(std::move(num), std::move(den));
    return {P, Q};
}

LinearODE2 from_hypergeometric(const HGParams& p)
{
    RatFunc x = RatFunc::x();
    RatFunc P = RatFunc(p.c) / x +
                RatFunc(p.a + p.b - p.c + 1) / (x - RatFunc(Rat(1)));
    RatFunc Q(Poly(p.a * p.b), Poly::x() * Poly::linear(Rat(1)));
    return {P, Q};
}

LinearODE2 reciprocal_equation(const LinearODE2& e)
{
    // y(x), x = 1/t: u'' + (2/t - P(1/t)/t^2) u' + Q(1/t)/t^4 u = 0
    RatFunc t = RatFunc::x();
    RatFunc t2 = t * t;
    RatFunc P = RatFunc(Rat(2)) / t - e.P.reciprocal_arg() / t2;
    RatFunc Q = e.Q.reciprocal_arg() / (t2 * t2);
    return {P, Q};
}

namespace {

IndicialExponents indicial_from(const Rat& p0, const Rat& q0)
{
    IndicialExponents out;
    out.p0 = p0;
    out.q0 = q0;
    // rho^2 + (p0 - 1) rho + q0 = 0
    Rat b = p0 - 1;
    Rat disc = b * b - 4 * q0;
    if (auto root = exact_sqrt(disc)) {
        out.exact = true;
        Rat r1 = (-b - *root) / 2;
        Rat r2 = (-b + *root) / 2;
        out.exact_roots = {r1, r2};
        out.approx = {to_float(r1), to_float(r2)};
        return out;
    }
    Float fb = to_float(b);
    Float fd = to_float(disc);
    if (disc > 0) {
        Float s = sqrt(fd);
        out.approx = {(-fb - s) / 2, (-fb + s) / 2};
    } else {
        out.complex_pair = true;
        out.approx = {-fb / 2, sqrt(-fd) / 2};
    }
    return out;
}

SingularPoint make_point(const LinearODE2& e, const Rat& x0, int op, int oq)
{
    SingularPoint pt;
    pt.location = x0;
    pt.pole_order_P = op;
    pt.pole_order_Q = oq;
    if (op <= 1 && oq <= 2) {
        pt.kind = PointKind::Regular;
        RatFunc lin(Poly::linear(x0));
        Rat p0 = (lin * e.P).eval(x0);
        Rat q0 = (lin * lin * e.Q).eval(x0);
        pt.exponents = indicial_from(p0, q0);
    } else {
        pt.kind = PointKind::Irregular;
    }
    return pt;
}

} // namespace

std::optional<SingularPoint> classify_point(const LinearODE2& e, const Rat& x0)
{
    int op = e.P.pole_order(x0);
    int oq = e.Q.pole_order(x0);
    if (op == 0 && oq == 0)
        return std::nullopt;
    return make_point(e, x0, op, oq);
}

std::optional<SingularPoint> classify_infinity(const LinearODE2& e)
{
    LinearODE2 rec = reciprocal_equation(e);
    auto pt = classify_point(rec, Rat(0));
    if (!pt)
        return std::nullopt;
    pt->at_infinity = true;
    pt->location = Rat(0);
    return pt;
}

Classification classify(const LinearODE2& e)
{
    Classification out;

    std::set<Rat> candidates;
    auto collect = [&candidates](const RatFunc& f, Poly& unresolved) {
        if (f.is_zero() || f.den().degree() < 1) {
            unresolved = Poly{Rat(1)};
            return;
        }
        RationalRoots rr = rational_roots(f.den());
        for (const RootInfo& r : rr.roots)
            candidates.insert(r.root);
        unresolved = rr.residual.degree() > 0 ? rr.residual : Poly{Rat(1)};
    };
    collect(e.P, out.unresolved_P);
    collect(e.Q, out.unresolved_Q);

    for (const Rat& x0 : candidates)
        if (auto pt = classify_point(e, x0))
            out.points.push_back(std::move(*pt));

    if (auto inf = classify_infinity(e))
        out.points.push_back(std::move(*inf));

    return out;
}

std::optional<HeunParams> match_heun(const LinearODE2& e)
{
    // Locate the pole set of P and Q; the template needs it inside
    // {0, 1, d} with exactly one pole away from {0, 1}.
    std::set<Rat> poles;
    for (const RatFunc* f : {&e.P, &e.Q}) {
        if (f->is_zero() || f->den().degree() < 1)
            continue;
        RationalRoots rr = rational_roots(f->den());
        if (rr.unaccounted > 0)
            return std::nullopt;
        for (const RootInfo& r : rr.roots)
            poles.insert(r.root);
    }

    std::optional<Rat> d;
    for (const Rat& p : poles) {
        if (p == 0 || p == 1)
            continue;
        if (d)
            return std::nullopt;
        d = p;
    }
    if (!d)
        return std::nullopt;

    if (e.P.pole_order(Rat(0)) > 1 || e.P.pole_order(Rat(1)) > 1 ||
        e.P.pole_order(*d) > 1)
        return std::nullopt;

    Poly t = Poly::x() * Poly::linear(Rat(1)) * Poly::linear(*d);
    RatFunc qt = e.Q * RatFunc(t);
    if (!qt.is_polynomial() || qt.num().degree() > 1)
        return std::nullopt;
    Rat alpha_beta = qt.num().coeff(1);
    Rat q = -qt.num().coeff(0);

    Rat gamma = e.P.residue_simple(Rat(0));
    Rat delta = e.P.residue_simple(Rat(1));
    Rat epsilon = e.P.residue_simple(*d);

    try {
        HeunParams params(gamma, delta, epsilon, alpha_beta,
                          gamma + delta + epsilon - 1, *d, q);
        if (from_heun(params) == e)
            return params;
    } catch (const InvalidParams&) {
    }
    return std::nullopt;
}

std::optional<HGTemplateMatch> match_hypergeometric_template(const LinearODE2& e)
{
    for (const RatFunc* f : {&e.P, &e.Q}) {
        if (f->is_zero() || f->den().degree() < 1)
            continue;
        RationalRoots rr = rational_roots(f->den());
        if (rr.unaccounted > 0)
            return std::nullopt;
        for (const RootInfo& r : rr.roots)
            if (r.root != 0 && r.root != 1)
                return std::nullopt;
    }
    if (e.P.pole_order(Rat(0)) > 1 || e.P.pole_order(Rat(1)) > 1)
        return std::nullopt;

    Poly t = Poly::x() * Poly::linear(Rat(1));
    RatFunc qt = e.Q * RatFunc(t);
    if (!qt.is_polynomial() || qt.num().degree() > 0)
        return std::nullopt;

    HGTemplateMatch match;
    match.ab = qt.num().coeff(0);
    match.c = e.P.residue_simple(Rat(0));
    Rat r1 = e.P.residue_simple(Rat(1));
    match.a_plus_b = r1 + match.c - 1;

    Rat disc = match.a_plus_b * match.a_plus_b - 4 * match.ab;
    if (auto root = exact_sqrt(disc)) {
        HGParams params{(match.a_plus_b - *root) / 2,
                        (match.a_plus_b + *root) / 2, match.c};
        if (from_hypergeometric(params) == e)
            match.params = params;
        else
            return std::nullopt;
    } else {
        // only validate the template shape
        HGParams probe{Rat(0), match.a_plus_b, match.c};
        LinearODE2 shape = from_hypergeometric(probe);
        RatFunc q_expect(Poly(match.ab), Poly::x() * Poly::linear(Rat(1)));
        if (!(shape.P == e.P && q_expect == e.Q))
            return std::nullopt;
    }
    return match;
}

std::optional<HGParams> match_hypergeometric(const LinearODE2& e)
{
    auto match = match_hypergeometric_template(e);
    if (!match || !match->params)
        return std::nullopt;
    return match->params;
}

} // namespace fxf
