#include "fxf/series.hpp"
#include "fxf/errors.hpp"

#include <algorithm>

namespace fxf {

namespace {

Float float_inf()
{
    return std::numeric_limits<Float>::infinity();
}

// lower bound on the modulus of every root of g, g(0) != 0
Float root_modulus_lower_bound(const Poly& g)
{
    Float g0 = abs(to_float(g.coeff(0)));
    Float m(0);
    for (int i = 1; i <= g.degree(); i++)
        m = std::max(m, Float(abs(to_float(g.coeff(i)))));
    if (m == 0)
        return float_inf();
    return g0 / (g0 + m);
}

Float distance_to_other_singularities(const RatFunc& P0, const RatFunc& Q0)
{
    Float dist = float_inf();
    for (const RatFunc* f : {&P0, &Q0}) {
        if (f->is_zero() || f->den().degree() < 1)
            continue;
        RationalRoots rr = rational_roots(f->den());
        for (const RootInfo& r : rr.roots)
            if (r.root != 0)
                dist = std::min(dist, Float(abs(to_float(r.root))));
        if (rr.residual.degree() > 0)
            dist = std::min(dist, root_modulus_lower_bound(rr.residual));
    }
    return dist;
}

// |den(0)| - sum_{i>=1} |den_i| r^i; positivity makes the Cauchy bound valid
Float denominator_margin(const Poly& den, const Float& r)
{
    Float acc = abs(to_float(den.coeff(0)));
    Float rp(1);
    for (int i = 1; i <= den.degree(); i++) {
        rp *= r;
        acc -= abs(to_float(den.coeff(i))) * rp;
    }
    return acc;
}

Float numerator_sum(const Poly& num, const Float& r)
{
    Float acc(0);
    Float rp(1);
    for (int i = 0; i <= num.degree(); i++) {
        acc += abs(to_float(num.coeff(i))) * rp;
        rp *= r;
    }
    return acc;
}

struct Majorant {
    Float r1; // radius of validity of the Cauchy coefficient bounds
    Float Mp, Mq;
};

// sup bounds |p| <= Mp, |q| <= Mq on |t| <= r1, giving |p_j| <= Mp / r1^j.
// The margin requirement |den| >= |den(0)|/4 keeps Mp, Mq (and with them the
// certification order) from exploding near the edge of validity.
Majorant make_majorant(const RatFunc& p, const RatFunc& q, const Float& d_near,
                       const Float& declared)
{
    Float start;
    if (d_near == float_inf())
        start = declared > 0 ? Float(4 * declared) : Float(4);
    else
        start = d_near * Float(0.95);

    Float floor_p = abs(to_float(p.den().coeff(0))) / 4;
    Float floor_q = abs(to_float(q.den().coeff(0))) / 4;
    Float r = start;
    for (int iter = 0; iter < 400; iter++) {
        Float mp = denominator_margin(p.den(), r);
        Float mq = denominator_margin(q.den(), r);
        if (mp >= floor_p && mq >= floor_q)
            return {r, numerator_sum(p.num(), r) / mp,
                    numerator_sum(q.num(), r) / mq};
        r *= Float(0.8);
    }
    throw DomainMismatch("no usable majorant radius at this expansion point");
}

Float tail_t0(const Float& z, int n)
{
    return pow(z, n + 1) / (1 - z);
}

Float tail_t1(const Float& z, int n)
{
    Float one_minus = 1 - z;
    return pow(z, n + 1) * (Float(n + 1) / one_minus + z / (one_minus * one_minus));
}

Float tail_t2(const Float& z, int n)
{
    Float om = 1 - z;
    return pow(z, n + 1) *
           (Float(n) * Float(n + 1) / om + Float(2 * n + 1) * z / (om * om) +
            z * (1 + z) / (om * om * om));
}

// exact power series of num/den (den(0) != 0), lowest degree first
template <typename T>
std::vector<T> rational_series(const Poly& num, const Poly& den, int order);

template <>
std::vector<Rat> rational_series<Rat>(const Poly& num, const Poly& den, int order)
{
    std::vector<Rat> out(static_cast<std::size_t>(order) + 1, Rat(0));
    Rat d0 = den.coeff(0);
    for (int k = 0; k <= order; k++) {
        Rat acc = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); j++)
            acc -= den.coeff(j) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc / d0;
    }
    return out;
}

template <>
std::vector<Float> rational_series<Float>(const Poly& num, const Poly& den, int order)
{
    std::vector<Float> out(static_cast<std::size_t>(order) + 1, Float(0));
    Float d0 = to_float(den.coeff(0));
    for (int k = 0; k <= order; k++) {
        Float acc = k <= num.degree() ? to_float(num.coeff(k)) : Float(0);
        for (int j = 1; j <= std::min(k, den.degree()); j++)
            acc -= to_float(den.coeff(j)) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc / d0;
    }
    return out;
}

} // namespace

Float nearest_singularity_distance(const LinearODE2& e, const Rat& x0)
{
    return distance_to_other_singularities(e.P.shift(x0), e.Q.shift(x0));
}

Float certifiable_radius(const LinearODE2& e, const Rat& x0)
{
    RatFunc P0 = e.P.shift(x0);
    RatFunc Q0 = e.Q.shift(x0);
    RatFunc t(Poly::x());
    RatFunc p = t * P0;
    RatFunc q = t * t * Q0;
    Float d_near = distance_to_other_singularities(P0, Q0);
    return make_majorant(p, q, d_near, Float(0)).r1;
}

SeriesSolution frobenius(const LinearODE2& e, const Rat& x0,
                         ExponentChoice choice, const FrobeniusOptions& opts)
{
    RatFunc P0 = e.P.shift(x0);
    RatFunc Q0 = e.Q.shift(x0);

    int op = P0.pole_order(Rat(0));
    int oq = Q0.pole_order(Rat(0));
    if (op > 1 || oq > 2)
        throw IrregularPoint("x0 = " + rat_to_string(x0) +
                             " is an irregular singular point");

    RatFunc t(Poly::x());
    RatFunc p = t * P0;    // analytic at 0
    RatFunc q = t * t * Q0;

    Rat p0 = p.eval(Rat(0));
    Rat q0 = q.eval(Rat(0));

    // indicial quadratic rho^2 + (p0 - 1) rho + q0 = 0
    Rat ib = p0 - 1;
    Rat disc = ib * ib - 4 * q0;
    if (disc < 0)
        throw DomainMismatch("complex indicial exponents at x0 = " + rat_to_string(x0));

    std::optional<Rat> rho_exact, other_exact;
    Float rho_f, other_f;
    if (auto root = exact_sqrt(disc)) {
        Rat smaller = (-ib - *root) / 2;
        Rat larger = (-ib + *root) / 2;
        if (choice == ExponentChoice::Larger) {
            rho_exact = larger;
            other_exact = smaller;
        } else {
            rho_exact = smaller;
            other_exact = larger;
        }
        rho_f = to_float(*rho_exact);
        other_f = to_float(*other_exact);
    } else {
        Float s = sqrt(to_float(disc));
        Float smaller = (to_float(-ib) - s) / 2;
        Float larger = (to_float(-ib) + s) / 2;
        rho_f = choice == ExponentChoice::Larger ? larger : smaller;
        other_f = choice == ExponentChoice::Larger ? smaller : larger;
    }

    // a log-free branch needs I(rho + s) != 0 for s >= 1, except for the
    // removable 0/0 met at an exponent gap whose numerator also vanishes
    long log_index = 0; // recurrence index where I(rho+s) vanishes
    if (rho_exact) {
        Rat gap = *other_exact - *rho_exact;
        if (gap == 0) {
            if (choice == ExponentChoice::Smaller)
                throw LogarithmicCase("double exponent: the second branch carries a logarithm");
        } else if (gap > 0 && is_integer(gap)) {
            log_index = static_cast<long>(*to_integer(gap));
        }
    }
    if (opts.exact && !rho_exact)
        throw DomainMismatch("exact series mode needs a rational exponent");

    Float d_near = distance_to_other_singularities(P0, Q0);
    Majorant maj = make_majorant(p, q, d_near, opts.declared_radius);

    Float declared = opts.declared_radius;
    if (declared <= 0) {
        declared = maj.r1 * Float(0.72);
        if (d_near != float_inf())
            declared = std::min(declared, Float(d_near * Float(0.4)));
    }
    if (declared >= maj.r1)
        throw DomainMismatch("declared evaluation radius exceeds the certifiable disk");

    Float nu = 1 / maj.r1;
    Float lambda = (nu + 1 / declared) / 2;

    // induction threshold: (Mp(|rho|+s) + Mq) nu/(lambda-nu) <= s|s+Delta|
    Float delta_gap = abs(other_f - rho_f);
    Float bconst = maj.Mp * nu / (lambda - nu);
    Float cconst = (maj.Mp * abs(rho_f) + maj.Mq) * nu / (lambda - nu);
    Float s_quad = bconst + sqrt(bconst * bconst + 2 * cconst);
    long s_star = 1 + std::max(static_cast<long>(2 * delta_gap.convert_to<double>()) + 1,
                               static_cast<long>(ceil(s_quad).convert_to<double>()));

    const bool exact_mode = opts.exact;
    const bool want_cert = opts.tail_target > 0;
    long order = std::max<long>(opts.order, 8);
    long max_order = std::max<long>(opts.max_order, order);
    if (want_cert) // the tail bound needs N >= s*; past the cap it stays +inf
        order = std::max(order, std::min(s_star, max_order));
    order = std::max(order, log_index + 1);
    max_order = std::max(max_order, order);

    std::vector<Rat> pc_e, qc_e;
    std::vector<Float> pc, qc;
    std::vector<Rat> ce;
    std::vector<Float> cf;

    auto build = [&](long n) {
        if (exact_mode) {
            pc_e = rational_series<Rat>(p.num(), p.den(), static_cast<int>(n));
            qc_e = rational_series<Rat>(q.num(), q.den(), static_cast<int>(n));
        } else {
            pc = rational_series<Float>(p.num(), p.den(), static_cast<int>(n));
            qc = rational_series<Float>(q.num(), q.den(), static_cast<int>(n));
        }

        // exact prefix up to the log index resolves the 0/0 honestly
        long exact_prefix = (!exact_mode && log_index > 0) ? log_index : -1;
        std::vector<Rat> pre_p, pre_q;
        if (exact_prefix >= 0) {
            pre_p = rational_series<Rat>(p.num(), p.den(), static_cast<int>(exact_prefix));
            pre_q = rational_series<Rat>(q.num(), q.den(), static_cast<int>(exact_prefix));
        }

        ce.assign(1, Rat(1));
        cf.assign(1, Float(1));
        auto indicial_at = [&](const Rat& x) {
            return x * (x - 1) + p0 * x + q0;
        };

        if (exact_mode || exact_prefix >= 0) {
            const std::vector<Rat>& pp = exact_mode ? pc_e : pre_p;
            const std::vector<Rat>& qq = exact_mode ? qc_e : pre_q;
            long upto = exact_mode ? n : exact_prefix;
            for (long s = 1; s <= upto; s++) {
                Rat numer(0);
                for (long j = 1; j <= s; j++)
                    numer += (pp[static_cast<std::size_t>(j)] * (*rho_exact + (s - j)) +
                              qq[static_cast<std::size_t>(j)]) *
                             ce[static_cast<std::size_t>(s - j)];
                Rat den = indicial_at(*rho_exact + s);
                if (den == 0) {
                    if (numer != 0)
                        throw LogarithmicCase(
                            "the chosen branch requires a logarithmic term at index " +
                            std::to_string(s));
                    ce.push_back(Rat(0));
                } else {
                    ce.push_back(-numer / den);
                }
            }
            cf.clear();
            for (const Rat& v : ce)
                cf.push_back(to_float(v));
        }

        if (!exact_mode) {
            for (long s = static_cast<long>(cf.size()); s <= n; s++) {
                Float numer(0);
                for (long j = 1; j <= s; j++)
                    numer += (pc[static_cast<std::size_t>(j)] * (rho_f + Float(s - j)) +
                              qc[static_cast<std::size_t>(j)]) *
                             cf[static_cast<std::size_t>(s - j)];
                Float den = (rho_f + s) * (rho_f + s - 1) + to_float(p0) * (rho_f + s) +
                            to_float(q0);
                cf.push_back(-numer / den);
            }
        }
    };

    SeriesSolution out;
    out.x0_ = x0;
    out.rho_exact_ = rho_exact;
    out.rho_ = rho_f;
    if (rho_exact && is_integer(*rho_exact) && *rho_exact >= 0) {
        out.integer_exponent_ = true;
        out.rho_int_ = static_cast<long>(*to_integer(*rho_exact));
    }
    out.exact_ = exact_mode;
    out.cert_radius_ = 1 / lambda;
    out.growth_ = lambda;
    out.declared_radius_ = declared;
    out.cert_order_ = static_cast<int>(s_star);

    while (true) {
        build(order);
        // bound scale C: |c_k| <= C lambda^k on the computed range
        Float c_scale(0);
        Float lp(1);
        for (const Float& v : cf) {
            c_scale = std::max(c_scale, Float(abs(v) / lp));
            lp *= lambda;
        }
        c_scale *= Float(1) + Float("1e-6");
        out.bound_scale_ = c_scale;
        out.order_ = static_cast<int>(order);
        out.tail_bound_ = out.tail_y(declared);
        if (opts.tail_target > 0 && out.tail_bound_ > opts.tail_target &&
            order < max_order) {
            order = std::min(max_order, order * 2);
            continue;
        }
        break;
    }

    out.coeff_ = std::move(cf);
    if (exact_mode)
        out.coeff_exact_ = std::move(ce);
    return out;
}

Float SeriesSolution::tail_y(const Float& r) const
{
    Float z = growth_ * r;
    if (z >= 1 || order_ < cert_order_)
        return std::numeric_limits<Float>::infinity();
    return pow(r, rho_) * bound_scale_ * tail_t0(z, order_);
}

Float SeriesSolution::tail_dy(const Float& r) const
{
    Float z = growth_ * r;
    if (z >= 1 || order_ < cert_order_)
        return std::numeric_limits<Float>::infinity();
    return pow(r, rho_ - 1) * bound_scale_ *
           (abs(rho_) * tail_t0(z, order_) + tail_t1(z, order_));
}

Float SeriesSolution::tail_d2y(const Float& r) const
{
    Float z = growth_ * r;
    if (z >= 1 || order_ < cert_order_)
        return std::numeric_limits<Float>::infinity();
    return pow(r, rho_ - 2) * bound_scale_ *
           (abs(rho_ * (rho_ - 1)) * tail_t0(z, order_) +
            2 * abs(rho_) * tail_t1(z, order_) + tail_t2(z, order_));
}

SeriesSolution::Value SeriesSolution::eval(const Float& x) const
{
    Float t = x - to_float(x0_);
    Float r = abs(t);
    if (growth_ * r >= 1)
        throw DomainMismatch("evaluation point outside the certified disk");
    if (t == 0) {
        if (!integer_exponent_)
            throw DomainMismatch("evaluation at the expansion point needs an integer exponent");
        auto at = [this](long k) {
            return k >= 0 && k < static_cast<long>(coeff_.size()) ? coeff_[static_cast<std::size_t>(k)]
                                                                  : Float(0);
        };
        Value v;
        v.y = rho_int_ == 0 ? at(0) : Float(0);
        v.dy = rho_int_ <= 1 ? at(1 - rho_int_) : Float(0);
        v.d2y = rho_int_ <= 2 ? Float(2) * at(2 - rho_int_) : Float(0);
        return v;
    }
    if (t < 0 && !integer_exponent_)
        throw DomainMismatch("t < 0 with a non-integer exponent");

    Float s(0), s1(0), s2(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        s2 = s2 * t + 2 * s1;
        s1 = s1 * t + s;
        s = s * t + *it;
    }

    Float tp; // t^rho
    if (integer_exponent_)
        tp = pow(t, rho_int_);
    else
        tp = pow(t, rho_);

    Value v;
    v.y = tp * s;
    // y'  = t^(rho-1) (rho S + t S')
    // y'' = t^(rho-2) (rho(rho-1) S + 2 rho t S' + t^2 S'')
    Float tm1 = tp / t;
    Float tm2 = tm1 / t;
    v.dy = tm1 * (rho_ * s + t * s1);
    v.d2y = tm2 * (rho_ * (rho_ - 1) * s + 2 * rho_ * t * s1 + t * t * s2);
    return v;
}

} // namespace fxf
