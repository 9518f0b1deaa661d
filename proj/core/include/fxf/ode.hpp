#pragma once

#include "fxf/ratfunc.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fxf {

// Second-order linear equation y'' + P(x) y' + Q(x) y = 0.
struct LinearODE2 {
    RatFunc P, Q;
    bool operator==(const LinearODE2&) const = default;
};

struct HGParams {
    Rat a, b, c;
    bool operator==(const HGParams&) const = default;
};

// Heun parameter tuple. alpha and beta enter the equation only through
// their product, so the tuple stores alpha*beta and alpha+beta; the sum is
// pinned by the exponent-sum constraint gamma+delta+epsilon = alpha+beta+1.
class HeunParams {
public:
    HeunParams(Rat gamma, Rat delta, Rat epsilon, Rat alpha_beta,
               Rat alpha_plus_beta, Rat d, Rat q); // throws InvalidParams

    const Rat& gamma() const { return gamma_; }
    const Rat& delta() const { return delta_; }
    const Rat& epsilon() const { return epsilon_; }
    const Rat& alpha_beta() const { return alpha_beta_; }
    const Rat& alpha_plus_beta() const { return alpha_plus_beta_; }
    const Rat& d() const { return d_; }
    const Rat& q() const { return q_; }

    // alpha, beta individually (ascending) when the quadratic
    // z^2 - (alpha+beta) z + alpha*beta splits over Q.
    std::optional<std::pair<Rat, Rat>> resolve_alpha_beta() const;

    bool operator==(const HeunParams&) const = default;

private:
    Rat gamma_, delta_, epsilon_, alpha_beta_, alpha_plus_beta_, d_, q_;
};

enum class PointKind { Regular, Irregular };

// The indicial quadratic rho(rho-1) + p0 rho + q0 = 0 together with its
// roots: exact when rational, otherwise high-precision approximations (a
// conjugate pair is stored as (re, im)).
struct IndicialExponents {
    Rat p0, q0;
    bool exact = false;
    std::pair<Rat, Rat> exact_roots;  // ascending, valid when exact
    bool complex_pair = false;
    std::pair<Float, Float> approx;   // ascending real roots, or (re, im)
};

struct SingularPoint {
    bool at_infinity = false;
    Rat location; // meaningful when !at_infinity
    PointKind kind = PointKind::Regular;
    int pole_order_P = 0; // after the x -> 1/t substitution when at infinity
    int pole_order_Q = 0;
    std::optional<IndicialExponents> exponents; // present iff regular
};

struct Classification {
    std::vector<SingularPoint> points; // finite points ascending, then infinity
    // Denominator factors without rational roots; their degrees bound the
    // number of singular points whose location could not be resolved.
    Poly unresolved_P, unresolved_Q;
    int unresolved_count() const
    {
        return std::max(unresolved_P.degree(), 0) +
               std::max(unresolved_Q.degree(), 0);
    }
};

LinearODE2 from_heun(const HeunParams& p);
LinearODE2 from_hypergeometric(const HGParams& p);

// The equation satisfied by y(1/t); classifying it at t = 0 is the
// classification of the original equation at infinity.
LinearODE2 reciprocal_equation(const LinearODE2& e);

Classification classify(const LinearODE2& e);

// Classification of one finite point; empty when x0 is an ordinary point.
std::optional<SingularPoint> classify_point(const LinearODE2& e, const Rat& x0);
std::optional<SingularPoint> classify_infinity(const LinearODE2& e);

std::optional<HeunParams> match_heun(const LinearODE2& e);

struct HGTemplateMatch {
    Rat c, a_plus_b, ab;
    std::optional<HGParams> params; // resolved when a, b are rational
};

std::optional<HGTemplateMatch> match_hypergeometric_template(const LinearODE2& e);
std::optional<HGParams> match_hypergeometric(const LinearODE2& e);

} // namespace fxf
