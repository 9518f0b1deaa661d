#pragma once

#include "fxf/ode.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fxf {

// The dual pair built from y'' - F y' - f y = 0: the second equation is
// u'' + (F - f'/f) u' - f u = 0, and solutions are linked through
// (y'/y)(u'/u) = f.
struct CompanionPair {
    LinearODE2 source;    // P = -F, Q = -f
    LinearODE2 companion; // P = F - f'/f, Q = -f
    RatFunc F, f;
};

CompanionPair companion(const RatFunc& F, const RatFunc& f); // throws ZeroPotential

// (a, b, c) -> (-a, -b, 1-c); checks the dual-equality identity exactly
// whenever the companion is defined (ab != 0).
HGParams hg_companion_map(const HGParams& p);

struct MathieuCompanion {
    LinearODE2 ode;
    Rat third_singularity; // -ab/m
    std::vector<std::string> flags;
};

// Companion of the non-Fuchsian equation with f = -(ab + m x)/(x(x-1)).
MathieuCompanion mathieu_like_companion(const Rat& a, const Rat& b,
                                        const Rat& c, const Rat& m);

struct HeunCompanion {
    LinearODE2 ode;
    std::optional<HeunParams> matched;      // present in the coalescent cases
    std::optional<std::string> coalescence; // q_zero | q_over_ab_one | q_over_ab_d | ab_zero
};

HeunCompanion heun_companion(const HeunParams& p); // throws TrivialPotential

// Moebius change of independent variable xi(x) = lambda / (1 - c2 (x + mu))
// with inverse x(xi) = c1 (xi - lambda)/xi - mu, c1 = 1/c2, and
// eta(xi) = dx/dxi = c1 lambda / xi^2.
struct VariableChange {
    enum class Kind { Identity, Moebius };
    Kind kind = Kind::Moebius;
    Rat lambda, c1, c2, mu;
    RatFunc forward; // xi(x)
    RatFunc inverse; // x(xi)
    RatFunc eta;     // in xi

    static VariableChange identity();
};

// Closed-form change of variable solving eta(xi) f(x(xi)) = D/(xi(xi-lambda))
// for f(x) = (D/lambda)/(x + mu); c1 is the free integration constant.
VariableChange solve_eta(const Rat& D, const Rat& lambda, const Rat& mu,
                         const Rat& c1 = Rat(1));

// Largest numerical deviation of (D/lambda) [ln(x(xi)+mu) - ln((xi-lambda)/xi)]
// across sample points; a direct check that the change of variable solves
// its defining integral equation.
Float eta_integral_constancy_deviation(const VariableChange& vc, const Rat& D,
                                       int n_points = 10);

// Coefficients of the inner equation k'' + G k' - H k = 0, tolerant of
// degenerate parameter choices (used for coalesced specs).
std::pair<RatFunc, RatFunc> inner_gh(const Rat& a, const Rat& b, const Rat& c,
                                     const Rat& c1, const Rat& D, const Rat& m,
                                     const Rat& n, const Rat& mu,
                                     const Rat& lambda);

struct InnerHeunSpec {
    Rat a, b, c, c1, D, m, n, mu, lambda;
    RatFunc G, H;    // in xi
    HeunParams heun; // parameters after the xi -> lambda*xi rescale
};

InnerHeunSpec build_inner_heun(const Rat& a, const Rat& b, const Rat& c,
                               const Rat& c1, const Rat& D, const Rat& m,
                               const Rat& n, const Rat& mu,
                               const Rat& lambda); // throws DegenerateSpec

struct OuterEquation {
    LinearODE2 ode;       // y'' - (g/eta) y' - (f1/eta) y = 0, in x
    RatFunc g_over_eta;   // recomputed symbolically from first principles
    RatFunc f1_over_eta;
    Poly n_recomputed;    // numerator of g_over_eta over [1-c2(x+mu)](mx+n)(x+mu)
    Poly n_printed;       // quadratic from the closed-form display
    Poly n_diff;          // n_printed - n_recomputed
};

OuterEquation build_outer_equation(const InnerHeunSpec& spec,
                                   const VariableChange& vc);

// Same construction straight from raw parameters; also valid when the
// inner equation is degenerate (d = 0 or 1).
OuterEquation build_outer_equation_raw(const Rat& a, const Rat& b, const Rat& c,
                                       const Rat& c1, const Rat& D, const Rat& m,
                                       const Rat& n, const Rat& mu,
                                       const Rat& lambda);

enum class ReductionBranch { Paper, Alternate };

struct ReductionSolution {
    Rat a, b, c, m, n; // defining inputs
    Rat R, c1, mu;
    ReductionBranch branch = ReductionBranch::Paper;
    std::vector<std::string> flags; // mu_equals_n_over_m, d_equals_one, K_zero, L_zero
};

// Exact solution of the three coefficient equations that force the outer
// y' numerator into the square R (m x + n)^2. Throws NoSolution /
// IndeterminateSystem as appropriate.
std::vector<ReductionSolution> reduce_to_hypergeometric(const Rat& a, const Rat& b,
                                                        const Rat& c, const Rat& m,
                                                        const Rat& n);

// The paper's closed forms for (R, c1, mu); empty components where a
// denominator vanishes. Used as a cross-check against the exact solver.
struct ReductionClosedForms {
    std::optional<Rat> R, c1, mu;
};
ReductionClosedForms reduction_closed_forms(const Rat& a, const Rat& b,
                                            const Rat& c, const Rat& m,
                                            const Rat& n);

// Exact residuals of the three reduction equations at (R, c1, mu); all zero
// iff the triple solves the system.
std::array<Rat, 3> reduction_system_residuals(const Rat& a, const Rat& b,
                                              const Rat& c, const Rat& m,
                                              const Rat& n, const Rat& R,
                                              const Rat& c1, const Rat& mu);

struct ReducedOuter {
    LinearODE2 ode;
    Poly n_recomputed;
    Poly square_diff; // n_recomputed - R (m x + n)^2, must be zero
};

ReducedOuter reduced_outer_equation(const ReductionSolution& sol, const Rat& D,
                                    const Rat& m, const Rat& n);

} // namespace fxf
