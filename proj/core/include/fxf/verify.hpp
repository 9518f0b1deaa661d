#pragma once

#include "fxf/series.hpp"
#include "fxf/xform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fxf {

namespace identity {
inline constexpr const char* product_eq3 = "product_eq3";
inline constexpr const char* quotient_eq6 = "quotient_eq6";
inline constexpr const char* chain_eq22 = "chain_eq22";
inline constexpr const char* derivative_relation = "derivative_relation";
inline constexpr const char* riccati_residual = "riccati_residual";
} // namespace identity

struct VerifyOptions {
    Float tol = Float("1e-8");
    std::vector<Float> points; // empty => default Chebyshev nodes
    int n_points = 12;
    int min_points = 8; // fewer evaluated points means verdict = fail
    int order = 64;
    int max_order = 1024;
    Float tail_target = Float("1e-12");
    ExponentChoice branch = ExponentChoice::Larger;
    std::optional<Rat> expansion_point; // default: automatic
    bool exact = false; // exact rational series coefficients (oracle mode)
};

struct SkippedPoint {
    Float x;
    std::string reason;
};

struct VerificationReport {
    std::string identity;
    Float tolerance;
    Float max_residual; // over evaluated points
    bool pass = false;
    std::vector<Float> points;
    std::vector<SkippedPoint> skipped;
    int evaluated = 0;
};

// Chebyshev nodes on the 10%-80% band of the half-distance evaluation disk
// around x0, pulled inside the certifiable radius when necessary.
std::vector<Float> default_sample_points(const LinearODE2& e, const Rat& x0,
                                         int n);

// Expansion point selection: the smallest finite rational regular singular
// point with real exponents, otherwise a nearby ordinary point.
Rat choose_expansion_point(const LinearODE2& e);

// |v' + v^2 + (F - f'/f) v - f| for v = f y / y' built from a series
// solution y of the pair's source equation.
VerificationReport verify_product_identity(const CompanionPair& pair,
                                           const VerifyOptions& opts = {});

// |h' - (alpha/f) h^2 + (F - f'/f) h - f| for h = f y / y' built from a
// series solution of y'' - F y' + alpha y = 0.
VerificationReport verify_quotient_identity(const RatFunc& F, const RatFunc& f,
                                            const Rat& alpha,
                                            const VerifyOptions& opts = {});

// |F'(a,b;c;x) - (ab/c) F(a+1,b+1;c+1;x)| with both sides summed from
// independent series. Throws DegenerateC.
VerificationReport hg_derivative_check(const Rat& a, const Rat& b, const Rat& c,
                                       const VerifyOptions& opts = {});

// |dh1/dxi + h1^2 + G h1 - H| for h1(xi) = h(x(xi)), h = f y / y' with
// f(x) = (D/lambda)/(x + mu) and y a series solution of the outer equation.
VerificationReport verify_chain_identity(const InnerHeunSpec& spec,
                                         const VariableChange& vc,
                                         const LinearODE2& outer,
                                         const VerifyOptions& opts = {});

// Chain check for a reduction solution: the inner equation is the collapsed
// three-singularity one (d = 1), built leniently from the same parameters.
VerificationReport verify_chain_reduction(const ReductionSolution& sol,
                                          const Rat& D, const Rat& lambda,
                                          const VerifyOptions& opts = {});

// Chain check straight from raw parameters; tolerates the coalesced inner
// equation and reports what happened through the flags.
struct ChainRun {
    VerificationReport report;
    std::vector<std::string> flags;
};
ChainRun verify_chain_from_params(const Rat& a, const Rat& b, const Rat& c,
                                  const Rat& c1, const Rat& D, const Rat& m,
                                  const Rat& n, const Rat& mu, const Rat& lambda,
                                  const VerifyOptions& opts = {});

// Sanity path: residual of h = y'/y in the Riccati induced by e itself.
VerificationReport riccati_self_residual(const LinearODE2& e,
                                         const VerifyOptions& opts = {});

// Gauss series evaluation used by the derivative check; exposed for tests.
Float gauss_2f1(const Rat& a, const Rat& b, const Rat& c, const Float& x,
                Float* derivative = nullptr);

} // namespace fxf
