#pragma once

#include "fxf/ode.hpp"

#include <vector>

namespace fxf {

enum class ExponentChoice { Larger, Smaller };

struct FrobeniusOptions {
    int order = 64;      // minimum truncation order
    int max_order = 1024;
    bool exact = false;  // exact rational coefficients (rational exponent only)
    // Raise the order until the tail bound on the declared disk drops below
    // this target (<= 0 disables the adaptation).
    Float tail_target = Float("1e-12");
    Float declared_radius = Float(0); // 0 => automatic
};

// Truncated Frobenius expansion y = t^rho sum c_k t^k, t = x - x0, together
// with a certified geometric majorant |c_k| <= C * growth^k that yields
// rigorous tail bounds for y, y' and y'' inside the certified disk.
class SeriesSolution {
public:
    const Rat& expansion_point() const { return x0_; }
    bool exponent_is_exact() const { return rho_exact_.has_value(); }
    const Rat& exponent_exact() const { return *rho_exact_; }
    const Float& exponent() const { return rho_; }
    int order() const { return order_; }

    bool exact_mode() const { return exact_; }
    const std::vector<Rat>& coefficients_exact() const { return coeff_exact_; }
    const std::vector<Float>& coefficients() const { return coeff_; }

    const Float& cert_radius() const { return cert_radius_; }
    const Float& growth() const { return growth_; }
    const Float& bound_scale() const { return bound_scale_; }
    const Float& declared_radius() const { return declared_radius_; }
    const Float& tail_bound() const { return tail_bound_; } // |y - y_N| on the declared disk
    // minimum order at which the geometric majorant is proved; tail bounds
    // below it are +inf
    int certification_order() const { return cert_order_; }

    struct Value {
        Float y, dy, d2y;
    };
    // Term-wise evaluation of the truncated series and its derivatives.
    // Throws DomainMismatch outside the certified disk or for t <= 0 with a
    // non-integer exponent.
    Value eval(const Float& x) const;

    Float tail_y(const Float& r) const;
    Float tail_dy(const Float& r) const;
    Float tail_d2y(const Float& r) const;

private:
    friend SeriesSolution frobenius(const LinearODE2&, const Rat&,
                                    ExponentChoice, const FrobeniusOptions&);
    Rat x0_;
    std::optional<Rat> rho_exact_;
    Float rho_;
    bool integer_exponent_ = false;
    long rho_int_ = 0;
    bool exact_ = false;
    std::vector<Rat> coeff_exact_;
    std::vector<Float> coeff_;
    int order_ = 0;
    int cert_order_ = 0;
    Float cert_radius_, growth_, bound_scale_, declared_radius_, tail_bound_;
};

SeriesSolution frobenius(const LinearODE2& e, const Rat& x0,
                         ExponentChoice choice,
                         const FrobeniusOptions& opts = {});

// Distance from x0 to the nearest other singular point of the equation
// (rational poles exactly, irrational ones through a root lower bound);
// +inf when there is none.
Float nearest_singularity_distance(const LinearODE2& e, const Rat& x0);

// Largest disk radius around x0 on which the series tail can be certified.
Float certifiable_radius(const LinearODE2& e, const Rat& x0);

} // namespace fxf
