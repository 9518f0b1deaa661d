#pragma once

#include "fxf/poly.hpp"

#include <string>

namespace fxf {

// Rational function in canonical form: gcd(num, den) = 1 and den monic, so
// equality of values is structural equality. Construction reduces.
class RatFunc {
public:
    RatFunc() = default; // zero
    RatFunc(Poly num, Poly den); // throws DivisionByZero when den == 0
    explicit RatFunc(Poly p);
    explicit RatFunc(const Rat& c);

    static RatFunc x();
    static RatFunc constant(const Rat& c);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b); // throws DivisionByZero

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const
    {
        return num_ == o.num_ && den_ == o.den_;
    }

    RatFunc derivative() const;
    RatFunc log_derivative() const; // f'/f, throws ZeroPotential when f == 0

    Rat eval(const Rat& x) const;       // throws PoleEvaluation at poles
    Float eval_float(const Float& x) const; // exact rational path, one rounding

    int pole_order(const Rat& x0) const; // multiplicity of x0 in den
    Rat residue_simple(const Rat& x0) const; // residue at a pole of order <= 1

    RatFunc shift(const Rat& s) const;       // f(x + s)
    RatFunc reciprocal_arg() const;          // f(1/x)
    RatFunc compose(const RatFunc& g) const; // f(g(x))

    std::string str(const std::string& var = "x") const;

private:
    void reduce();
    Poly num_;
    Poly den_{Rat(1)};
};

enum class ArithOp { Add, Sub, Mul, Div };

// Dispatching wrapper used by the generic CLI/JSON surface.
RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op);

} // namespace fxf
