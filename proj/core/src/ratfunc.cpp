#include "fxf/ratfunc.hpp"
#include "fxf/errors.hpp"

namespace fxf {

RatFunc::RatFunc(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    reduce();
}

RatFunc::RatFunc(Poly p)
    : num_(std::move(p)), den_{Rat(1)}
{
}

RatFunc::RatFunc(const Rat& c)
    : num_(Poly(c)), den_{Rat(1)}
{
}

RatFunc RatFunc::x()
{
    return RatFunc(Poly::x());
}

RatFunc RatFunc::constant(const Rat& c)
{
    return RatFunc(c);
}

void RatFunc::reduce()
{
    if (num_.is_zero()) {
        den_ = Poly{Rat(1)};
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const
{
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b)
{
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero())
        throw DivisionByZero("division by the zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    }
    throw Error("Internal", "unknown arithmetic operation");
}

RatFunc RatFunc::derivative() const
{
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(),
                   den_ * den_);
}

RatFunc RatFunc::log_derivative() const
{
    if (is_zero())
        throw ZeroPotential("logarithmic derivative of the zero function");
    return derivative() / *this;
}

Rat RatFunc::eval(const Rat& x) const
{
    Rat d = den_.eval(x);
    if (d == 0)
        throw PoleEvaluation("evaluation at a pole: x = " + rat_to_string(x));
    return num_.eval(x) / d;
}

Float RatFunc::eval_float(const Float& x) const
{
    // evaluate exactly over Q at the exact binary value of x, then round once
    return to_float(eval(to_rat_exact(x)));
}

int RatFunc::pole_order(const Rat& x0) const
{
    if (is_zero())
        return 0;
    return root_multiplicity(den_, x0);
}

Rat RatFunc::residue_simple(const Rat& x0) const
{
    int ord = pole_order(x0);
    if (ord == 0)
        return Rat(0);
    if (ord > 1)
        throw PoleEvaluation("residue requested at a pole of order " +
                             std::to_string(ord));
    // simple pole: residue = num(x0) / den'(x0)
    return num_.eval(x0) / den_.derivative().eval(x0);
}

RatFunc RatFunc::shift(const Rat& s) const
{
    return RatFunc(num_.shift(s), den_.shift(s));
}

RatFunc RatFunc::reciprocal_arg() const
{
    if (is_zero())
        return *this;
    // f(1/x) = x^(deg den - deg num) * rev(num)(x) / rev(den)(x)
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    if (dd > dn)
        n *= Poly::x().pow(static_cast<unsigned>(dd - dn));
    else if (dn > dd)
        d *= Poly::x().pow(static_cast<unsigned>(dn - dd));
    return RatFunc(std::move(n), std::move(d));
}

namespace {

// p(g(x)) by Horner over rational functions
RatFunc poly_compose(const Poly& p, const RatFunc& g)
{
    RatFunc acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * g + RatFunc(*it);
    return acc;
}

} // namespace

RatFunc RatFunc::compose(const RatFunc& g) const
{
    RatFunc d = poly_compose(den_, g);
    if (d.is_zero())
        throw DivisionByZero("composition maps into a pole identically");
    return poly_compose(num_, g) / d;
}

std::string RatFunc::str(const std::string& var) const
{
    if (is_polynomial())
        return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace fxf
