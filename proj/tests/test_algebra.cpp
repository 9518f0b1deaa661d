#include "fxf/errors.hpp"
#include "fxf/json_io.hpp"
#include "fxf/ratfunc.hpp"
#include "fxf/sampler.hpp"

#include <doctest.h>

using namespace fxf;

namespace {

Rat r(const char* s)
{
    return rat_from_string(s);
}

RatFunc random_ratfunc(RatSampler& s, bool nonzero = false)
{
    while (true) {
        std::vector<Rat> num, den;
        long dn = s.bounded(0, 3), dd = s.bounded(0, 2);
        for (long i = 0; i <= dn; i++)
            num.push_back(s.rat(-4, 4, 4));
        for (long i = 0; i <= dd; i++)
            den.push_back(s.rat(-4, 4, 4));
        Poly d(den);
        if (d.is_zero())
            continue;
        RatFunc f{Poly(num), d};
        if (nonzero && f.is_zero())
            continue;
        return f;
    }
}

} // namespace

TEST_CASE("rational scalar parsing and canonical form")
{
    CHECK(rat_to_string(r("-4/6")) == "-2/3");
    CHECK(rat_to_string(r("3")) == "3");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(r("1/2") + r("1/3") == r("5/6"));
    CHECK_THROWS_AS(r("1/0"), ParseError);
    CHECK_THROWS_AS(r("2x"), ParseError);
    CHECK(*exact_sqrt(r("9/4")) == r("3/2"));
    CHECK(!exact_sqrt(r("2")));
    CHECK(is_nonpositive_integer(r("-3")));
    CHECK(!is_nonpositive_integer(r("-3/2")));
}

TEST_CASE("rational function arithmetic: common denominator, inverse, gcd")
{
    RatFunc x = RatFunc::x();
    RatFunc one_over_x = RatFunc(Rat(1)) / x;
    RatFunc one_over_xm1 = RatFunc(Rat(1)) / (x - RatFunc(Rat(1)));

    // 1/x + 1/(x-1) = (2x-1)/(x(x-1))
    RatFunc expect(Poly{r("-1"), r("2")}, Poly::x() * Poly::linear(Rat(1)));
    CHECK(arith(one_over_x, one_over_xm1, ArithOp::Add) == expect);

    // f * (1/f) = 1 for f = (x+2)/(x^2-1)
    RatFunc f(Poly{r("2"), r("1")}, Poly{r("-1"), r("0"), r("1")});
    CHECK((f * (RatFunc(Rat(1)) / f)).is_one());

    // (x^2-1)/(x-1) reduces to x+1
    RatFunc g(Poly{r("-1"), r("0"), r("1")}, Poly{r("-1"), r("1")});
    CHECK(g == RatFunc(Poly{r("1"), r("1")}));

    CHECK_THROWS_AS(arith(f, RatFunc(), ArithOp::Div), DivisionByZero);
}

TEST_CASE("differentiation")
{
    RatFunc x2(Poly{r("0"), r("0"), r("1")});
    CHECK(x2.derivative() == RatFunc(Poly{r("0"), r("2")}));

    RatFunc inv_x(Poly{r("1")}, Poly::x());
    CHECK(inv_x.derivative() == RatFunc(Poly{r("-1")}, Poly{r("0"), r("0"), r("1")}));

    // f'/f for f = -ab/(x(x-1)) is -(2x-1)/(x(x-1)), independent of ab
    for (const char* ab : {"6", "-3/7", "1/5"}) {
        RatFunc f(Poly(-r(ab)), Poly::x() * Poly::linear(Rat(1)));
        RatFunc expect(Poly{r("1"), r("-2")}, Poly::x() * Poly::linear(Rat(1)));
        CHECK(f.log_derivative() == expect);
    }
}

TEST_CASE("rational roots with multiplicities")
{
    Poly p = Poly::x() * Poly::linear(Rat(1)) * Poly::linear(Rat(3));
    RationalRoots rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.roots[0].root == 0);
    CHECK(rr.roots[1].root == 1);
    CHECK(rr.roots[2].root == 3);
    for (const RootInfo& info : rr.roots)
        CHECK(info.multiplicity == 1);
    CHECK(rr.unaccounted == 0);

    Poly dbl = Poly::linear(Rat(1)) * Poly::linear(Rat(1));
    rr = rational_roots(dbl);
    REQUIRE(rr.roots.size() == 1);
    CHECK(rr.roots[0].root == 1);
    CHECK(rr.roots[0].multiplicity == 2);

    rr = rational_roots(Poly{r("-2"), r("0"), r("1")}); // x^2 - 2
    CHECK(rr.roots.empty());
    CHECK(rr.unaccounted == 2);

    // fractional roots need divisor pairs of leading/constant coefficients
    Poly frac = Poly{r("-1"), r("2")} * Poly{r("1"), r("3")} * Poly{r("5"), r("1")};
    rr = rational_roots(frac);
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.roots[0].root == r("-5"));
    CHECK(rr.roots[1].root == r("-1/3"));
    CHECK(rr.roots[2].root == r("1/2"));
}

TEST_CASE("evaluation, exact and at poles")
{
    RatFunc f(Poly{r("-1"), r("2")}, Poly::x() * Poly::linear(Rat(1)));
    CHECK(f.eval(Rat(2)) == r("3/2"));

    RatFunc inv_x(Poly{r("1")}, Poly::x());
    CHECK_THROWS_AS(inv_x.eval(Rat(0)), PoleEvaluation);

    RatFunc x2(Poly{r("0"), r("0"), r("1")});
    CHECK(x2.eval(r("1/3")) == r("1/9"));

    // float path evaluates exactly at the binary value, then rounds once
    Float xf = Float(1) / 3;
    Float direct = f.eval_float(xf);
    Float exact = to_float(f.eval(to_rat_exact(xf)));
    CHECK(direct == exact);
}

TEST_CASE("ring axioms and derivation rules on random rational functions")
{
    RatSampler s(42);
    for (int i = 0; i < 25; i++) {
        RatFunc a = random_ratfunc(s);
        RatFunc b = random_ratfunc(s);
        RatFunc c = random_ratfunc(s);

        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        if (!b.is_zero())
            CHECK((b * (RatFunc(Rat(1)) / b)).is_one());

        // product rule, exact
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());

        // logarithmic derivative of a product is the sum of log derivatives
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).log_derivative() == a.log_derivative() + b.log_derivative());
    }
}

TEST_CASE("rational root reconstruction divides the polynomial")
{
    RatSampler s(7);
    for (int i = 0; i < 25; i++) {
        std::vector<Rat> cs;
        long deg = s.bounded(1, 5);
        for (long k = 0; k <= deg; k++)
            cs.push_back(s.rat(-5, 5, 3));
        Poly p(cs);
        if (p.is_zero())
            continue;

        RationalRoots rr = rational_roots(p);
        int mult_sum = 0;
        Poly product{Rat(1)};
        for (const RootInfo& info : rr.roots) {
            mult_sum += info.multiplicity;
            product *= Poly::linear(info.root).pow(
                static_cast<unsigned>(info.multiplicity));
        }
        CHECK(mult_sum <= p.degree());
        CHECK(mult_sum + rr.unaccounted == p.degree());
        CHECK(divrem(p, product).second.is_zero());
        if (rr.residual.degree() > 0)
            CHECK(rational_roots(rr.residual).roots.empty());
    }
}

TEST_CASE("rational function JSON round trip")
{
    RatSampler s(99);
    for (int i = 0; i < 10; i++) {
        RatFunc f = random_ratfunc(s);
        CHECK(json::ratfunc_from(json::ratfunc_json(f)) == f);
    }
    RatFunc f = json::ratfunc_from(
        json::Json{{"num", {"1", "-2/3"}}, {"den", {"0", "2"}}});
    // canonical form has a monic denominator
    CHECK(f.den().leading() == 1);
}
