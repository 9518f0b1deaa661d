#include "fxf/errors.hpp"
#include "fxf/sampler.hpp"
#include "fxf/series.hpp"

#include <doctest.h>

using namespace fxf;

namespace {

Rat r(const char* s)
{
    return rat_from_string(s);
}

} // namespace

TEST_CASE("gauss series coefficients from the recurrence")
{
    Rat a = r("1/2"), b = r("1/3"), c = r("5/4");
    LinearODE2 e = from_hypergeometric({a, b, c});

    FrobeniusOptions opts;
    opts.order = 16;
    opts.exact = true;
    opts.tail_target = Float(0);
    SeriesSolution s = frobenius(e, Rat(0), ExponentChoice::Larger, opts);

    REQUIRE(s.exponent_is_exact());
    CHECK(s.exponent_exact() == 0); // exponents {0, -1/4}, larger is 0
    const auto& cs = s.coefficients_exact();
    REQUIRE(static_cast<int>(cs.size()) >= 13);
    CHECK(cs[0] == 1);
    for (int k = 0; k + 1 <= 12; k++) {
        Rat expect = (a + k) * (b + k) / ((c + k) * (1 + k));
        CHECK(cs[static_cast<std::size_t>(k + 1)] ==
              cs[static_cast<std::size_t>(k)] * expect);
    }
}

TEST_CASE("value against a closed form: F(1,1;2;1/2) = 2 ln 2")
{
    LinearODE2 e = from_hypergeometric({r("1"), r("1"), r("2")});
    FrobeniusOptions opts;
    opts.declared_radius = Float("0.55");
    opts.tail_target = Float("1e-30");
    SeriesSolution s = frobenius(e, Rat(0), ExponentChoice::Larger, opts);

    Float y = s.eval(Float("0.5")).y;
    Float expect = 2 * log(Float(2));
    CHECK(abs(y - expect) <= s.tail_y(Float("0.5")));
    CHECK(abs(y - expect) < Float("1e-25"));
}

TEST_CASE("normalisation at the expansion point")
{
    // gamma = 1/3: exponents at 0 are {0, 2/3}, the smaller branch is the
    // analytic one and it is normalised to 1
    HeunParams p(r("1/3"), r("1/2"), r("1/6"), r("2"), r("0"), r("3"), r("1"));
    LinearODE2 e = from_heun(p);
    SeriesSolution s = frobenius(e, Rat(0), ExponentChoice::Smaller);
    REQUIRE(s.exponent_is_exact());
    REQUIRE(s.exponent_exact() == 0);
    CHECK(s.eval(to_float(Rat(0))).y == 1);
}

TEST_CASE("logarithmic and irregular rejections")
{
    // exponents at 0 are {0, -1} and the gap obstruction is -1/4 != 0: the
    // smaller branch carries a log term
    LinearODE2 e = from_hypergeometric({r("1/2"), r("1/2"), r("2")});
    CHECK_THROWS_AS(frobenius(e, Rat(0), ExponentChoice::Smaller), LogarithmicCase);

    // for (1,1,2) the obstruction vanishes: the smaller branch is exactly 1/x
    LinearODE2 resolved = from_hypergeometric({r("1"), r("1"), r("2")});
    SeriesSolution s = frobenius(resolved, Rat(0), ExponentChoice::Smaller);
    Float x("0.3");
    CHECK(abs(s.eval(x).y - 1 / x) < Float("1e-30"));

    // double exponent: second branch always logarithmic
    LinearODE2 d = from_hypergeometric({r("1"), r("1"), r("1")});
    CHECK_THROWS_AS(frobenius(d, Rat(0), ExponentChoice::Smaller), LogarithmicCase);

    // P with a double pole is an irregular point
    LinearODE2 irr{RatFunc(Poly{r("1")}, Poly{r("0"), r("0"), r("1")}), RatFunc()};
    CHECK_THROWS_AS(frobenius(irr, Rat(0), ExponentChoice::Larger), IrregularPoint);
}

TEST_CASE("ordinary point, smaller branch resolves the removable gap")
{
    // u'' - u = 0 at the ordinary point 0: smaller branch is cosh
    LinearODE2 e{RatFunc(), RatFunc(Rat(-1))};
    FrobeniusOptions opts;
    opts.declared_radius = Float("0.5");
    SeriesSolution s = frobenius(e, Rat(0), ExponentChoice::Smaller, opts);
    Float y = s.eval(Float("0.3")).y;
    CHECK(abs(y - cosh(Float("0.3"))) < Float("1e-30"));

    // larger branch (exponent 1) is the odd solution sinh
    SeriesSolution t = frobenius(e, Rat(0), ExponentChoice::Larger, opts);
    CHECK(abs(t.eval(Float("0.3")).y - sinh(Float("0.3"))) < Float("1e-30"));
    CHECK(abs(t.eval(Float("0.3")).dy - cosh(Float("0.3"))) < Float("1e-30"));
}

TEST_CASE("series satisfies the equation term by term (exact defect check)")
{
    RatSampler rs(37);
    for (int iter = 0; iter < 5; iter++) {
        HeunParams p = sample_heun(rs);
        LinearODE2 e = from_heun(p);

        FrobeniusOptions opts;
        opts.order = 12;
        opts.exact = true;
        opts.tail_target = Float(0);
        SeriesSolution s = frobenius(e, Rat(0), ExponentChoice::Larger, opts);
        REQUIRE(s.exponent_is_exact());
        Rat rho = s.exponent_exact();

        // independent series expansion of p = t P and q = t^2 Q
        RatFunc t(Poly::x());
        RatFunc pf = t * e.P.shift(Rat(0));
        RatFunc qf = t * t * e.Q.shift(Rat(0));
        int order = s.order();
        auto expand = [order](const RatFunc& f) {
            std::vector<Rat> out(static_cast<std::size_t>(order) + 1, Rat(0));
            for (int k = 0; k <= order; k++) {
                Rat acc = f.num().coeff(k);
                for (int j = 1; j <= std::min(k, f.den().degree()); j++)
                    acc -= f.den().coeff(j) * out[static_cast<std::size_t>(k - j)];
                out[static_cast<std::size_t>(k)] = acc / f.den().coeff(0);
            }
            return out;
        };
        std::vector<Rat> pc = expand(pf), qc = expand(qf);
        Rat p0 = pc[0], q0 = qc[0];

        const auto& cs = s.coefficients_exact();
        // defect coefficient at every computed index vanishes exactly
        for (int ss = 1; ss <= order; ss++) {
            Rat acc = cs[static_cast<std::size_t>(ss)] *
                      ((rho + ss) * (rho + ss - 1) + p0 * (rho + ss) + q0);
            for (int j = 1; j <= ss; j++)
                acc += (pc[static_cast<std::size_t>(j)] * (rho + ss - j) +
                        qc[static_cast<std::size_t>(j)]) *
                       cs[static_cast<std::size_t>(ss - j)];
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("tail bound halves when the radius halves")
{
    RatSampler rs(53);
    for (int iter = 0; iter < 5; iter++) {
        LinearODE2 e = from_heun(sample_heun(rs));
        SeriesSolution s = frobenius(e, Rat(0), ExponentChoice::Larger);
        Float rr = s.declared_radius();
        CHECK(s.tail_y(rr / 2) <= s.tail_y(rr) / 2);
        CHECK(s.tail_dy(rr / 2) <= s.tail_dy(rr));
    }
}

TEST_CASE("certified disk and distances")
{
    LinearODE2 e = from_hypergeometric({r("1/2"), r("1/3"), r("5/4")});
    Float d = nearest_singularity_distance(e, Rat(0));
    CHECK(d == 1);
    Float c = certifiable_radius(e, Rat(0));
    CHECK(c > Float("0.4"));
    CHECK(c < 1);

    // no finite singularities at all
    LinearODE2 free{RatFunc(), RatFunc(Rat(-1))};
    CHECK(nearest_singularity_distance(free, Rat(0)) ==
          std::numeric_limits<Float>::infinity());
}
