#include "fxf/rat.hpp"
#include "fxf/errors.hpp"

#include <cmath>

namespace fxf {

namespace {

unsigned g_precision_bits = 0;

unsigned digits10_for_bits(unsigned bits)
{
    return static_cast<unsigned>(bits * 0.3010299956639812) + 3;
}

// One-time default so freshly linked code gets 128-bit floats without any
// explicit setup call.
struct PrecisionInit {
    PrecisionInit() { set_precision_bits(128); }
};
PrecisionInit g_precision_init;

} // namespace

void set_precision_bits(unsigned bits)
{
    if (bits < 64)
        bits = 64;
    g_precision_bits = bits;
    Float::default_precision(digits10_for_bits(bits));
}

unsigned precision_bits()
{
    if (g_precision_bits == 0)
        set_precision_bits(128);
    return g_precision_bits;
}

Float to_float(const Rat& r)
{
    Float out;
    mpfr_set_q(out.backend().data(), r.backend().data(), MPFR_RNDN);
    return out;
}

Float to_float(const Int& n)
{
    Float out;
    mpfr_set_z(out.backend().data(), n.backend().data(), MPFR_RNDN);
    return out;
}

Rat to_rat_exact(const Float& x)
{
    if (!mpfr_number_p(x.backend().data()))
        throw PoleEvaluation("cannot convert non-finite float to a rational");
    if (mpfr_zero_p(x.backend().data()))
        return Rat(0);
    mpz_t mant;
    mpz_init(mant);
    mpfr_exp_t e = mpfr_get_z_2exp(mant, x.backend().data());
    Int m;
    mpz_set(m.backend().data(), mant);
    mpz_clear(mant);
    Rat out(m);
    Int two(1);
    if (e >= 0) {
        two <<= static_cast<unsigned>(e);
        out *= Rat(two);
    } else {
        two <<= static_cast<unsigned>(-e);
        out /= Rat(two);
    }
    return out;
}

Rat rat_from_string(std::string_view s)
{
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t'))
            v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t'))
            v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty())
        throw ParseError("empty rational literal");

    auto parse_int = [&](std::string_view v) -> Int {
        v = trim(v);
        if (v.empty())
            throw ParseError("empty integer in rational literal");
        std::size_t i = (v[0] == '+' || v[0] == '-') ? 1 : 0;
        if (i == v.size())
            throw ParseError("sign without digits in rational literal");
        for (; i < v.size(); i++)
            if (v[i] < '0' || v[i] > '9')
                throw ParseError("invalid character in rational literal: '" +
                                 std::string(v) + "'");
        return Int(std::string(v));
    };

    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in rational literal");
    return Rat(num, den); // (num, den) constructor canonicalises
}

std::string rat_to_string(const Rat& r)
{
    Int den = denominator(r);
    if (den == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + den.str();
}

bool is_integer(const Rat& r)
{
    return denominator(r) == 1;
}

std::optional<Int> to_integer(const Rat& r)
{
    if (!is_integer(r))
        return std::nullopt;
    return numerator(r);
}

bool is_nonpositive_integer(const Rat& r)
{
    return is_integer(r) && numerator(r) <= 0;
}

std::optional<Rat> exact_sqrt(const Rat& r)
{
    if (r < 0)
        return std::nullopt;
    Int num = numerator(r);
    Int den = denominator(r);
    if (!mpz_perfect_square_p(num.backend().data()) ||
        !mpz_perfect_square_p(den.backend().data()))
        return std::nullopt;
    return Rat(sqrt(num), sqrt(den));
}

} // namespace fxf
