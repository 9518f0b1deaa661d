#include "fxf/poly.hpp"
#include "fxf/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fxf {

Poly::Poly(std::initializer_list<Rat> lowest_first)
    : c_(lowest_first)
{
    normalize();
}

Poly::Poly(std::vector<Rat> lowest_first)
    : c_(std::move(lowest_first))
{
    normalize();
}

Poly::Poly(const Rat& constant)
{
    if (constant != 0)
        c_.push_back(constant);
}

void Poly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::x()
{
    return Poly{Rat(0), Rat(1)};
}

Poly Poly::linear(const Rat& root)
{
    return Poly{-root, Rat(1)};
}

Poly Poly::from_roots(std::span<const Rat> roots)
{
    Poly p{Rat(1)};
    for (const Rat& r : roots)
        p *= linear(r);
    return p;
}

bool Poly::is_one() const
{
    return c_.size() == 1 && c_[0] == 1;
}

Rat Poly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return Rat(0);
    return c_[static_cast<std::size_t>(k)];
}

const Rat& Poly::leading() const
{
    if (c_.empty())
        throw DivisionByZero("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (Rat& v : out.c_)
        v = -v;
    return out;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); i++)
        c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); i++)
        c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); i++)
        for (std::size_t j = 0; j < o.c_.size(); j++)
            out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rat& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (Rat& v : c_)
        v *= s;
    return *this;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1)
        return Poly();
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); i++)
        out[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(out));
}

Rat Poly::eval(const Rat& x) const
{
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Float Poly::eval_float(const Float& x) const
{
    Float acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + to_float(*it);
    return acc;
}

Poly Poly::shift(const Rat& s) const
{
    // Horner form of p(x + s)
    Poly out;
    Poly lin{s, Rat(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        out *= lin;
        out += Poly(*it);
    }
    return out;
}

Poly Poly::reversed() const
{
    std::vector<Rat> out(c_.rbegin(), c_.rend());
    return Poly(std::move(out));
}

Poly Poly::pow(unsigned k) const
{
    Poly acc{Rat(1)};
    Poly base = *this;
    while (k) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Poly Poly::monic() const
{
    if (c_.empty())
        return *this;
    Poly out = *this;
    Rat inv = Rat(1) / c_.back();
    for (Rat& v : out.c_)
        v *= inv;
    return out;
}

std::string Poly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; k--) {
        const Rat v = coeff(k);
        if (v == 0)
            continue;
        if (!first)
            os << (v > 0 ? " + " : " - ");
        else if (v < 0)
            os << "-";
        Rat a = abs(v);
        if (a != 1 || k == 0)
            os << rat_to_string(a);
        if (k > 0) {
            if (a != 1)
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly(), a};

    std::vector<Rat> rem(a.coeffs());
    const int db = b.degree();
    const Rat lead = b.leading();
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
    for (int k = a.degree() - db; k >= 0; k--) {
        Rat q = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= db; j++)
            rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = divrem(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.is_zero() ? u : u.monic();
}

int root_multiplicity(const Poly& p, const Rat& r)
{
    if (p.is_zero())
        throw DivisionByZero("root multiplicity in the zero polynomial");
    int mult = 0;
    Poly q = p;
    Poly lin = Poly::linear(r);
    while (true) {
        auto [d, rem] = divrem(q, lin);
        if (!rem.is_zero())
            break;
        mult++;
        q = std::move(d);
        if (q.is_zero())
            break;
    }
    return mult;
}

namespace {

void factor_into(Int n, std::map<Int, int>& out)
{
    // trial division by 2, 3, then 6k±1 up to 10^5; remainder handled with
    // Miller-Rabin + Pollard-Brent
    auto add = [&out](const Int& p, int e = 1) { out[p] += e; };
    if (n <= 1)
        return;
    for (unsigned long d : {2ul, 3ul}) {
        while (mpz_divisible_ui_p(n.backend().data(), d)) {
            add(Int(d));
            n /= d;
        }
    }
    for (unsigned long d = 5; d <= 100000ul && Int(d) * d <= n; d += 6) {
        for (unsigned long e : {d, d + 2}) {
            while (mpz_divisible_ui_p(n.backend().data(), e)) {
                add(Int(e));
                n /= e;
            }
        }
    }
    if (n == 1)
        return;
    if (Int(100000) * 100000 > n || mpz_probab_prime_p(n.backend().data(), 32)) {
        add(n);
        return;
    }

    // Pollard rho, deterministic polynomial sweep
    auto pollard = [](const Int& m) -> Int {
        for (Int c(1);; c++) {
            Int x(2), y(2), d(1);
            auto f = [&](const Int& v) { return (v * v + c) % m; };
            do {
                x = f(x);
                y = f(f(y));
                Int diff = x > y ? x - y : y - x;
                if (diff == 0) {
                    d = m; // cycle hit, retry with the next c
                    break;
                }
                d = boost::multiprecision::gcd(diff, m);
            } while (d == 1);
            if (d != m)
                return d;
        }
    };
    Int d = pollard(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Int> divisors(const Int& n)
{
    std::map<Int, int> factors;
    factor_into(abs(n), factors);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factors) {
        std::size_t sz = divs.size();
        Int pk(1);
        for (int k = 1; k <= e; k++) {
            pk *= p;
            for (std::size_t i = 0; i < sz; i++)
                divs.push_back(divs[i] * pk);
        }
        if (divs.size() > (1u << 20))
            throw Error("DivisorOverflow", "too many divisors while searching rational roots");
    }
    return divs;
}

} // namespace

RationalRoots rational_roots(const Poly& p)
{
    if (p.is_zero())
        throw DivisionByZero("rational roots of the zero polynomial");

    RationalRoots out;
    Poly q = p;

    // roots at zero
    int zero_mult = 0;
    while (!q.is_zero() && q.coeff(0) == 0) {
        q = divrem(q, Poly::x()).first;
        zero_mult++;
    }
    if (zero_mult > 0)
        out.roots.push_back({Rat(0), zero_mult});

    if (q.degree() >= 1) {
        // content-normalise to a primitive integer polynomial
        Int den_lcm(1);
        for (const Rat& c : q.coeffs())
            den_lcm = lcm(den_lcm, denominator(c));
        std::vector<Int> zc;
        zc.reserve(q.coeffs().size());
        Int content(0);
        for (const Rat& c : q.coeffs()) {
            Int v = numerator(c * Rat(den_lcm));
            content = boost::multiprecision::gcd(content, v);
            zc.push_back(v);
        }
        if (content > 1)
            for (Int& v : zc)
                v /= content;

        std::vector<Int> ps = divisors(zc.front());
        std::vector<Int> qs = divisors(zc.back());
        std::vector<Rat> candidates;
        for (const Int& num : ps)
            for (const Int& den : qs) {
                Rat c(num, den);
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());

        for (const Rat& cand : candidates) {
            if (q.degree() < 1)
                break;
            if (q.eval(cand) != 0)
                continue;
            int mult = 0;
            Poly lin = Poly::linear(cand);
            while (true) {
                auto [d, rem] = divrem(q, lin);
                if (!rem.is_zero())
                    break;
                q = std::move(d);
                mult++;
            }
            out.roots.push_back({cand, mult});
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootInfo& a, const RootInfo& b) { return a.root < b.root; });
    out.residual = q;
    out.unaccounted = std::max(q.degree(), 0);
    return out;
}

} // namespace fxf
