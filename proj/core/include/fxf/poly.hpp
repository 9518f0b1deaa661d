#pragma once

#include "fxf/rat.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fxf {

// Dense univariate polynomial over the rationals, coefficients stored lowest
// degree first. The zero polynomial is the empty coefficient list; otherwise
// the leading (last) coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> lowest_first);
    explicit Poly(std::vector<Rat> lowest_first);
    explicit Poly(const Rat& constant);

    static Poly x();                      // the monomial x
    static Poly linear(const Rat& root);  // x - root
    static Poly from_roots(std::span<const Rat> roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    Rat coeff(int k) const; // 0 outside the stored range
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Float eval_float(const Float& x) const;
    Poly shift(const Rat& s) const;    // p(x + s)
    Poly reversed() const;             // x^deg * p(1/x)
    Poly pow(unsigned k) const;
    Poly monic() const;                // leading coefficient scaled to 1

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> c_;
};

// Quotient and remainder of exact division over Q; throws DivisionByZero
// when b is the zero polynomial.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b); // monic, gcd(0,0) = 0
int root_multiplicity(const Poly& p, const Rat& r);

struct RootInfo {
    Rat root;
    int multiplicity = 0;
};

struct RationalRoots {
    std::vector<RootInfo> roots; // ascending by root value
    Poly residual;               // cofactor without rational roots
    int unaccounted = 0;         // deg(residual): possible non-rational roots
};

// All rational roots with multiplicities, via divisor enumeration on the
// content-normalised integer polynomial. Pre: p is not the zero polynomial.
RationalRoots rational_roots(const Poly& p);

} // namespace fxf
