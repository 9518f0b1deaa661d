#pragma once

#include "fxf/ode.hpp"

#include <cstdint>
#include <random>

namespace fxf {

// Deterministic rational sampler for property sweeps. Bounded draws use
// modulo reduction so a given seed yields the same stream everywhere.
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed) : eng_(seed) {}

    long bounded(long lo, long hi) // inclusive
    {
        return lo + static_cast<long>(eng_() %
                                      static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat(long num_lo = -6, long num_hi = 6, long den_hi = 6)
    {
        return Rat(bounded(num_lo, num_hi), bounded(1, den_hi));
    }

    Rat nonzero_rat(long num_lo = -6, long num_hi = 6, long den_hi = 6)
    {
        while (true) {
            Rat r = rat(num_lo, num_hi, den_hi);
            if (r != 0)
                return r;
        }
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

enum class HeunSample {
    Generic,     // q/(alpha beta) away from {0, 1, d}
    QZero,       // q = 0
    QOverAbOne,  // q = alpha beta
    QOverAbD,    // q = alpha beta d
};

inline HeunParams sample_heun(RatSampler& s, HeunSample mode = HeunSample::Generic)
{
    while (true) {
        Rat ab = s.nonzero_rat();
        Rat gamma = s.rat();
        Rat delta = s.rat();
        Rat sum = s.rat();
        Rat epsilon = sum + 1 - gamma - delta;
        Rat d = s.nonzero_rat();
        if (d == 1 || abs(d) < Rat(1, 2))
            continue;
        Rat q;
        switch (mode) {
        case HeunSample::Generic:
            q = s.nonzero_rat();
            if (q / ab == 1 || q / ab == d)
                continue;
            break;
        case HeunSample::QZero:
            q = 0;
            break;
        case HeunSample::QOverAbOne:
            q = ab;
            break;
        case HeunSample::QOverAbD:
            q = ab * d;
            break;
        }
        return HeunParams(gamma, delta, epsilon, ab, sum, d, q);
    }
}

inline HGParams sample_hg(RatSampler& s, bool avoid_degenerate_c = true)
{
    while (true) {
        HGParams p{s.nonzero_rat(), s.nonzero_rat(), s.rat()};
        if (avoid_degenerate_c && (p.c == 0 || p.c == 1))
            continue;
        return p;
    }
}

} // namespace fxf
