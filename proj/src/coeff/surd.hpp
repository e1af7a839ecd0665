#pragma once

#include "mp/real.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace pi1 {

using BigRational = boost::multiprecision::mpq_rational;

/// Exact number of the form q * 6^{-half_power/2} with q rational.
/// The perturbative coefficients live in this ring: the n-th one has
/// half_power = n, which the recursion preserves (product of orders m
/// and n+1-m has half_power n+1, and the 1/sqrt(6) in the linear term
/// raises it by one as well).
struct Surd6Rational {
    BigRational q;
    long half_power = 0;

    Surd6Rational() = default;
    Surd6Rational(BigRational qq, long hp) : q(std::move(qq)), half_power(hp) {}

    bool is_zero() const { return q == 0; }

    /// Split into a + b*sqrt(6) with a, b rational.
    BigRational rational_part() const {
        if (half_power % 2 != 0) return 0;
        return q / pow6(half_power / 2);
    }
    BigRational surd_part() const {
        if (half_power % 2 == 0) return 0;
        return q / pow6((half_power + 1) / 2);
    }

    Real to_real(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set_q(r.raw(), q.backend().data(), MPFR_RNDN);
        if (half_power != 0) {
            Real s = sqrt(Real(6.0, prec));
            Real p(1.0, prec);
            for (long i = 0; i < half_power; ++i) p *= s;
            r /= p;
        }
        return r;
    }

    std::string str() const {
        return q.str() + (half_power ? (" * 6^(-" + std::to_string(half_power) + "/2)") : "");
    }

private:
    static BigRational pow6(long k) {
        BigRational r = 1;
        for (long i = 0; i < k; ++i) r *= 6;
        return r;
    }
};

} // namespace pi1
