#pragma once

#include <mpfr.h>
#include <string>
#include <utility>
#include <stdexcept>

#include "mp/context.hpp"

namespace pi1 {

/// Arbitrary-precision real number, a thin RAII wrapper over mpfr_t.
/// Every value carries its own precision; binary operations compute at
/// the larger precision of the two operands.  Rounding is to nearest.
class Real {
public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(long n, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, n, MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real from_string(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("Real::from_string: cannot parse '" + s + "'");
        return r;
    }
    /// p/q at the given precision.
    static Real ratio(long p, long q, mpfr_prec_t prec) {
        Real r(p, prec); Real d(q, prec); return r / d;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend Real operator+(const Real& a, const Real& b) { Real r(pmax(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r(pmax(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r(pmax(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r(pmax(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real operator*(const Real& a, long n) { Real r(a.prec()); mpfr_mul_si(r.v_, a.v_, n, MPFR_RNDN); return r; }
    friend Real operator*(long n, const Real& a) { return a * n; }
    friend Real operator/(const Real& a, long n) { Real r(a.prec()); mpfr_div_si(r.v_, a.v_, n, MPFR_RNDN); return r; }
    Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend Real abs(const Real& a) { Real r(a.prec()); mpfr_abs(r.v_, a.raw(), MPFR_RNDN); return r; }
    friend Real sqrt(const Real& a) { Real r(a.prec()); mpfr_sqrt(r.v_, a.raw(), MPFR_RNDN); return r; }
    friend Real exp(const Real& a) { Real r(a.prec()); mpfr_exp(r.v_, a.raw(), MPFR_RNDN); return r; }
    friend Real log(const Real& a) { Real r(a.prec()); mpfr_log(r.v_, a.raw(), MPFR_RNDN); return r; }
    friend Real sin(const Real& a) { Real r(a.prec()); mpfr_sin(r.v_, a.raw(), MPFR_RNDN); return r; }
    friend Real cos(const Real& a) { Real r(a.prec()); mpfr_cos(r.v_, a.raw(), MPFR_RNDN); return r; }
    friend Real atan2(const Real& y, const Real& x) { Real r(pmax(y, x)); mpfr_atan2(r.v_, y.raw(), x.raw(), MPFR_RNDN); return r; }
    friend Real pow(const Real& a, const Real& b) { Real r(pmax(a, b)); mpfr_pow(r.v_, a.raw(), b.raw(), MPFR_RNDN); return r; }
    friend Real hypot(const Real& a, const Real& b) { Real r(pmax(a, b)); mpfr_hypot(r.v_, a.raw(), b.raw(), MPFR_RNDN); return r; }
    friend Real gamma_real(const Real& a) { Real r(a.prec()); mpfr_gamma(r.v_, a.raw(), MPFR_RNDN); return r; }

    /// 10^{-k} at this value's precision.
    static Real pow10(long k, mpfr_prec_t prec) {
        Real r(prec); mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, k, MPFR_RNDN); return r;
    }

private:
    static mpfr_prec_t pmax(const Real& a, const Real& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

} // namespace pi1
