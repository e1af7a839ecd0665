#pragma once

#include "mp/real.hpp"

namespace pi1 {

/// Complex scalar with arbitrary-precision components.
struct Cx {
    Real re, im;

    Cx() = default;
    explicit Cx(mpfr_prec_t prec) : re(prec), im(prec) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cx(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
    static Cx real(Real r) { Real z(r.prec()); return Cx(std::move(r), std::move(z)); }
    static Cx imag_unit(mpfr_prec_t prec) { return Cx(0.0, 1.0, prec); }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    Cx operator-() const { return {-re, -im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const Cx& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Cx operator*(const Real& s, const Cx& a) { return a * s; }
    friend Cx operator/(const Cx& a, const Real& s) { return {a.re / s, a.im / s}; }
    friend Cx operator*(const Cx& a, long n) { return {a.re * n, a.im * n}; }
    friend Cx operator*(long n, const Cx& a) { return a * n; }
    friend Cx operator/(const Cx& a, long n) { return {a.re / n, a.im / n}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(const Cx& o) { *this = *this * o; return *this; }

    Cx conj() const { return {re, -im}; }
    friend Cx conj(const Cx& z) { return z.conj(); }

    friend Real abs(const Cx& z) { return hypot(z.re, z.im); }
    /// Arg in (-pi, pi]; the boundary value +pi is returned for the
    /// negative real axis (im = +0).
    friend Real arg(const Cx& z) { return atan2(z.im, z.re); }

    std::string str(int digits) const { return re.str(digits) + (im.sign() < 0 ? "" : "+") + im.str(digits) + "i"; }
};

Cx cx_exp(const Cx& z);
Cx cx_log(const Cx& z);      // principal branch
Cx cx_sqrt(const Cx& z);     // principal branch
Cx cx_inv(const Cx& z);
Cx cx_powi(const Cx& z, long n);

} // namespace pi1
