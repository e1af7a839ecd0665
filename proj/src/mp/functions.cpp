#include "mp/functions.hpp"
#include "mp/error.hpp"

#include <cmath>

namespace pi1 {

Cx pow_principal(const Cx& z, const Real& alpha, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    if (z.is_zero()) {
        if (alpha.sign() > 0) return Cx(wp);
        throw DomainError("pow_principal: 0 raised to non-positive power");
    }
    if (z.im.is_zero() && z.re.sign() > 0) {
        return Cx(exp(alpha * log(z.re)), Real(wp));
    }
    Real lr = log(abs(z));
    Real th = arg(z);
    return cx_exp(Cx(alpha * lr, alpha * th));
}

Cx pow_principal(const Cx& z, double alpha, const PrecisionContext& ctx) {
    return pow_principal(z, Real(alpha, ctx.bits()), ctx);
}

Cx neg_x_power(const Cx& x, const Real& alpha, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    if (x.is_zero()) throw DomainError("neg_x_power: x = 0");
    Real th = arg(x) - Real::pi(wp);
    if (th <= -Real::pi(wp)) th += Real::pi(wp) * 2;
    Real lr = log(abs(x));
    if (th.is_zero()) return Cx(exp(alpha * lr), Real(wp));
    return cx_exp(Cx(alpha * lr, alpha * th));
}

Cx neg_x_power(const Cx& x, double alpha, const PrecisionContext& ctx) {
    return neg_x_power(x, Real(alpha, ctx.bits()), ctx);
}

// --------------------------------------------------------------- erfc ----

namespace detail {

static Cx at_prec(const Cx& z, mpfr_prec_t wp) {
    Cx w(wp);
    mpfr_set(w.re.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_set(w.im.raw(), z.im.raw(), MPFR_RNDN);
    return w;
}

// Maclaurin series; guard bits absorb the e^{|z|^2}-scale cancellation.
Cx erfc_series(const Cx& z0, const PrecisionContext& ctx) {
    double az2 = abs(z0).to_double();
    az2 *= az2;
    double rez2 = (z0.re * z0.re - z0.im * z0.im).to_double();
    long extra = (long)std::ceil(std::max(0.0, (rez2 + az2)) * 1.4427) + 32;
    mpfr_prec_t wp = ctx.bits() + extra;

    Cx z = at_prec(z0, wp);
    Cx z2 = z * z;
    Cx p = z;                       // (-1)^n z^{2n+1} / n!
    Cx sum = z;
    Real maxmag = abs(z);
    Real cut = Real(1.0, wp);
    mpfr_mul_2si(cut.raw(), cut.raw(), -(wp + 8), MPFR_RNDN);
    for (long n = 1; n < 100000; ++n) {
        p = p * z2 / (-n);
        Cx term = p / (2 * n + 1);
        sum += term;
        Real m = abs(p);
        if (m > maxmag) maxmag = m;
        if (m < cut * (maxmag + Real(1.0, wp))) break;
    }
    Real two_over_sqrtpi = Real(2.0, wp) / sqrt(Real::pi(wp));
    Cx r = Cx(1.0, 0.0, wp) - sum * two_over_sqrtpi;
    return at_prec(r, ctx.bits());
}

// Laplace continued fraction, Re z > 0.
Cx erfc_cf(const Cx& z0, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits() + 32;
    Cx z = at_prec(z0, wp);
    // modified Lentz on  1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
    Real tiny = Real(1.0, wp);
    mpfr_mul_2si(tiny.raw(), tiny.raw(), -(long)(2 * wp), MPFR_RNDN);
    Cx f = z, C = z, D(wp);
    Real cut = Real(1.0, wp);
    mpfr_mul_2si(cut.raw(), cut.raw(), -(wp + 4), MPFR_RNDN);
    for (long n = 1; n < 200000; ++n) {
        Real a = Real((double)n, wp) / 2;
        // b = z at every level
        D = Cx(a, Real(wp)) * D + z;
        if (D.is_zero()) D = Cx(tiny, Real(wp));
        D = cx_inv(D);
        C = z + Cx(a, Real(wp)) * cx_inv(C);
        if (C.is_zero()) C = Cx(tiny, Real(wp));
        Cx delta = C * D;
        f *= delta;
        if (abs(delta - Cx(1.0, 0.0, wp)) < cut) break;
    }
    Cx emz2 = cx_exp(-(z * z));
    Cx r = emz2 / sqrt(Real::pi(wp)) * cx_inv(f);
    return at_prec(r, ctx.bits());
}

// Asymptotic expansion, certified when |z|^2 >= (digits+guard) ln 10.
Cx erfc_asymptotic(const Cx& z0, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits() + 32;
    Cx z = at_prec(z0, wp);
    Cx z2 = z * z;
    Cx inv2z2 = cx_inv(z2 * Real(2.0, wp));
    Cx term(1.0, 0.0, wp), sum(1.0, 0.0, wp);
    Real cut = Real(1.0, wp);
    mpfr_mul_2si(cut.raw(), cut.raw(), -(wp + 4), MPFR_RNDN);
    Real prev = abs(term);
    for (long k = 1; k < 100000; ++k) {
        term = term * inv2z2 * (-(2 * k - 1));
        Real m = abs(term);
        if (m > prev) break;       // optimal truncation reached
        sum += term;
        prev = m;
        if (m < cut) break;
    }
    Cx r = cx_exp(-z2) * cx_inv(z * sqrt(Real::pi(wp))) * sum;
    return at_prec(r, ctx.bits());
}

} // namespace detail

Cx erfc_c(const Cx& z, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    double D = ctx.digits + ctx.guard;
    double az = abs(z).to_double();
    if (!z.is_finite()) throw OverflowError("erfc_c: non-finite argument");
    if (z.re.sign() < 0) {
        Cx r = erfc_c(-z, ctx);
        return Cx(2.0, 0.0, wp) - r;
    }
    double rez = z.re.to_double();
    if (az * az >= D * 2.302585) return detail::erfc_asymptotic(z, ctx);
    if (rez >= 1.5) {
        double iters = D * 2.302585 / (2.0 * 1.4142 * rez);
        if (iters * iters <= 40000.0) return detail::erfc_cf(z, ctx);
    }
    return detail::erfc_series(z, ctx);
}

// --------------------------------------------------------------- Airy ----

namespace detail {

std::pair<Cx, Cx> airy_series(const Cx& z0, const PrecisionContext& ctx) {
    double az = abs(z0).to_double();
    long extra = (long)std::ceil(1.3334 * std::pow(az, 1.5) * 1.4427) + 40;
    mpfr_prec_t wp = ctx.bits() + extra;

    Cx z = at_prec(z0, wp);
    Cx z3 = z * z * z;
    // f = sum a_k z^{3k},  g = sum b_k z^{3k+1},  f' and g' as their own series
    Cx fa(1.0, 0.0, wp), ga = z;
    Cx fda = z * z / 2, gda(1.0, 0.0, wp);
    Cx f = fa, g = ga, fp = fda, gp = gda;
    Real cut = Real(1.0, wp);
    mpfr_mul_2si(cut.raw(), cut.raw(), -(wp + 8), MPFR_RNDN);
    Real maxmag(1.0, wp);
    for (long k = 1; k < 100000; ++k) {
        fa = fa * z3 / ((3 * k) * (3 * k - 1));
        ga = ga * z3 / ((3 * k + 1) * (3 * k));
        if (k >= 2) fda = fda * z3 / ((3 * k - 3) * (3 * k - 1));
        gda = gda * z3 / ((3 * k - 2) * (3 * k));
        f += fa;
        g += ga;
        if (k >= 2) fp += fda;
        gp += gda;
        Real m = abs(fa) + abs(ga);
        if (m > maxmag) maxmag = m;
        if (m < cut * maxmag) break;
    }
    Real third = Real(1.0, wp) / 3;
    Real g13 = gamma_real(third);
    Real g23 = gamma_real(third * 2);
    Real c1 = Real(1.0, wp) / (pow(Real(3.0, wp), Real(2.0, wp) / 3) * g23); // Ai(0)
    Real c2 = -(Real(1.0, wp) / (pow(Real(3.0, wp), third) * g13));          // Ai'(0)
    Cx ai = Cx(c1, Real(wp)) * f + Cx(c2, Real(wp)) * g;
    Cx aip = Cx(c1, Real(wp)) * fp + Cx(c2, Real(wp)) * gp;
    return {at_prec(ai, ctx.bits()), at_prec(aip, ctx.bits())};
}

std::pair<Cx, Cx> airy_asymptotic(const Cx& z0, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits() + 32;
    PrecisionContext wctx(ctx.digits, ctx.guard + 12);
    Cx z = at_prec(z0, wp);
    double argz = arg(z).to_double();
    if (std::fabs(argz) > 2.0944)
        throw RangeError("airy_pair: asymptotic branch restricted to |arg z| <= 2*pi/3");
    Cx xi = pow_principal(z, Real(1.5, wp), wctx) * (Real(2.0, wp) / 3);
    double axi = abs(xi).to_double();
    if (2.0 * axi < (ctx.digits + 2) * 2.302585)
        throw RangeError("airy_pair: |z| beyond series cap but too small for certified asymptotics at this precision");
    Cx invxi = cx_inv(xi);
    Cx su(1.0, 0.0, wp), sv(1.0, 0.0, wp);
    Real uk(1.0, wp);
    Cx p(1.0, 0.0, wp);
    Real cut = Real(1.0, wp);
    mpfr_mul_2si(cut.raw(), cut.raw(), -(wp + 4), MPFR_RNDN);
    Real prev(1.0, wp);
    for (long k = 1; k < 100000; ++k) {
        uk = uk * ((6 * k - 5) * (6 * k - 3)) / (2 * k - 1) * (6 * k - 1) / (216 * k);
        Real vk = uk * (6 * k + 1) / (1 - 6 * k);
        p = p * invxi * (-1L);
        Cx tu = p * uk, tv = p * vk;
        Real m = abs(tu);
        if (m > prev) break;
        prev = m;
        su += tu;
        sv += tv;
        if (m < cut) break;
    }
    Cx z14 = pow_principal(z, Real(0.25, wp), wctx);
    Cx emxi = cx_exp(-xi);
    Real den = sqrt(Real::pi(wp)) * 2;
    Cx ai = emxi * cx_inv(z14) / den * su;
    Cx aip = -(emxi * z14) / den * sv;
    return {at_prec(ai, ctx.bits()), at_prec(aip, ctx.bits())};
}

} // namespace detail

std::pair<Cx, Cx> airy_pair(const Cx& z, const PrecisionContext& ctx, double cap) {
    if (!z.is_finite()) throw RangeError("airy_pair: non-finite argument");
    if (abs(z).to_double() <= cap) return detail::airy_series(z, ctx);
    return detail::airy_asymptotic(z, ctx);
}

Real gamma_half_int(long twice_arg, const PrecisionContext& ctx) {
    if (twice_arg < 1) throw DomainError("gamma_half_int: argument must be >= 1/2");
    mpfr_prec_t wp = ctx.bits();
    if (twice_arg % 2 == 0) {
        Real r(1.0, wp);
        for (long k = 2; k < twice_arg / 2; ++k) r = r * k;
        return r;                     // Gamma(n) = (n-1)!
    }
    Real r = sqrt(Real::pi(wp));      // Gamma(1/2)
    for (long k = 1; k < twice_arg; k += 2) {
        if (k == twice_arg) break;
        if (k + 2 > twice_arg) break;
        r = r * k / 2;                // Gamma(x+1) = x Gamma(x), x = k/2
    }
    return r;
}

} // namespace pi1
