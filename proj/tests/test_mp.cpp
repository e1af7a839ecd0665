#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mp/functions.hpp"
#include "mp/error.hpp"

#include <vector>

using namespace pi1;

namespace {

Real tol10(int digits, mpfr_prec_t prec) {
    return Real::pow10(-digits, prec);
}

bool close(const Cx& a, const Cx& b, const Real& tol) {
    return abs(a - b) < tol;
}

} // namespace

TEST_CASE("principal power on reference points") {
    PrecisionContext ctx(50);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(50, wp);

    // i^{1/2} = e^{i pi/4}
    Cx r = pow_principal(Cx::imag_unit(wp), Real(0.5, wp), ctx);
    Real s2inv = sqrt(Real(2.0, wp)) / 2;
    CHECK(close(r, Cx(s2inv, s2inv), tol));

    // (-4)^{1/2} = 2i (argument on the cut resolves to +pi)
    r = pow_principal(Cx(-4.0, 0.0, wp), Real(0.5, wp), ctx);
    CHECK(close(r, Cx(0.0, 2.0, wp), tol));

    // real positive fast path
    r = pow_principal(Cx(9.0, 0.0, wp), Real(0.5, wp), ctx);
    CHECK(close(r, Cx(3.0, 0.0, wp), tol));

    CHECK_THROWS_AS(pow_principal(Cx(wp), Real(-1.0, wp), ctx), DomainError);
    CHECK(pow_principal(Cx(wp), Real(2.0, wp), ctx).is_zero());
}

TEST_CASE("principal power additivity away from the cut") {
    PrecisionContext ctx(50);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(45, wp);
    std::vector<Cx> pts;
    pts.emplace_back(1.3, 0.7, wp);
    pts.emplace_back(2.0, -0.4, wp);
    pts.emplace_back(0.1, 1.9, wp);
    for (const auto& z : pts) {
        Cx a = pow_principal(z, Real(0.75, wp), ctx);
        Cx b = pow_principal(z, Real(0.5, wp), ctx) * pow_principal(z, Real(0.25, wp), ctx);
        CHECK(close(a, b, tol));
    }
}

TEST_CASE("negative-axis power convention") {
    PrecisionContext ctx(50);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(48, wp);

    // x = -8 on the negative axis: (-x)^{5/4} = 8^{5/4}, purely real
    Cx r = neg_x_power(Cx(-8.0, 0.0, wp), Real(1.25, wp), ctx);
    Real expect = pow(Real(8.0, wp), Real(1.25, wp));
    CHECK(close(r, Cx(expect, Real(wp)), tol));
    CHECK(r.im.is_zero());

    // continuity across the negative axis: phase of (-x) stays near 0
    Cx above = neg_x_power(Cx(-8.0, 1e-30, wp), Real(1.25, wp), ctx);
    Cx below = neg_x_power(Cx(-8.0, -1e-30, wp), Real(1.25, wp), ctx);
    CHECK(close(above, below, tol10(25, wp)));
    CHECK(close(above, r, tol10(25, wp)));

    // x = 8e^{i 0}: phase of (-x) lands on the cut, resolves to +pi
    r = neg_x_power(Cx(8.0, 0.0, wp), Real(0.5, wp), ctx);
    Cx expect2 = Cx(0.0, 1.0, wp) * Cx(sqrt(Real(8.0, wp)), Real(wp));
    CHECK(close(r, expect2, tol));

    CHECK_THROWS_AS(neg_x_power(Cx(wp), Real(0.5, wp), ctx), DomainError);
}

TEST_CASE("erfc: real line against known values") {
    PrecisionContext ctx(60);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(58, wp);

    // erfc(0) = 1
    CHECK(close(erfc_c(Cx(wp), ctx), Cx(1.0, 0.0, wp), tol));

    // erfc against mpfr's own real erfc at several scales
    for (double x : {0.25, 1.0, 3.0, 7.0, 13.0}) {
        Cx r = erfc_c(Cx(x, 0.0, wp), ctx);
        Real ref(wp);
        Real arg(x, wp);
        mpfr_erfc(ref.raw(), arg.raw(), MPFR_RNDN);
        CHECK(abs(r.re - ref) < tol * (abs(ref) + Real(1.0, wp)));
        CHECK(abs(r.im) < tol);
    }
}

TEST_CASE("erfc: branch agreement at z = 3") {
    // series and continued-fraction evaluations must agree to full precision
    PrecisionContext ctx(70);
    mpfr_prec_t wp = ctx.bits();
    Cx z(3.0, 0.0, wp);
    Cx a = detail::erfc_series(z, ctx);
    Cx b = detail::erfc_cf(z, ctx);
    CHECK(abs(a - b) < tol10(70, wp) * abs(a));
}

TEST_CASE("erfc: functional identity erfc(z) + erfc(-z) = 2 on a complex sample") {
    PrecisionContext ctx(50);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(44, wp);
    int n = 0;
    for (int i = -4; i <= 5; ++i) {
        for (int j = -4; j <= 5; ++j) {
            Cx z(0.47 * i + 0.013, 0.61 * j - 0.029, wp);
            Cx s = erfc_c(z, ctx) + erfc_c(-z, ctx);
            Real scale = abs(cx_exp(-(z * z))) + Real(1.0, wp);
            CHECK(abs(s - Cx(2.0, 0.0, wp)) < tol * scale);
            ++n;
        }
    }
    CHECK(n == 100);
}

TEST_CASE("erfc: conjugation symmetry off the real axis") {
    PrecisionContext ctx(50);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(45, wp);
    Cx z(1.2, 0.8, wp);
    Cx a = erfc_c(z, ctx);
    Cx b = erfc_c(conj(z), ctx);
    CHECK(close(conj(a), b, tol * (abs(a) + Real(1.0, wp))));
}

TEST_CASE("Airy: value and derivative at the origin") {
    PrecisionContext ctx(60);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(58, wp);
    auto [ai, aip] = airy_pair(Cx(wp), ctx);
    Real third = Real(1.0, wp) / 3;
    Real c1 = Real(1.0, wp) / (pow(Real(3.0, wp), Real(2.0, wp) / 3) * gamma_real(third * 2));
    Real c2 = -(Real(1.0, wp) / (pow(Real(3.0, wp), third) * gamma_real(third)));
    CHECK(abs(ai.re - c1) < tol);
    CHECK(abs(aip.re - c2) < tol);
    CHECK(ai.im.is_zero());
}

TEST_CASE("Airy: mpfr real-axis oracle") {
    PrecisionContext ctx(50);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(46, wp);
    for (double x : {-5.0, -1.0, 0.5, 2.0, 8.0}) {
        auto [ai, aip] = airy_pair(Cx(x, 0.0, wp), ctx);
        Real ref(wp);
        Real arg(x, wp);
        mpfr_ai(ref.raw(), arg.raw(), MPFR_RNDN);
        CHECK(abs(ai.re - ref) < tol * (abs(ref) + tol));
        CHECK(abs(ai.im) < tol);
        (void)aip;
    }
}

TEST_CASE("Airy: ODE residual w'' = z w via the connection identity") {
    // Ai''(z) = z Ai(z); check through the Wronskian-free recurrence:
    // differentiate numerically at high precision using the series pair
    PrecisionContext ctx(60);
    mpfr_prec_t wp = ctx.bits();
    Cx z(0.7, 0.3, wp);
    Real h = Real::pow10(-20, wp);
    auto [ai_p, d_p] = airy_pair(z + Cx(h, Real(wp)), ctx);
    auto [ai_m, d_m] = airy_pair(z - Cx(h, Real(wp)), ctx);
    auto [ai_0, d_0] = airy_pair(z, ctx);
    (void)d_0;
    // second derivative from the derivative pair: (Ai'(z+h)-Ai'(z-h))/2h
    Cx second = (d_p - d_m) / (h * 2);
    Cx expect = z * ai_0;
    CHECK(abs(second - expect) < tol10(18, wp));
    (void)ai_p;
    (void)ai_m;
}

TEST_CASE("Airy: rotation identity Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) = 0") {
    PrecisionContext ctx(50);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(44, wp);
    Real twopi3 = Real::pi(wp) * 2 / 3;
    Cx w(cos(twopi3), sin(twopi3));
    Cx w2 = w * w;
    for (double re : {0.4, -1.1, 2.3}) {
        for (double im : {0.0, 0.9, -1.7}) {
            Cx z(re, im, wp);
            auto [a0, d0] = airy_pair(z, ctx);
            auto [a1, d1] = airy_pair(w * z, ctx);
            auto [a2, d2] = airy_pair(w2 * z, ctx);
            Cx s = a0 + w * a1 + w2 * a2;
            Real scale = abs(a0) + abs(a1) + abs(a2) + Real(1.0, wp);
            CHECK(abs(s) < tol * scale);
            (void)d0; (void)d1; (void)d2;
        }
    }
}

TEST_CASE("Airy: asymptotic branch beyond the series cap") {
    PrecisionContext ctx(30, 8);
    mpfr_prec_t wp = ctx.bits();
    Cx z(40.0, 5.0, wp);
    auto [ai, aip] = airy_pair(z, ctx);
    // cross-check against the series forced at higher precision
    PrecisionContext hi(60);
    auto [ai_ref, aip_ref] = detail::airy_series(Cx(40.0, 5.0, hi.bits()), hi);
    CHECK(abs(ai - ai_ref) < tol10(28, wp) * abs(ai_ref));
    CHECK(abs(aip - aip_ref) < tol10(28, wp) * abs(aip_ref));
}

TEST_CASE("Airy: uncertifiable region raises") {
    PrecisionContext ctx(120);
    // |z| just above the cap: asymptotics cannot deliver 120 digits there
    CHECK_THROWS_AS(airy_pair(Cx(13.0, 0.0, ctx.bits()), ctx), RangeError);
}

TEST_CASE("half-integer gamma") {
    PrecisionContext ctx(50);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(48, wp);
    Real sp = sqrt(Real::pi(wp));
    CHECK(abs(gamma_half_int(1, ctx) - sp) < tol);                 // Gamma(1/2)
    CHECK(abs(gamma_half_int(2, ctx) - Real(1.0, wp)) < tol);      // Gamma(1)
    CHECK(abs(gamma_half_int(7, ctx) - sp * 15 / 8) < tol);        // Gamma(7/2)
    CHECK(abs(gamma_half_int(8, ctx) - Real(6.0, wp)) < tol);      // Gamma(4)
    CHECK_THROWS_AS(gamma_half_int(0, ctx), DomainError);
}

TEST_CASE("exp/log round trip at high precision") {
    PrecisionContext ctx(100);
    mpfr_prec_t wp = ctx.bits();
    Real tol = tol10(96, wp);
    Cx z(0.8, -2.3, wp);
    Cx back = cx_exp(cx_log(z));
    CHECK(abs(back - z) < tol);
}

TEST_CASE("precision scaling: results refine monotonically") {
    Cx z64(1.7, 0.9, PrecisionContext(150).bits());
    Cx ref = erfc_c(z64, PrecisionContext(150));
    for (int d : {20, 40, 80}) {
        PrecisionContext ctx(d);
        Cx z(1.7, 0.9, ctx.bits());
        Cx r = erfc_c(z, ctx);
        CHECK(abs(r - ref) < Real::pow10(-d, PrecisionContext(150).bits()) * abs(ref) * 100);
    }
}
