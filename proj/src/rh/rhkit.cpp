#include "rh/rhkit.hpp"

#include "mp/error.hpp"
#include "mp/functions.hpp"

#include <algorithm>
#include <cmath>

namespace pi1 {

namespace {

Real rat_to_real(const BigRational& q, mpfr_prec_t wp) {
    Real r(wp);
    mpfr_set_q(r.raw(), q.backend().data(), MPFR_RNDN);
    return r;
}

Cx unit(const Real& angle) {
    return Cx(cos(angle), sin(angle));
}

Real tol10(const PrecisionContext& ctx, int drop) {
    return Real::pow10(-(ctx.digits - drop), ctx.bits());
}

// u_k, v_k of the Airy asymptotic series, exact.
void airy_uk_vk(long K, std::vector<BigRational>& u, std::vector<BigRational>& v) {
    u.assign(K + 1, 1);
    v.assign(K + 1, 1);
    for (long k = 1; k <= K; ++k) {
        u[k] = u[k - 1] * (6 * k - 1) * (6 * k - 3) * (6 * k - 5)
             / (BigRational(216) * k * (2 * k - 1));
        v[k] = u[k] * (6 * k + 1) / (1 - 6 * k);
    }
}

long long binom(long n, long r) {
    long long b = 1;
    for (long i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

} // namespace

// ------------------------------------------------------------- Matrix2 ----

Matrix2 Matrix2::identity(mpfr_prec_t prec) {
    Matrix2 m(prec);
    m.a = Cx(1.0, 0.0, prec);
    m.d = Cx(1.0, 0.0, prec);
    return m;
}

Matrix2 Matrix2::inverse() const {
    Cx dt = det();
    if (abs(dt).is_zero()) throw DegeneracyError("Matrix2::inverse: singular");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Real Matrix2::norm() const {
    Real n = abs(a);
    for (const Cx* e : {&b, &c, &d}) { Real t = abs(*e); if (t > n) n = t; }
    return n;
}

long LaurentMatrix2::pole_order() const {
    for (const auto& [j, m] : terms)
        if (j < 0 && m.norm().sign() != 0) return -j;
    return 0;
}

Matrix2 LaurentMatrix2::eval(const Cx& lambda) const {
    Cx dz = lambda - center;
    Matrix2 acc(dz.prec());
    for (const auto& [j, m] : terms) {
        Cx p = cx_powi(dz, j);
        acc = acc + (p * m);
    }
    return acc;
}

// ------------------------------------------------------------ GContext ----

GContext make_gcontext(const Real& phi, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    Real pi = Real::pi(wp);
    Real ph(wp);
    mpfr_set(ph.raw(), phi.raw(), MPFR_RNDN);

    GContext gc;
    gc.prec = ctx;
    gc.phi = ph;
    Real half = (ph - pi) / 2;
    gc.lambda0 = unit(half) / sqrt(Real(6.0, wp));
    Cx l52 = pow_principal(gc.lambda0, 2.5, ctx);
    Real k = Real(24.0, wp) * sqrt(Real(3.0, wp)) / 5;
    gc.g0 = Cx(-(k * l52.re), -(k * l52.im));

    Real tol = tol10(ctx, 5);
    Cx at_branch = g_eval(gc, -(gc.lambda0 * 2) + Cx(0.0, 0.0, wp));
    if (abs(at_branch) > tol)
        throw ConsistencyError("make_gcontext: g(-2 lambda0) != 0");

    // 2 g0 = -A e^{5i(phi-pi)/4}, A = 2^{11/4} 3^{1/4} / 5
    Real A = pow(Real(2.0, wp), Real(2.75, wp)) * pow(Real(3.0, wp), Real(0.25, wp)) / 5;
    Cx rhs = -(A * unit((ph - pi) * Real(1.25, wp)));
    if (abs(gc.g0 * 2 - rhs) > tol)
        throw ConsistencyError("make_gcontext: 2 g0 != -A e^{5i(phi-pi)/4}");
    return gc;
}

// -------------------------------------------------------------- Stokes ----

StokesData stokes_closure(const Cx& s0, const Cx& s1, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    Cx i = Cx::imag_unit(wp);
    Cx one(1.0, 0.0, wp);

    Cx s3 = i * (one + s0 * s1);
    Cx den = one + s0 * s1;
    if (abs(den) < tol10(ctx, 5))
        throw DataError("stokes_closure: degenerate data, 1 + s0 s1 = 0");
    Cx s2 = (i - s0) / den;
    Cx s4 = i * (one + s1 * s2);

    StokesData sd;
    sd.s = {s0, s1, s2, s3, s4};

    Real tol = tol10(ctx, 5);
    for (long k = 0; k < 5; ++k) {
        Cx r = one + sd.at(k) * sd.at(k + 1) + i * sd.at(k + 3);
        if (abs(r) > tol) throw DataError("stokes_closure: cyclic constraint violated");
    }
    if (abs(s0) < tol && abs(s1 + s4 - i) > tol)
        throw DataError("stokes_closure: s1 + s_{-1} != i at s0 = 0");
    return sd;
}

Real jump_factorization_check(const StokesData& sd, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    if (abs(sd.at(0)) > tol10(ctx, 5))
        throw DataError("jump_factorization_check: needs s0 = 0 data");
    Cx one(1.0, 0.0, wp), zero(wp), i = Cx::imag_unit(wp);
    Matrix2 S1{one, sd.at(1), zero, one};
    Matrix2 Sm1{one, sd.at(-1), zero, one};
    Matrix2 T{one, i, zero, one};
    return (S1 - Sm1.inverse() * T).norm();
}

// ------------------------------------------------------------ g, theta ----

Cx g_eval(const GContext& gc, const Cx& lambda) {
    Cx m = lambda + gc.lambda0 * 2;
    if (m.im.is_zero() && m.re.sign() < 0)
        throw BranchError("g_eval: lambda on the branch cut");
    Cx m32 = pow_principal(m, 1.5, gc.prec);
    return m32 * (m * Real::ratio(4, 5, gc.prec.bits()) - gc.lambda0 * 4);
}

Cx g_prime(const GContext& gc, const Cx& lambda) {
    Cx m = lambda + gc.lambda0 * 2;
    if (m.im.is_zero() && m.re.sign() < 0)
        throw BranchError("g_prime: lambda on the branch cut");
    return pow_principal(m, 0.5, gc.prec) * (lambda - gc.lambda0) * 2;
}

Cx theta_eval(const Real& phi, const Cx& lambda, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    Cx l12 = pow_principal(lambda, 0.5, ctx);
    Cx l52 = l12 * lambda * lambda;
    return l52 * Real::ratio(4, 5, wp) + unit(Real(phi) * Real(1.0, wp)) * l12;
}

StationaryPoints stationary_points(const Real& phi, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    Real pi = Real::pi(wp);
    Real ph(wp);
    mpfr_set(ph.raw(), phi.raw(), MPFR_RNDN);
    Cx e = unit((ph - pi) / 2);

    StationaryPoints sp;
    sp.theta_plus = e / 2;
    sp.theta_minus = -(e / 2);
    sp.lambda0 = e / sqrt(Real(6.0, wp));

    // stationarity of g, checked by central differences at doubled digits
    PrecisionContext hi(ctx.digits * 3, ctx.guard);
    GContext gh = make_gcontext(ph, hi);
    Real tol = tol10(ctx, 5);
    {
        // smooth point: central difference, error O(h^2)
        Real h = Real::pow10(-(ctx.digits / 2), hi.bits());
        Cx step = Cx(h, Real(hi.bits())) * Cx(0.6, 0.8, hi.bits());
        Cx fd = (g_eval(gh, gh.lambda0 + step) - g_eval(gh, gh.lambda0 - step))
              / (step * 2);
        if (abs(fd) > tol)
            throw ConsistencyError("stationary_points: g' does not vanish at lambda0");
    }
    {
        // g is only C^1 at -2 lambda0 (3/2-power); use the one-sided slope,
        // which decays like h^{1/2}
        Real h = Real::pow10(-2 * ctx.digits, hi.bits());
        Cx p = -(gh.lambda0 * 2);
        Cx step = Cx(h, Real(hi.bits())) * Cx(0.6, 0.8, hi.bits());
        Cx slope = (g_eval(gh, p + step) - g_eval(gh, p)) / step;
        if (abs(slope) > tol)
            throw ConsistencyError("stationary_points: g' does not vanish at -2 lambda0");
    }
    return sp;
}

// ----------------------------------------------------------- landscape ----

LandscapeRaster landscape_raster(const GContext& gc, double re0, double re1,
                                 double im0, double im1, long nx, long ny) {
    if (nx < 2 || ny < 2) throw DomainError("landscape_raster: need nx, ny >= 2");
    mpfr_prec_t wp = gc.prec.bits();
    LandscapeRaster r;
    r.nx = nx; r.ny = ny;
    r.re0 = re0; r.re1 = re1; r.im0 = im0; r.im1 = im1;
    r.sign.resize(nx * ny, 0);
    for (long j = 0; j < ny; ++j) {
        double y = im0 + (im1 - im0) * j / (ny - 1);
        for (long i = 0; i < nx; ++i) {
            double x = re0 + (re1 - re0) * i / (nx - 1);
            int s = 0;
            try {
                s = g_eval(gc, Cx(x, y, wp)).re.sign();
            } catch (const BranchError&) {
                s = 0;  // on the cut: left unclassified
            }
            r.sign[j * nx + i] = s;
        }
    }
    return r;
}

// ------------------------------------------------------- steepest path ----

std::vector<Cx> steepest_path(const GContext& gc, const Cx& start, int branch,
                              long max_steps) {
    mpfr_prec_t wp = gc.prec.bits();
    Real al0 = abs(gc.lambda0);
    Cx l0 = gc.lambda0;
    Cx m2l0 = -(l0 * 2);

    // local model g - g(start) ~ c (lambda - start)^p at the stationary point
    double p;
    Cx c(wp);
    if (abs(start - l0) < al0 / 10) {
        p = 2.0;
        c = pow_principal(l0 * 3, 0.5, gc.prec);  // g''(lambda0)/2
    } else if (abs(start - m2l0) < al0 / 10) {
        p = 1.5;
        c = -(l0 * 4);
    } else {
        throw DomainError("steepest_path: start is not a stationary point");
    }

    // rays of constant Im g out of the start point: arg d = (k pi - arg c)/p
    Real pi = Real::pi(wp);
    Real argc = arg(c);
    std::vector<Real> rays;
    for (long k = -4; k <= 4; ++k) {
        Real a = (Real((double)k, wp) * pi - argc) / Real(p, wp);
        if (a > -pi && a <= pi) rays.push_back(a);
    }
    std::sort(rays.begin(), rays.end(), [](const Real& x, const Real& y) { return x < y; });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [&](const Real& x, const Real& y) {
                               return abs(x - y) < Real(1e-12, wp);
                           }),
               rays.end());
    if (branch < 0 || branch >= (long)rays.size())
        throw DomainError("steepest_path: branch out of range");

    Real step = al0 / 64;
    Real stop = al0 * 8;
    Real level = g_eval(gc, start).im;
    Real tol = tol10(gc.prec, 2);

    auto correct = [&](Cx pt) -> Cx {
        for (int it = 0; it < 60; ++it) {
            Cx gpn = g_prime(gc, pt);
            Real a2 = abs(gpn) * abs(gpn);
            Real e = g_eval(gc, pt).im - level;
            if (abs(e) <= tol) return pt;
            // move perpendicular to the level line: i conj(g')/|g'|^2
            pt = pt - Cx(Real(a2.prec()), e) * conj(gpn) / a2;
        }
        throw TracingError("steepest_path: corrector did not converge");
    };

    Cx dir0 = unit(rays[branch]);
    Cx lam = correct(start + dir0 * step);
    std::vector<Cx> poly{start, lam};

    // orientation by continuity with the previous step, so the trace can pass
    // through another stationary point instead of bouncing off it
    Cx prev_dir = dir0;
    for (long n = 0; n < max_steps; ++n) {
        Cx gp = g_prime(gc, lam);
        Real agp = abs(gp);
        Cx d = prev_dir;  // when exactly on a stationary point, go straight through
        if (agp >= tol) {
            d = conj(gp) / agp;
            if ((d.re * prev_dir.re + d.im * prev_dir.im).sign() < 0) d = -d;
        }
        lam = correct(lam + d * step);
        prev_dir = d;
        poly.push_back(lam);
        if (abs(lam - start) > stop) break;
    }

    // Re g must be monotone along the trace, except that the direction may
    // reverse where the trace runs through the other stationary point
    Real prev = g_eval(gc, poly.front()).re;
    Real second = g_eval(gc, poly[1]).re;
    int mono = (second - prev).sign();
    Real slack = tol10(gc.prec, 8);
    Real near_sp = step * 3;
    for (size_t i = 1; i < poly.size(); ++i) {
        Real cur = g_eval(gc, poly[i]).re;
        Real diff = cur - prev;
        if (mono >= 0 ? diff < -slack : diff > slack) {
            if (abs(poly[i] - l0) < near_sp || abs(poly[i] - m2l0) < near_sp)
                mono = -mono;
            else
                throw TracingError("steepest_path: Re g not monotone");
        }
        prev = cur;
    }
    return poly;
}

// ---------------------------------------------------------- conformal f ----

Cx conformal_f(const GContext& gc, const Cx& lambda) {
    Cx m = lambda + gc.lambda0 * 2;
    Cx w = gc.lambda0 * 6 - m * Real::ratio(6, 5, gc.prec.bits());
    return m * pow_principal(w, Real::ratio(2, 3, gc.prec.bits()), gc.prec);
}

// ----------------------------------------------------------- Airy model ----

Matrix2 airy_model(const Cx& zeta, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    Real pi = Real::pi(wp);
    Real a = arg(zeta);
    Real twothirds = pi * 2 / 3;
    if (a.is_zero() || a == twothirds || a == -twothirds || a == pi)
        throw DomainError("airy_model: zeta on a jump ray, pick a side");

    // the series/asymptotic switchover must leave no uncertified gap
    double cap = std::pow(0.75 * (ctx.digits + 2) * 2.302585092994046, 2.0 / 3.0) + 1.0;
    if (cap < 12.0) cap = 12.0;

    Cx om = unit(twothirds);
    Cx om2 = om * om;
    auto [ai0, aip0] = airy_pair(zeta, ctx, cap);
    auto [ai1, aip1] = airy_pair(om * zeta, ctx, cap);
    auto [ai2, aip2] = airy_pair(om2 * zeta, ctx, cap);
    Cx y0 = ai0,        y0p = aip0;
    Cx y1 = om * ai1,   y1p = om2 * aip1;
    Cx y2 = om2 * ai2,  y2p = om * aip2;

    if (a > Real(0.0, wp) && a < twothirds)  return {y0, -y2, y0p, -y2p};
    if (a > twothirds)                       return {-y1, -y2, -y1p, -y2p};
    if (a < -twothirds)                      return {-y2, y1, -y2p, y1p};
    return {y0, y1, y0p, y1p};
}

std::vector<AiryCoeff> airy_asymptotic_coeffs(long K, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    std::vector<BigRational> u, v;
    airy_uk_vk(K, u, v);

    std::vector<AiryCoeff> out;
    Real threehalf_k(1.0, wp);
    for (long k = 0; k <= K; ++k) {
        AiryCoeff ac;
        ac.u = u[k];
        ac.v = v[k];
        Real up = rat_to_real(u[k] + v[k], wp);
        Real um = rat_to_real(u[k] - v[k], wp);
        Real pref = threehalf_k / 2;
        int psgn = (k % 2 == 0) ? 1 : -1;
        ac.A = Matrix2{Cx(pref * up * psgn, Real(wp)),
                       Cx(Real(wp), pref * um),
                       Cx(Real(wp), -(pref * um * psgn)),
                       Cx(pref * up, Real(wp))};
        out.push_back(std::move(ac));
        threehalf_k *= Real(1.5, wp);
    }
    return out;
}

// ----------------------------------------------------------- erf model ----

Matrix2 erf_model(const Cx& xi, const Cx& s_minus1, const PrecisionContext& ctx,
                  int side) {
    mpfr_prec_t wp = ctx.bits();
    if (side == 0) side = (xi.re.sign() < 0) ? -1 : 1;

    Cx xi2 = xi * xi;
    Cx epos = cx_exp(xi2);
    Cx eneg = cx_exp(-xi2);
    Real sq2 = sqrt(Real(2.0, wp));

    Cx b(wp);
    if (side > 0)
        b = (s_minus1 * epos * erfc_c(xi * sq2, ctx)) / 2;
    else
        b = -((s_minus1 * epos * erfc_c(-(xi * sq2), ctx)) / 2);

    return {epos, b, Cx(wp), eneg};
}

// -------------------------------------------------------- Delta_k data ----

Matrix2 delta_eval(const GContext& gc, long k, const Cx& lambda) {
    if (k < 1) throw DomainError("delta_eval: k >= 1");
    mpfr_prec_t wp = gc.prec.bits();
    std::vector<BigRational> u, v;
    airy_uk_vk(k, u, v);

    Cx m = lambda + gc.lambda0 * 2;
    Cx mh = pow_principal(m, 0.5, gc.prec);
    Cx w = gc.lambda0 * 6 - m * Real::ratio(6, 5, wp);
    Cx base = mh * mh * mh * w;  // m^{3/2} (6 l0 - 6m/5), one branch of f^{3/2}
    Cx denom = cx_powi(base, k);

    Real pref(1.0, wp);
    for (long i = 0; i < k; ++i) pref *= Real(1.5, wp);
    Cx scale = Cx(pref, Real(wp)) / denom;
    Real uk = rat_to_real(u[k], wp), vk = rat_to_real(v[k], wp);

    if (k % 2 == 1)
        return {Cx(wp), -(scale * mh * vk),
                -(scale * uk / mh), Cx(wp)};
    return {scale * vk, Cx(wp), Cx(wp), scale * uk};
}

LaurentMatrix2 delta_laurent(const GContext& gc, long k, long max_order) {
    if (k < 1) throw DomainError("delta_laurent: k >= 1");
    mpfr_prec_t wp = gc.prec.bits();
    std::vector<BigRational> u, v;
    airy_uk_vk(k, u, v);

    Real pref(1.0, wp);
    for (long i = 0; i < k; ++i) pref *= Real(1.5, wp);
    Cx l0k = cx_powi(gc.lambda0 * 6, k);
    Cx inv5l0 = cx_inv(gc.lambda0 * 5);

    // (6 l0 - 6m/5)^{-k} = (6 l0)^{-k} sum_i C(k+i-1, i) (m / (5 l0))^i
    auto series_coeff = [&](long i) -> Cx {
        Cx c = cx_powi(inv5l0, i) / l0k;
        return c * (long)binom(k + i - 1, i);
    };

    LaurentMatrix2 lm;
    lm.center = -(gc.lambda0 * 2);
    if (k % 2 == 1) {
        long off12 = (3 * k - 1) / 2, off21 = (3 * k + 1) / 2;
        Real uk = rat_to_real(u[k], wp), vk = rat_to_real(v[k], wp);
        for (long j = -off21; j <= max_order; ++j) {
            Matrix2 t(wp);
            if (j + off12 >= 0) t.b = -(series_coeff(j + off12) * (pref * vk));
            if (j + off21 >= 0) t.c = -(series_coeff(j + off21) * (pref * uk));
            lm.terms[j] = t;
        }
    } else {
        long off = 3 * k / 2;
        Real uk = rat_to_real(u[k], wp), vk = rat_to_real(v[k], wp);
        for (long j = -off; j <= max_order; ++j) {
            Matrix2 t(wp);
            Cx sc = series_coeff(j + off) * pref;
            t.a = sc * vk;
            t.d = sc * uk;
            lm.terms[j] = t;
        }
    }
    return lm;
}

// ------------------------------------------------------ Delta-hat data ----

Matrix2 delta_hat_eval(const GContext& gc, const Cx& s_minus1, const Cx& lambda) {
    mpfr_prec_t wp = gc.prec.bits();
    Cx b0 = s_minus1 / (pow(Real(2.0, wp), Real(1.5, wp)) * sqrt(Real::pi(wp)));
    Cx m = lambda + gc.lambda0 * 2;
    Cx mh = pow_principal(m, 0.5, gc.prec);
    Cx dl = lambda - gc.lambda0;
    // branch of (g - g0)^{1/2} analytic in the disc, = (3 l0)^{1/4} (l - l0) + ...
    Cx q = (g_eval(gc, lambda) - gc.g0) / (dl * dl);
    Cx root = dl * cx_sqrt(q);
    Cx pref = (b0 / 2) / root;
    return {pref, -(pref * mh), pref / mh, -pref};
}

LaurentMatrix2 delta_hat_1(const GContext& gc, const Cx& s_minus1) {
    mpfr_prec_t wp = gc.prec.bits();
    Cx b0 = s_minus1 / (pow(Real(2.0, wp), Real(1.5, wp)) * sqrt(Real::pi(wp)));
    Cx r3l0 = pow_principal(gc.lambda0 * 3, 0.5, gc.prec);
    Cx pref = (b0 / 2) / pow_principal(gc.lambda0 * 3, 0.25, gc.prec);
    LaurentMatrix2 lm;
    lm.center = gc.lambda0;
    lm.terms[-1] = {pref, -(pref * r3l0), pref / r3l0, -pref};
    return lm;
}

// --------------------------------------------------------- Z expansion ----

namespace {

// closed-form Laurent matrices of Z_1 about -2 lambda0
void z1_coeffs(const GContext& gc, Matrix2& D2, Matrix2& D1) {
    mpfr_prec_t wp = gc.prec.bits();
    Cx l0 = gc.lambda0;
    Cx c288 = cx_inv(l0 * 288);
    D2 = Matrix2(wp);
    D2.c = -(c288 * 5);
    D1 = Matrix2(wp);
    D1.b = c288 * 7;
    D1.c = -(c288 / l0);
}

// closed-form Laurent matrices of Z_2 about -2 lambda0
void z2_coeffs(const GContext& gc, Matrix2& C3, Matrix2& C2, Matrix2& C1) {
    mpfr_prec_t wp = gc.prec.bits();
    Cx l0 = gc.lambda0;
    Cx l02 = l0 * l0;
    Cx q3 = cx_inv(l02 * 165888) * 35;          // 2^11 3^4 = 165888
    Cx q2 = cx_inv(l02 * l0 * 82944) * 7;       // 2^10 3^4 = 82944
    Cx q1 = cx_inv(l02 * l02 * 165888) * 49;
    C3 = Matrix2(wp); C3.a = -(q3 * 13); C3.d = q3 * 11;
    C2 = Matrix2(wp); C2.a = -(q2 * 12); C2.d = q2 * 11;
    C1 = Matrix2(wp); C1.a = -q1;        C1.d = q1;
}

Real disc_radius(const GContext& gc, double delta_scale) {
    return abs(gc.lambda0) * Real(delta_scale, gc.prec.bits());
}

// clockwise trapezoid sum of (1/2 pi i) oint F(s)/(s - lambda) ds on the
// circle |s - center| = radius
template <typename F>
Matrix2 cauchy_clockwise(const GContext& gc, const Cx& center, const Real& radius,
                         const Cx& lambda, long nodes, F&& f) {
    mpfr_prec_t wp = gc.prec.bits();
    if (abs(abs(lambda - center) - radius) < radius / 100)
        throw ContourError("contour quadrature: lambda too close to the circle");
    Real two_pi = Real::pi(wp) * 2;
    Matrix2 acc(wp);
    for (long j = 0; j < nodes; ++j) {
        Real th = two_pi * Real((double)j, wp) / Real((double)nodes, wp);
        Cx e = unit(-th);
        Cx s = center + e * radius;
        Matrix2 fs = f(s);
        Cx w = e / (s - lambda);
        acc = acc + (w * fs);
    }
    Cx scale = Cx(-(radius / Real((double)nodes, wp)), Real(wp));
    return scale * acc;
}

Matrix2 z1_inner_formula(const GContext& gc, const Cx& lambda) {
    Matrix2 D2, D1;
    z1_coeffs(gc, D2, D1);
    Cx m = lambda + gc.lambda0 * 2;
    Cx im = cx_inv(m);
    Matrix2 out = (im * im) * D2 + im * D1;
    return out - delta_eval(gc, 1, lambda);
}

} // namespace

Matrix2 z1_eval(const GContext& gc, const Cx& lambda, double delta_scale) {
    Matrix2 D2, D1;
    z1_coeffs(gc, D2, D1);
    Cx m = lambda + gc.lambda0 * 2;
    Cx im = cx_inv(m);
    Matrix2 out = (im * im) * D2 + im * D1;
    if (abs(m) < disc_radius(gc, delta_scale))
        out = out - delta_eval(gc, 1, lambda);
    return out;
}

Matrix2 z2_eval(const GContext& gc, const Cx& lambda, double delta_scale) {
    Matrix2 C3, C2, C1;
    z2_coeffs(gc, C3, C2, C1);
    Cx m = lambda + gc.lambda0 * 2;
    Cx im = cx_inv(m);
    Matrix2 out = (im * im * im) * C3 + (im * im) * C2 + im * C1;
    if (abs(m) < disc_radius(gc, delta_scale))
        out = out - (z1_inner_formula(gc, lambda) * delta_eval(gc, 1, lambda)
                     + delta_eval(gc, 2, lambda));
    return out;
}

Matrix2 z1_quadrature(const GContext& gc, const Cx& lambda, long nodes,
                      double delta_scale) {
    return cauchy_clockwise(gc, -(gc.lambda0 * 2), disc_radius(gc, delta_scale),
                            lambda, nodes,
                            [&](const Cx& s) { return delta_eval(gc, 1, s); });
}

Matrix2 z2_quadrature(const GContext& gc, const Cx& lambda, long nodes,
                      double delta_scale) {
    return cauchy_clockwise(gc, -(gc.lambda0 * 2), disc_radius(gc, delta_scale),
                            lambda, nodes, [&](const Cx& s) {
                                return z1_inner_formula(gc, s) * delta_eval(gc, 1, s)
                                     + delta_eval(gc, 2, s);
                            });
}

ZExpansion z_expansion(const GContext& gc) {
    mpfr_prec_t wp = gc.prec.bits();
    Matrix2 D2, D1, C3, C2, C1;
    z1_coeffs(gc, D2, D1);
    z2_coeffs(gc, C3, C2, C1);

    ZExpansion ze;
    ze.z1.center = -(gc.lambda0 * 2);
    ze.z1.terms[-2] = D2;
    ze.z1.terms[-1] = D1;
    ze.z2.center = ze.z1.center;
    ze.z2.terms[-3] = C3;
    ze.z2.terms[-2] = C2;
    ze.z2.terms[-1] = C1;
    ze.zsup1_t1 = D1;   // lambda^{-1} coefficient of Z_1 at infinity
    ze.zsup1_t2 = C1;   // lambda^{-1} coefficient of Z_2 at infinity

    // probe: closed form against quadrature at one off-cut point
    Cx probe = ze.z1.center + Cx(0.5, 0.45, wp) * abs(gc.lambda0);
    Real tol = tol10(gc.prec, 10);
    Matrix2 dz1 = z1_eval(gc, probe) - z1_quadrature(gc, probe);
    Matrix2 dz2 = z2_eval(gc, probe) - z2_quadrature(gc, probe);
    if (dz1.norm() > tol * (z1_eval(gc, probe).norm() + Real(1.0, wp)) ||
        dz2.norm() > tol * (z2_eval(gc, probe).norm() + Real(1.0, wp)))
        throw ConsistencyError("z_expansion: quadrature disagrees with closed form");
    return ze;
}

// ------------------------------------------------------- chi expansion ----

Matrix2 chi11_eval(const GContext& gc, const Cx& s_minus1, const Cx& lambda,
                   double delta_scale) {
    LaurentMatrix2 lm = delta_hat_1(gc, s_minus1);
    Matrix2 out = cx_inv(lambda - gc.lambda0) * lm.terms.at(-1);
    if (abs(lambda - gc.lambda0) < disc_radius(gc, delta_scale))
        out = out - delta_hat_eval(gc, s_minus1, lambda);
    return out;
}

Matrix2 chi11_quadrature(const GContext& gc, const Cx& s_minus1, const Cx& lambda,
                         long nodes, double delta_scale) {
    return cauchy_clockwise(gc, gc.lambda0, disc_radius(gc, delta_scale), lambda,
                            nodes, [&](const Cx& s) {
                                return delta_hat_eval(gc, s_minus1, s);
                            });
}

Matrix2 chi21_quadrature(const GContext& gc, const Cx& s_minus1, const Cx& lambda,
                         long nodes, double delta_scale) {
    LaurentMatrix2 lm = delta_hat_1(gc, s_minus1);
    const Matrix2& res = lm.terms.at(-1);
    return cauchy_clockwise(gc, gc.lambda0, disc_radius(gc, delta_scale), lambda,
                            nodes, [&](const Cx& s) {
                                Matrix2 inner = cx_inv(s - gc.lambda0) * res
                                              - delta_hat_eval(gc, s_minus1, s);
                                return inner * delta_hat_eval(gc, s_minus1, s);
                            });
}

ChiExpansion chi_expansion(const GContext& gc, const Cx& s_minus1) {
    mpfr_prec_t wp = gc.prec.bits();
    ChiExpansion ce;
    ce.chi11 = delta_hat_1(gc, s_minus1);
    ce.chi1_coeff = ce.chi11.terms.at(-1);

    if (abs(s_minus1).sign() != 0) {
        Cx probe = gc.lambda0 + Cx(0.45, 0.5, wp) * abs(gc.lambda0);
        Real tol = tol10(gc.prec, 10);
        Matrix2 diff = chi11_eval(gc, s_minus1, probe)
                     - chi11_quadrature(gc, s_minus1, probe);
        if (diff.norm() > tol * (chi11_eval(gc, s_minus1, probe).norm() + Real(1.0, wp)))
            throw ConsistencyError("chi_expansion: quadrature disagrees with closed form");
    }
    return ce;
}

// ------------------------------------------------------- reconstruction ----

Reconstruction reconstruct(const GContext& gc, const Cx& s_minus1) {
    mpfr_prec_t wp = gc.prec.bits();
    ZExpansion ze = z_expansion(gc);
    LaurentMatrix2 dh = delta_hat_1(gc, s_minus1);
    const Matrix2& zs1 = ze.zsup1_t1;
    const Matrix2& zs2 = ze.zsup1_t2;
    const Matrix2& res = dh.terms.at(-1);

    // unit phase u = sqrt(6) lambda0 = e^{i(phi-pi)/2} strips the ray angle
    Cx u = gc.lambda0 * sqrt(Real(6.0, wp));
    Cx u2 = u * u;
    Cx u4 = u2 * u2;
    Cx l02 = gc.lambda0 * gc.lambda0;

    Reconstruction rc;
    // order t^{-2} of Z11 - Z22 + Z21^2; the t^{-1} part is anti-diagonal
    Cx combo = zs2.a - zs2.d + zs1.c * zs1.c;
    rc.y01 = combo * u4 * sqrt(Real(6.0, wp));
    // order t^{-1} of -Z21, relative to the 4 lambda0^3 leading term
    rc.h01 = -(zs1.c) * u4 * u / (l02 * gc.lambda0 * 4);
    rc.y10 = (res.a - res.d) * pow_principal(u, 0.25, gc.prec);
    rc.h10 = -(res.c * pow_principal(u, 0.75, gc.prec));
    return rc;
}

} // namespace pi1
