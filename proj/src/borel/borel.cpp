#include "borel/borel.hpp"
#include "borel/linalg.hpp"
#include "mp/error.hpp"
#include "mp/functions.hpp"

#include <algorithm>
#include <cmath>

namespace pi1 {

Cx BorelPadeModel::eval_sigma(const Cx& sigma) const {
    return poly_eval(pade_num, sigma) * cx_inv(poly_eval(pade_den, sigma));
}

Cx BorelPadeModel::eval_B(const Cx& zeta) const {
    return zeta * eval_sigma(zeta * zeta);
}

std::vector<Cx> borel_transform(const std::vector<Surd6Rational>& y, long N,
                                const PrecisionContext& ctx) {
    if (N < 20) throw DomainError("borel_transform: need N >= 20");
    if ((long)y.size() < N + 1) throw DomainError("borel_transform: series too short");
    mpfr_prec_t wp = ctx.bits();
    std::vector<Cx> out;
    out.reserve(N);
    Real fact(1.0, wp);             // (2n-1)!
    for (long n = 1; n <= N; ++n) {
        fact *= (2 * n - 2 > 0) ? (2 * n - 2) : 1;
        fact *= (2 * n - 1);
        out.push_back(Cx(y[n].to_real(wp) / fact, Real(wp)));
    }
    return out;
}

BorelPadeModel pade(const std::vector<Cx>& sigma_coeffs, long L, long M,
                    const PrecisionContext& ctx) {
    if ((long)sigma_coeffs.size() < L + M + 1)
        throw DomainError("pade: need L+M+1 coefficients");
    // the linear algebra runs well above the target precision
    PrecisionContext hi(3 * ctx.digits, ctx.guard);
    mpfr_prec_t wq = hi.bits();
    std::vector<Cx> c(L + M + 1, Cx(wq));
    for (long j = 0; j <= L + M; ++j) {
        c[j] = Cx(wq);
        c[j] += sigma_coeffs[j];
    }

    BorelPadeModel model;
    model.sigma_coeffs = sigma_coeffs;
    model.pade_den.assign(M + 1, Cx(wq));
    model.pade_den[0] = Cx(1.0, 0.0, wq);
    if (M > 0) {
        // sum_{j=0}^{M} d_j c_{n-j} = 0 for n = L+1..L+M, d_0 = 1
        std::vector<std::vector<Cx>> A(M, std::vector<Cx>(M, Cx(wq)));
        std::vector<Cx> b(M, Cx(wq));
        for (long r = 0; r < M; ++r) {
            long n = L + 1 + r;
            for (long j = 1; j <= M; ++j)
                A[r][j - 1] = (n - j >= 0) ? c[n - j] : Cx(wq);
            b[r] = -c[n];
        }
        auto d = solve_linear(std::move(A), std::move(b));
        for (long j = 1; j <= M; ++j) model.pade_den[j] = d[j - 1];
    }
    model.pade_num.assign(L + 1, Cx(wq));
    for (long n = 0; n <= L; ++n) {
        Cx s = c[n];
        for (long j = 1; j <= std::min(n, M); ++j) s += model.pade_den[j] * c[n - j];
        model.pade_num[n] = s;
    }

    // poles and residues; small residues mark Froissart artifacts
    Real thresh = Real::pow10(-(ctx.digits / 2), wq);
    if (M > 0) {
        auto roots = poly_roots(model.pade_den);
        for (const auto& r : roots) {
            PoleInfo p;
            p.location = r;
            Cx dden = poly_eval_deriv(model.pade_den, r);
            if (dden.is_zero()) {
                p.residue = Cx(wq);
                p.spurious = true;
            } else {
                p.residue = poly_eval(model.pade_num, r) * cx_inv(dden);
                p.spurious = abs(p.residue) < thresh;
            }
            model.poles.push_back(std::move(p));
        }
    }
    return model;
}

Cx nearest_singularity(const BorelPadeModel& model, const PrecisionContext& ctx) {
    const PoleInfo* best = nullptr;
    for (const auto& p : model.poles) {
        if (p.spurious) continue;
        if (!best || abs(p.location) < abs(best->location)) best = &p;
    }
    if (!best) throw InconclusiveError("nearest_singularity: all poles spurious");
    return pow_principal(best->location, 0.5, ctx);
}

namespace {

struct GLCache {
    std::vector<Real> nodes, weights;
};

// integral of e^{-w zeta} f(zeta) d zeta over the ray zeta = e^{i theta} t,
// t in [0, T], against two integrands at once: f = B and f = zeta B
void ray_integrals(const BorelPadeModel& model, const Cx& w, const Real& theta,
                   const Real& T, long npts, mpfr_prec_t wp, Cx& i0, Cx& i1) {
    Cx phase(cos(theta), sin(theta));
    GLCache gl;
    gauss_legendre(npts, wp, gl.nodes, gl.weights);
    i0 = Cx(wp);
    i1 = Cx(wp);
    // short panels where the singularity sits, longer ones in the tail
    Real t0(wp);
    double tv = 0.0, Tv = T.to_double();
    while (tv < Tv) {
        double len = (tv < 6.0) ? 0.25 : (tv < 16.0 ? 1.0 : 4.0);
        if (tv + len > Tv) len = Tv - tv;
        Real a = t0, half(len / 2, wp);
        Cx p0(wp), p1(wp);
        for (long k = 0; k < npts; ++k) {
            Real t = a + half * (gl.nodes[k] + Real(1.0, wp));
            Cx zeta = phase * t;
            Cx f = model.eval_B(zeta) * cx_exp(-(w * zeta));
            p0 += f * gl.weights[k];
            p1 += f * zeta * gl.weights[k];
        }
        i0 += p0 * (phase * half);
        i1 += p1 * (phase * half);
        t0 += Real(len, wp);
        tv += len;
    }
}

} // namespace

LateralSum laplace_lateral(const BorelPadeModel& model, const Cx& x, Side side,
                           const PrecisionContext& ctx, double epsilon, long nodes) {
    mpfr_prec_t wp = ctx.bits();
    if (nodes <= 0) nodes = std::max(40L, (long)ctx.digits);
    Real theta(side == Side::above ? epsilon : -epsilon, wp);
    Real A = instanton_action(ctx);

    // refuse rays passing too close to a model pole (in zeta)
    for (const auto& p : model.poles) {
        if (p.spurious) continue;
        Cx zp = pow_principal(p.location, 0.5, ctx);
        if (zp.re.sign() <= 0) continue;
        Real d = abs(zp) * abs(sin(arg(zp) - theta));
        if (d < A * Real(0.5 * epsilon, wp))
            throw ContourError("laplace_lateral: pole too close to the integration ray");
    }

    Cx w = neg_x_power(x, 1.25, ctx);
    Cx wdir = w * Cx(cos(theta), sin(theta));
    Real decay = wdir.re;
    if (decay.sign() <= 0)
        throw ContourError("laplace_lateral: Laplace ray does not decay for this x");
    Real T = (Real((double)ctx.digits, wp) * log(Real(10.0, wp)) + Real(25.0, wp)) / decay;
    if (T < Real(8.0, wp)) T = Real(8.0, wp);

    Cx i0(wp), i1(wp);
    ray_integrals(model, w, theta, T, nodes, wp, i0, i1);

    // tail: |B| grows at most linearly on the far ray
    Cx zT = Cx(cos(theta), sin(theta)) * T;
    Real btail = abs(model.eval_B(zT)) + Real(1.0, wp);
    Real tail = btail * exp(-(decay * T)) / decay * 2;

    Cx u = -x;
    Cx pref = pow_principal(u / Real(6.0, wp), 0.5, ctx);
    LateralSum out;
    out.x = x;
    out.side = side;
    out.value = pref * (Cx(1.0, 0.0, wp) + i0);
    // d/dx = -d/du: prefactor term plus the differentiated Laplace kernel
    Cx dpref = -cx_inv(pref) / 12;
    Cx u14 = pow_principal(u, 0.25, ctx);
    out.derivative = dpref * (Cx(1.0, 0.0, wp) + i0) + pref * Real(1.25, wp) * u14 * i1;
    out.tail_bound = tail * (abs(pref) + Real(1.0, wp));
    return out;
}

StokesFit stokes_jump_and_fit(const std::vector<Cx>& xs, const BorelPadeModel& model,
                              const PrecisionContext& ctx, double epsilon, long nodes) {
    if (xs.size() < 4) throw DomainError("stokes_jump_and_fit: need >= 4 samples");
    mpfr_prec_t wp = ctx.bits();
    std::vector<std::array<Real, 3>> rows;
    std::vector<Real> rhs;
    std::vector<Cx> jumps;
    for (const auto& x : xs) {
        auto above = laplace_lateral(model, x, Side::above, ctx, epsilon, nodes);
        auto below = laplace_lateral(model, x, Side::below, ctx, epsilon, nodes);
        Cx jump = above.value - below.value;
        Real floor = (above.tail_bound + below.tail_bound) * 10;
        if (abs(jump) < floor)
            throw DataError("stokes_jump_and_fit: jump below the noise floor; raise digits");
        jumps.push_back(jump);
        Real u = abs(x);        // window sits on arg x = pi
        rows.push_back({-pow(u, Real(1.25, wp)), log(u), Real(1.0, wp)});
        rhs.push_back(log(abs(jump)));
    }
    auto sol = lsq3(rows, rhs);
    StokesFit fit;
    fit.A_fit = sol[0];
    fit.p_fit = sol[1];
    fit.window = xs;
    // recover the complex amplitude at the first sample with the fitted rate
    Real u0 = abs(xs[0]);
    Real mag = exp(-(sol[0] * pow(u0, Real(1.25, wp))) + sol[1] * log(u0));
    fit.c_fit = jumps[0] / mag;
    return fit;
}

} // namespace pi1
