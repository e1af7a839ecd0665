#include "ode/taylor.hpp"
#include "mp/error.hpp"

#include <algorithm>
#include <cmath>

namespace pi1 {

Cx TaylorDisk::eval(const Cx& h) const {
    Cx acc(h.prec());
    for (long j = (long)coeffs.size() - 1; j >= 0; --j) acc = acc * h + coeffs[j];
    return acc;
}

Cx TaylorDisk::eval_deriv(const Cx& h) const {
    Cx acc(h.prec());
    for (long j = (long)coeffs.size() - 1; j >= 1; --j) acc = acc * h + coeffs[j] * j;
    return acc;
}

static Real radius_estimate(const std::vector<Cx>& c, mpfr_prec_t wp) {
    // stabilized |c_j|^{-1/j} over the top quartile of orders
    long K = (long)c.size() - 1;
    std::vector<double> est;
    for (long j = std::max(2L, 3 * K / 4); j <= K; ++j) {
        Real m = abs(c[j]);
        if (m.is_zero() || !m.is_finite()) continue;
        double lr = -log(m).to_double() / j;
        if (std::isfinite(lr)) est.push_back(lr);
    }
    if (est.empty()) return Real(1e30, wp);
    std::sort(est.begin(), est.end());
    double med = est[est.size() / 2];
    return Real(std::exp(med), wp);
}

TaylorDisk local_taylor(const Cx& center, const Cx& y, const Cx& yprime, long K,
                        const PrecisionContext& ctx) {
    if (K < 8) throw DomainError("local_taylor: order must be >= 8");
    mpfr_prec_t wp = ctx.bits();
    TaylorDisk d;
    d.center = center;
    d.coeffs.assign(K + 1, Cx(wp));
    d.coeffs[0] = y;
    d.coeffs[1] = yprime;
    for (long j = 0; j + 2 <= K; ++j) {
        Cx conv(wp);
        for (long m = 0; m <= j; ++m) conv += d.coeffs[m] * d.coeffs[j - m];
        Cx rhs = conv * 6L;
        if (j == 0) rhs += center;
        if (j == 1) rhs += Cx(1.0, 0.0, wp);
        d.coeffs[j + 2] = rhs / ((j + 2) * (j + 1));
    }
    d.radius_est = radius_estimate(d.coeffs, wp);
    return d;
}

RayResult integrate_ray(const Cx& from, const Cx& to, const Cx& y0, const Cx& yp0,
                        const PrecisionContext& ctx, long K, double safety) {
    mpfr_prec_t wp = ctx.bits();
    if (K <= 0) K = std::max(24L, (long)ctx.digits / 2);
    Real seglen = abs(to - from);
    RayResult res;
    res.y = y0;
    res.yprime = yp0;
    res.err_bound = Real(wp);
    if (seglen.is_zero()) return res;
    Cx dir = (to - from) / seglen;
    Real tol = Real::pow10(-(ctx.digits + 5), wp);
    Real done(wp);

    while (done < seglen) {
        TaylorDisk disk = local_taylor(from + dir * done, res.y, res.yprime, K, ctx);
        if (disk.radius_est < seglen * Real(1e-3, wp)) {
            // radius collapse: a double pole sits about one radius ahead
            Cx approx = disk.center + dir * disk.radius_est;
            throw PoleEncountered("integrate_ray: pole ahead", approx.re.to_double(), approx.im.to_double());
        }
        Real h = disk.radius_est * Real(safety, wp);
        Real remaining = seglen - done;
        if (h > remaining) h = remaining;
        // certify the local truncation tail at this step size
        Real scale = abs(res.y) + Real(1.0, wp);
        for (int halve = 0; halve < 200; ++halve) {
            Real hK = pow(h, Real((double)(K - 1), wp));
            Real tail = (abs(disk.coeffs[K]) * h + abs(disk.coeffs[K - 1])) * hK;
            Real geo = Real(1.0, wp) - h / disk.radius_est;
            if (geo.sign() > 0) tail /= geo;
            if (tail <= tol * scale || h.is_zero()) {
                res.err_bound += tail;
                break;
            }
            h = h / 2;
        }
        Cx step = dir * h;
        res.y = disk.eval(step);
        res.yprime = disk.eval_deriv(step);
        if (!res.y.is_finite() || !res.yprime.is_finite())
            throw OverflowError("integrate_ray: solution overflow");
        done += h;
        ++res.steps;
        if (res.steps > 2000000)
            throw OverflowError("integrate_ray: step count exceeded");
    }
    return res;
}

TaylorDisk z5_transform(const TaylorDisk& disk, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    Real ang = Real::pi(wp) * 2 / 5;
    Cx w(cos(ang), sin(ang));
    Cx winv = cx_inv(w);
    // v(w c + h) = w^{-2} y(c + w^{-1} h): v_j = w^{-(2+j)} c_j
    TaylorDisk t;
    t.center = w * disk.center;
    t.coeffs.reserve(disk.coeffs.size());
    Cx f = winv * winv;    // w^{-(2+j)}, updated per order
    for (const auto& c : disk.coeffs) {
        t.coeffs.push_back(f * c);
        f *= winv;
    }
    t.radius_est = disk.radius_est;
    return t;
}

Real z5_symmetry_check(const TaylorDisk& disk, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    TaylorDisk v = z5_transform(disk, ctx);
    long K = (long)v.coeffs.size() - 1;
    Real worst(wp);
    for (long j = 0; j + 2 <= K; ++j) {
        Cx conv(wp);
        for (long m = 0; m <= j; ++m) conv += v.coeffs[m] * v.coeffs[j - m];
        Cx r = v.coeffs[j + 2] * ((j + 2) * (j + 1)) - conv * 6L;
        if (j == 0) r -= v.center;
        if (j == 1) r -= Cx(1.0, 0.0, wp);
        Real m = abs(r);
        if (m > worst) worst = m;
    }
    return worst;
}

std::vector<Cx> pole_scan(const Cx& from, const Cx& to, const Cx& y0, const Cx& yp0,
                          const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    std::vector<Cx> poles;
    Cx cur_from = from;
    Cx y = y0, yp = yp0;
    Real seglen = abs(to - from);
    if (seglen.is_zero()) return poles;
    Cx dir = (to - from) / seglen;
    for (int guard = 0; guard < 64; ++guard) {
        try {
            integrate_ray(cur_from, to, y, yp, ctx);
            return poles;
        } catch (const PoleEncountered&) {
            // walk up to the collapse point again, keeping the endpoint data
            Real step = abs(to - cur_from) * Real(1e-3, wp);
            RayResult last{y, yp, Real(wp), 0};
            Cx x = cur_from;
            try {
                while (true) {
                    TaylorDisk d = local_taylor(x, last.y, last.yprime,
                                                std::max(24L, (long)ctx.digits / 2), ctx);
                    if (d.radius_est < step) break;
                    Real h = d.radius_est * Real(0.5, wp);
                    Cx hs = dir * h;
                    last.y = d.eval(hs);
                    last.yprime = d.eval_deriv(hs);
                    x += hs;
                }
            } catch (const OverflowError&) { /* stopped as close as possible */ }
            // double-pole estimate a = x + 2y/y' (exact for y = (x-a)^{-2})
            Cx a = x + (last.y / last.yprime) * 2L;
            Cx lead = last.y * (x - a) * (x - a);
            if (abs(lead - Cx(1.0, 0.0, wp)) < Real(1e-3, wp)) poles.push_back(a);
            // resume just past the pole on the reflected point; leading
            // Laurent behavior only, so the continuation tracks a nearby
            // solution (locations stay approximate, which is the contract)
            Cx s = a - x;
            Cx x2 = a + s;
            if (abs(to - x2) >= abs(to - cur_from)) return poles;
            cur_from = x2;
            y = cx_inv(s * s);
            yp = -cx_inv(s * s * s) * 2L;
        }
    }
    return poles;
}

Cx hamiltonian_value(const Cx& x, const Cx& y, const Cx& yprime) {
    return yprime * yprime / 2 - y * y * y * 2L - x * y;
}

} // namespace pi1
