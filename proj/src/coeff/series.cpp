#include "coeff/series.hpp"
#include "mp/error.hpp"

namespace pi1 {

std::vector<Surd6Rational> level0_coeffs(long N) {
    if (N < 1) throw DomainError("level0_coeffs: N must be >= 1");
    // with y_{0,n} = q_n 6^{-n/2} the recursion closes over the rationals:
    //   q_{n+1} = (25n^2-1)/8 q_n - (1/2) sum_{m=1}^{n} q_m q_{n+1-m}
    std::vector<BigRational> q(N + 1);
    q[0] = 1;
    for (long n = 0; n < N; ++n) {
        BigRational lin = BigRational(25 * n * n - 1, 8) * q[n];
        BigRational conv = 0;
        for (long m = 1; m <= n; ++m) conv += q[m] * q[n + 1 - m];
        q[n + 1] = lin - conv / 2;
    }
    std::vector<Surd6Rational> y(N + 1);
    for (long n = 0; n <= N; ++n) y[n] = Surd6Rational(q[n], n);
    return y;
}

std::vector<Surd6Rational> hamiltonian_coeffs(const std::vector<Surd6Rational>& y) {
    // H = z^2/2 - 2y^3 - xy evaluated on the series, divided by the
    // normalization 4(-x/6)^{3/2}; in q-space (h_{0,n} = qh_n 6^{-n/2}):
    //   qh_n = (3/16) sum_{m+l=n-1} (1-5m)(1-5l) q_m q_l
    //          - (1/2) sum_{m+l+p=n} q_m q_l q_p + (3/2) q_n
    long N = (long)y.size() - 1;
    std::vector<BigRational> q(N + 1);
    for (long n = 0; n <= N; ++n) q[n] = y[n].q;
    std::vector<Surd6Rational> h(N + 1);
    for (long n = 0; n <= N; ++n) {
        BigRational s2 = 0;
        for (long m = 0; m <= n - 1; ++m) {
            long l = n - 1 - m;
            s2 += BigRational(1 - 5 * m) * BigRational(1 - 5 * l) * q[m] * q[l];
        }
        BigRational s3 = 0;
        for (long m = 0; m <= n; ++m)
            for (long l = 0; l + m <= n; ++l)
                s3 += q[m] * q[l] * q[n - m - l];
        BigRational qh = BigRational(3, 16) * s2 - s3 / 2 + BigRational(3, 2) * q[n];
        h[n] = Surd6Rational(qh, n);
    }
    return h;
}

Surd6Rational ode_residual_term(const std::vector<Surd6Rational>& y, long k) {
    if (k < 1 || k > (long)y.size() - 1)
        throw DomainError("ode_residual_term: order out of range");
    // order-k coefficient of (y'' - 6y^2 - x)/(6(-x/6) scale), in q-space:
    //   R_k = (6-5k)(4-5k)/4 q_{k-1} - sum_{m+l=k} q_m q_l
    BigRational lin = BigRational((6 - 5 * k) * (4 - 5 * k), 4) * y[k - 1].q;
    BigRational conv = 0;
    for (long m = 0; m <= k; ++m) conv += y[m].q * y[k - m].q;
    return Surd6Rational(lin - conv, k);
}

Real instanton_action(const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    // A = 2^{11/4} 3^{1/4} / 5
    Real a = pow(Real(2.0, wp), Real(11.0, wp) / 4) * pow(Real(3.0, wp), Real(1.0, wp) / 4);
    return a / 5;
}

std::pair<Real, Real> level1_indicial(const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    Real A = instanton_action(ctx);
    // dominant balance: (5A/4)^2 = 12/sqrt 6, i.e. A^2 = 32 sqrt(6)/25
    Real lhs = A * A;
    Real rhs = Real(32.0, wp) * sqrt(Real(6.0, wp)) / 25;
    if (abs(lhs - rhs) > Real::pow10(-(ctx.digits), wp) * rhs)
        throw ConsistencyError("level1_indicial: action mismatch against the dominant balance");
    return {A, Real(-0.125, wp)};
}

InstantonSeries instanton_coeffs(int k, long N, const Level0Series& l0,
                                 const PrecisionContext& ctx) {
    if (k != 1 && k != 2) throw DomainError("instanton_coeffs: level must be 1 or 2");
    if (N < 1) throw DomainError("instanton_coeffs: N must be >= 1");
    if ((long)l0.y.size() < N + 3)
        throw DomainError("instanton_coeffs: level-0 series too short (need order N+2)");
    mpfr_prec_t wp = ctx.bits();
    Real A = instanton_action(ctx);
    Real s6 = sqrt(Real(6.0, wp));
    Real twelve_over_s6 = Real(12.0, wp) / s6;

    std::vector<Real> y0(N + 3, Real(wp));
    for (long n = 0; n < (long)y0.size() && n < (long)l0.y.size(); ++n)
        y0[n] = l0.y[n].to_real(wp);

    InstantonSeries out;
    out.action = A;
    out.level = k;

    if (k == 1) {
        out.prefactor_power = Real(-0.125, wp);
        std::vector<Real> u(N + 1, Real(wp));
        u[0] = Real(1.0, wp);
        for (long n = 1; n <= N; ++n) {
            // p' = -1/8 - 5(n-1)/4, the (-x) power carried by u_{n-1}
            Real pp = Real(-0.125, wp) - Real(5.0, wp) * (n - 1) / 4;
            Real num = -(pp * (pp - Real(1.0, wp))) * u[n - 1];
            for (long m = 1; 2 * m <= n + 1; ++m)
                num += twelve_over_s6 * y0[m] * u[n + 1 - 2 * m];
            Real den = Real(25.0, wp) / 8 * A * n;
            if (den.is_zero())
                throw DegeneracyError("instanton_coeffs: vanishing indicial factor at level 1");
            u[n] = num / den;
        }
        out.coeffs = std::move(u);
        return out;
    }

    // level 2, sourced by 6 * (level-1 series)^2; beta_2 = -3/4
    InstantonSeries lvl1 = instanton_coeffs(1, N + 1, l0, ctx);
    out.prefactor_power = Real(-0.75, wp);
    Real beta2 = Real(-0.75, wp);
    std::vector<Real> v(N + 1, Real(wp));
    Real den = Real(36.0, wp) / s6;
    for (long n = 0; n <= N; ++n) {
        Real num(wp);
        for (long a = 0; a <= n; ++a) num += Real(6.0, wp) * lvl1.coeffs[a] * lvl1.coeffs[n - a];
        if (n >= 1) {
            Real b = beta2 - Real(5.0, wp) * (n - 1) / 4;
            num += Real(5.0, wp) / 2 * A * (b * 2 + Real(0.25, wp)) * v[n - 1];
        }
        if (n >= 2) {
            Real p2 = beta2 - Real(5.0, wp) * (n - 2) / 4;
            num -= p2 * (p2 - Real(1.0, wp)) * v[n - 2];
        }
        for (long m = 1; 2 * m <= n; ++m)
            num += twelve_over_s6 * y0[m] * v[n - 2 * m];
        if (den.is_zero())
            throw DegeneracyError("instanton_coeffs: vanishing indicial factor at level 2");
        v[n] = num / den;
    }
    out.coeffs = std::move(v);
    return out;
}

TransseriesAmplitude amplitude_from_stokes(const Cx& s_minus1, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.bits();
    Real sp = sqrt(Real::pi(wp));
    Real c_y = pow(Real(2.0, wp), Real(-11.0, wp) / 8) * pow(Real(3.0, wp), Real(-1.0, wp) / 8) / sp;
    Real c_h = -(pow(Real(2.0, wp), Real(-17.0, wp) / 8) * pow(Real(3.0, wp), Real(-3.0, wp) / 8)) / sp;
    TransseriesAmplitude t;
    t.s_minus1 = s_minus1;
    t.y10 = s_minus1 * c_y;
    t.h10 = s_minus1 * c_h;
    t.C = t.y10;   // yhat_{1,0} = 1
    return t;
}

std::vector<Real> ratio_diagnostic(const std::vector<Surd6Rational>& y, long N,
                                   const PrecisionContext& ctx) {
    if (N < 10) throw DomainError("ratio_diagnostic: N must be >= 10");
    if ((long)y.size() < N + 2) throw DomainError("ratio_diagnostic: series too short");
    mpfr_prec_t wp = ctx.bits();
    std::vector<Real> r;
    r.reserve(N);
    for (long n = 1; n <= N; ++n) {
        if (y[n].is_zero()) throw DataError("ratio_diagnostic: zero coefficient");
        Real num = y[n + 1].to_real(wp);
        Real den = y[n].to_real(wp) * (n * n);
        r.push_back(num / den);
    }
    return r;
}

} // namespace pi1
