#pragma once

#include "coeff/surd.hpp"
#include "mp/complex.hpp"
#include "mp/context.hpp"

#include <vector>

namespace pi1 {

struct Level0Series {
    std::vector<Surd6Rational> y;   // y_{0,0..N}
    std::vector<Surd6Rational> h;   // h_{0,0..N}
};

struct InstantonSeries {
    int level = 1;
    std::vector<Real> coeffs;       // normalized: coeffs[0] = 1 at k=1
    Real action;                    // A
    Real prefactor_power;           // -1/8 at k=1, in (-x)
};

struct TransseriesAmplitude {
    Cx s_minus1;
    Cx y10;
    Cx h10;
    Cx C;                           // C * yhat_{1,n} = y_{1,n}
};

/// y_{0,0..N}, exact.  y_{0,n+1} = (25n^2-1)/(8 sqrt 6) y_{0,n}
///                                 - (1/2) sum_{m=1}^{n} y_{0,m} y_{0,n+1-m}
std::vector<Surd6Rational> level0_coeffs(long N);

/// h_{0,0..N}, exact, from the y-series.
std::vector<Surd6Rational> hamiltonian_coeffs(const std::vector<Surd6Rational>& y);

/// Exact residual of order k left by the truncated series in
/// y'' - 6y^2 - x; vanishes identically for k = 1..N.
Surd6Rational ode_residual_term(const std::vector<Surd6Rational>& y, long k);

/// Instanton action A = 2^{11/4} 3^{1/4} / 5 at working precision.
Real instanton_action(const PrecisionContext& ctx);

/// (A, -1/8) from the dominant balance of the linearized equation;
/// asserts A^2 = 32 sqrt(6)/25 to working precision.
std::pair<Real, Real> level1_indicial(const PrecisionContext& ctx);

/// Normalized instanton coefficients at level k = 1 or 2.
InstantonSeries instanton_coeffs(int k, long N, const Level0Series& l0,
                                 const PrecisionContext& ctx);

TransseriesAmplitude amplitude_from_stokes(const Cx& s_minus1, const PrecisionContext& ctx);

/// r_n = y_{0,n+1} / (n^2 y_{0,n}) for n = 1..N; tends to 25/(8 sqrt 6) = 4/A^2.
std::vector<Real> ratio_diagnostic(const std::vector<Surd6Rational>& y, long N,
                                   const PrecisionContext& ctx);

} // namespace pi1
