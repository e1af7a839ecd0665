#pragma once

#include "coeff/series.hpp"
#include "mp/complex.hpp"
#include "mp/context.hpp"

#include <vector>

namespace pi1 {

struct PoleInfo {
    Cx location;     // in sigma = zeta^2
    Cx residue;
    bool spurious = false;
};

/// Pade model of Ghat(sigma) = sum_{n>=1} y_{0,n} sigma^{n-1}/(2n-1)!;
/// the Borel function in zeta is B(zeta) = zeta * Ghat(zeta^2), and the
/// level-0 singularity is expected at zeta = A.
struct BorelPadeModel {
    std::vector<Cx> sigma_coeffs;
    std::vector<Cx> pade_num;    // low to high; den[0] = 1
    std::vector<Cx> pade_den;
    std::vector<PoleInfo> poles;

    Cx eval_sigma(const Cx& sigma) const;
    Cx eval_B(const Cx& zeta) const;
};

enum class Side { above, below };

struct LateralSum {
    Cx x;
    Side side = Side::above;
    Cx value;
    Cx derivative;
    Real tail_bound;
};

struct StokesFit {
    Real A_fit;
    Real p_fit;
    Cx c_fit;
    std::vector<Cx> window;
};

/// sigma_coeffs[n-1] = y_{0,n}/(2n-1)! at working precision.
std::vector<Cx> borel_transform(const std::vector<Surd6Rational>& y, long N,
                                const PrecisionContext& ctx);

/// [L/M] Pade approximant; the linear solve runs at >= 3x the target
/// digits.  Poles with |residue| below 10^{-digits/2} are flagged spurious.
BorelPadeModel pade(const std::vector<Cx>& sigma_coeffs, long L, long M,
                    const PrecisionContext& ctx);

/// sqrt of the smallest non-spurious sigma-pole: the Borel-plane
/// singularity estimate (expected at the instanton action A).
Cx nearest_singularity(const BorelPadeModel& model, const PrecisionContext& ctx);

/// Lateral Borel-Laplace sum at x near the ray arg x = pi.  The zeta-ray
/// is rotated by +epsilon (above) or -epsilon (below), integrated by
/// composite Gauss-Legendre panels, with a certified tail bound.
LateralSum laplace_lateral(const BorelPadeModel& model, const Cx& x, Side side,
                           const PrecisionContext& ctx, double epsilon = 0.15,
                           long nodes = 0);

/// jump(x) = value_above - value_below; fits ln|jump| ~ -A u^{5/4}
/// + p ln u + ln|c| over the window (u = -x) and recovers the phase of c
/// at the first sample.
StokesFit stokes_jump_and_fit(const std::vector<Cx>& xs, const BorelPadeModel& model,
                              const PrecisionContext& ctx, double epsilon = 0.15,
                              long nodes = 0);

} // namespace pi1
