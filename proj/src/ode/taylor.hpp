#pragma once

#include "mp/complex.hpp"
#include "mp/context.hpp"

#include <vector>

namespace pi1 {

/// Local Taylor solution of y'' = 6y^2 + x around `center`.
struct TaylorDisk {
    Cx center;
    std::vector<Cx> coeffs;     // c_0..c_K
    Real radius_est;

    Cx eval(const Cx& h) const;             // value at center + h
    Cx eval_deriv(const Cx& h) const;       // derivative at center + h
};

/// Result of a ray integration: endpoint data plus the accumulated
/// per-step error bound (linear in the step count).
struct RayResult {
    Cx y;
    Cx yprime;
    Real err_bound;
    long steps = 0;
};

/// Coefficients via (j+2)(j+1) c_{j+2} = 6 sum c_m c_{j-m} + center [j=0] + [j=1].
TaylorDisk local_taylor(const Cx& center, const Cx& y, const Cx& yprime, long K,
                        const PrecisionContext& ctx);

/// Integrate along the straight segment from -> to.  Fixed order
/// K = max(24, digits/2), step = safety * radius_est (safety 0.5).
RayResult integrate_ray(const Cx& from, const Cx& to, const Cx& y, const Cx& yprime,
                        const PrecisionContext& ctx, long K = 0, double safety = 0.5);

/// Max residual of the recurrence for v(x) = w^{-2} y(w^{-1} x), w = e^{2 pi i/5},
/// built from the given disk.  Analytically zero; returns the numeric level.
Real z5_symmetry_check(const TaylorDisk& disk, const PrecisionContext& ctx);

/// The transformed disk itself (exposed for the five-fold identity test).
TaylorDisk z5_transform(const TaylorDisk& disk, const PrecisionContext& ctx);

/// Approximate pole locations along the segment; each is confirmed by a
/// local double-pole fit y ~ (x-a)^{-2} with unit leading coefficient.
std::vector<Cx> pole_scan(const Cx& from, const Cx& to, const Cx& y, const Cx& yprime,
                          const PrecisionContext& ctx);

/// H = y'^2/2 - 2y^3 - xy, the conserved-up-to-(-y) energy.
Cx hamiltonian_value(const Cx& x, const Cx& y, const Cx& yprime);

} // namespace pi1
