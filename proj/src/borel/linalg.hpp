#pragma once

#include "mp/complex.hpp"
#include "mp/context.hpp"

#include <array>
#include <vector>

namespace pi1 {

/// Dense complex solve by partial-pivot elimination.  A is row-major.
std::vector<Cx> solve_linear(std::vector<std::vector<Cx>> A, std::vector<Cx> b);

/// All roots of a polynomial (coefficients low to high) by the
/// Durand-Kerner iteration at the coefficients' precision.
std::vector<Cx> poly_roots(const std::vector<Cx>& coeffs, long max_iter = 800);

Cx poly_eval(const std::vector<Cx>& coeffs, const Cx& z);
Cx poly_eval_deriv(const std::vector<Cx>& coeffs, const Cx& z);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(long n, mpfr_prec_t wp, std::vector<Real>& nodes,
                    std::vector<Real>& weights);

/// Least squares for a 3-column design matrix via the normal equations.
std::array<Real, 3> lsq3(const std::vector<std::array<Real, 3>>& rows,
                         const std::vector<Real>& rhs);

} // namespace pi1
