#pragma once

#include "mp/complex.hpp"
#include "mp/context.hpp"

#include <utility>

namespace pi1 {

/// z^alpha on the principal branch, Arg z in (-pi, pi].  Real positive
/// input gives real positive output exactly.
Cx pow_principal(const Cx& z, const Real& alpha, const PrecisionContext& ctx);
Cx pow_principal(const Cx& z, double alpha, const PrecisionContext& ctx);

/// (-x)^alpha = (e^{-i pi} x)^alpha: the argument is shifted by -pi and
/// renormalized to (-pi, pi] before the principal power is taken.  Real
/// negative x with real alpha gives a real positive result.
Cx neg_x_power(const Cx& x, const Real& alpha, const PrecisionContext& ctx);
Cx neg_x_power(const Cx& x, double alpha, const PrecisionContext& ctx);

/// Complementary error function for complex argument.
///
/// Method: Maclaurin series (with guard digits absorbing the e^{|z|^2}
/// cancellation) for |z| below the switchover radius
/// r = sqrt((digits+guard)·ln 10), the asymptotic expansion above it,
/// and the Laplace continued fraction in the intermediate right
/// half-plane band; Re z < 0 is reduced by erfc(z) = 2 - erfc(-z).
Cx erfc_c(const Cx& z, const PrecisionContext& ctx);

/// (Ai(z), Ai'(z)).  Maclaurin series with adaptive guard digits for
/// |z| <= cap (default 12); the standard asymptotic expansion beyond
/// the cap, provided it can certify ctx.digits there (otherwise a
/// RangeError is thrown).
std::pair<Cx, Cx> airy_pair(const Cx& z, const PrecisionContext& ctx, double cap = 12.0);

/// Gamma(twice_arg / 2) by upward recursion from Gamma(1/2) = sqrt(pi)
/// and Gamma(1) = 1.
Real gamma_half_int(long twice_arg, const PrecisionContext& ctx);

namespace detail {
// individual evaluation branches, exposed for cross-validation
Cx erfc_series(const Cx& z, const PrecisionContext& ctx);
Cx erfc_cf(const Cx& z, const PrecisionContext& ctx);
Cx erfc_asymptotic(const Cx& z, const PrecisionContext& ctx);
std::pair<Cx, Cx> airy_series(const Cx& z, const PrecisionContext& ctx);
std::pair<Cx, Cx> airy_asymptotic(const Cx& z, const PrecisionContext& ctx);
}

} // namespace pi1
