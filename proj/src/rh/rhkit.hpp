#pragma once

#include "mp/complex.hpp"
#include "mp/context.hpp"
#include "coeff/surd.hpp"

#include <map>
#include <vector>

namespace pi1 {

/// 2x2 complex matrix, row major: [[a, b], [c, d]].  The norm used
/// throughout this module is the max absolute entry.
struct Matrix2 {
    Cx a, b, c, d;

    Matrix2() = default;
    explicit Matrix2(mpfr_prec_t prec) : a(prec), b(prec), c(prec), d(prec) {}
    Matrix2(Cx aa, Cx bb, Cx cc, Cx dd)
        : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {}

    static Matrix2 identity(mpfr_prec_t prec);

    friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    Matrix2 operator-() const { return {-a, -b, -c, -d}; }
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Matrix2 operator*(const Cx& s, const Matrix2& x) {
        return {s * x.a, s * x.b, s * x.c, s * x.d};
    }

    Cx det() const { return a * d - b * c; }
    Matrix2 inverse() const;       // DegeneracyError on vanishing determinant
    Real norm() const;             // max |entry|
};

/// Finite Laurent expansion of a 2x2 matrix function about a point:
/// sum over stored orders j of terms[j] * (lambda - center)^j.
struct LaurentMatrix2 {
    Cx center;
    std::map<long, Matrix2> terms;

    /// Smallest stored order with a nonzero matrix, negated (0 if the
    /// expansion has no pole).
    long pole_order() const;
    Matrix2 eval(const Cx& lambda) const;
};

/// Phase data for one ray arg x = phi.  lambda0 = e^{i(phi-pi)/2}/sqrt(6)
/// and g0 = g(lambda0) = -(24 sqrt(3)/5) lambda0^{5/2}.  Construction
/// checks g(-2 lambda0) = 0 and 2 g0 = -A e^{5i(phi-pi)/4} (the t = 1
/// slice of 2 t g0 = -A (-x)^{5/4}) to 10^{-(digits-5)}.
struct GContext {
    PrecisionContext prec;
    Real phi;
    Cx lambda0;
    Cx g0;
};

GContext make_gcontext(const Real& phi, const PrecisionContext& ctx);

/// Stokes multipliers indexed mod 5; s.at(k) accepts any integer.
struct StokesData {
    std::vector<Cx> s;  // s[0..4]
    const Cx& at(long k) const { return s[((k % 5) + 5) % 5]; }
};

/// Completes all five multipliers from (s0, s1) using
/// 1 + s_k s_{k+1} = -i s_{k+3} and checks every instance of the
/// relation; throws DataError when the system is unsatisfiable or
/// degenerate (1 + s0 s1 = 0 branch).
StokesData stokes_closure(const Cx& s0, const Cx& s1, const PrecisionContext& ctx);

/// Residual of the factorization S_1 = S_{-1}^{-1} [[1, i], [0, 1]] of
/// the upper-triangular ray jumps, in max norm.  Requires s_0 = 0 data.
Real jump_factorization_check(const StokesData& sd, const PrecisionContext& ctx);

/// g(lambda) = (4/5) m^{5/2} - 4 lambda0 m^{3/2}, m = lambda + 2 lambda0,
/// principal branches after recentering.  BranchError on the cut
/// (m real negative).
Cx g_eval(const GContext& gc, const Cx& lambda);
Cx g_prime(const GContext& gc, const Cx& lambda);

/// theta(lambda) = (4/5) lambda^{5/2} + e^{i phi} lambda^{1/2}.
Cx theta_eval(const Real& phi, const Cx& lambda, const PrecisionContext& ctx);

struct StationaryPoints {
    Cx theta_plus, theta_minus;  // +-e^{i(phi-pi)/2}/2 for theta
    Cx lambda0;                  // for g
};

/// Also verifies |g'| at lambda0 and -2 lambda0 by finite differences.
StationaryPoints stationary_points(const Real& phi, const PrecisionContext& ctx);

/// Grid of sign(Re g) over [re0, re1] x [im0, im1]; row-major, im
/// varying slowest.  Entries are -1, 0 or +1.
struct LandscapeRaster {
    long nx = 0, ny = 0;
    double re0 = 0, re1 = 0, im0 = 0, im1 = 0;
    std::vector<int> sign;
};

LandscapeRaster landscape_raster(const GContext& gc, double re0, double re1,
                                 double im0, double im1, long nx, long ny);

/// Traces the level line Im g = Im g(start) from a stationary point by
/// predictor-corrector steps.  branch indexes the local constant-phase
/// rays at the start point (sorted by angle); the trace stops when
/// |lambda - start| exceeds about 6 |lambda0| or max_steps is reached.
/// Re g must come out monotone along the polyline, else TracingError.
std::vector<Cx> steepest_path(const GContext& gc, const Cx& start, int branch,
                              long max_steps = 4000);

/// f(lambda) = (-(3/2) g)^{2/3} in the factored form
/// (lambda + 2 lambda0) * (6 lambda0 - (6/5) m)^{2/3}, analytic at
/// -2 lambda0 with f'(-2 lambda0) = (6 lambda0)^{2/3}.
Cx conformal_f(const GContext& gc, const Cx& lambda);

/// Airy model matrix A(zeta), sector picked from arg zeta.
/// DomainError exactly on a jump ray; nudge to one side instead.
Matrix2 airy_model(const Cx& zeta, const PrecisionContext& ctx);

struct AiryCoeff {
    BigRational u, v;
    Matrix2 A;
};

/// u_k, v_k (exact rationals) and the matrices A_k for k = 0..K.
std::vector<AiryCoeff> airy_asymptotic_coeffs(long K, const PrecisionContext& ctx);

/// Error-function model B(xi) = [[e^{xi^2}, b(xi)], [0, e^{-xi^2}]].
/// side > 0 forces the Re xi > 0 branch of b, side < 0 the other one;
/// side = 0 picks by sign(Re xi) with ties going right.
Matrix2 erf_model(const Cx& xi, const Cx& s_minus1, const PrecisionContext& ctx,
                  int side = 0);

/// Direct evaluation of Delta_k(lambda) from the closed form
/// (3/2)^k A_k-structure / (m^{3/2}(6 lambda0 - (6/5) m))^k; the half
/// powers pair up so the result has no cut inside the disc.
Matrix2 delta_eval(const GContext& gc, long k, const Cx& lambda);

/// Laurent data of Delta_k about -2 lambda0, orders from the pole order
/// up to max_order, from the binomial expansion of the closed form.
LaurentMatrix2 delta_laurent(const GContext& gc, long k, long max_order = 2);

/// Full Delta-hat_1(lambda) near lambda0 and its Laurent data (simple
/// pole; the residue carries the erfc amplitude s_{-1}/(2^{3/2} sqrt(pi))).
Matrix2 delta_hat_eval(const GContext& gc, const Cx& s_minus1, const Cx& lambda);
LaurentMatrix2 delta_hat_1(const GContext& gc, const Cx& s_minus1);

/// Closed-form Z_1, Z_2 Laurent data about -2 lambda0 plus the two-term
/// large-t law Z^{(1)}(t) = zsup1_t1 / t + zsup1_t2 / t^2.  Construction
/// cross-checks the closed forms against contour quadrature at a probe
/// point and throws ConsistencyError on disagreement.
struct ZExpansion {
    LaurentMatrix2 z1, z2;
    Matrix2 zsup1_t1, zsup1_t2;
};

ZExpansion z_expansion(const GContext& gc);

/// Closed-form values (region decided by |lambda + 2 lambda0| vs delta).
Matrix2 z1_eval(const GContext& gc, const Cx& lambda, double delta_scale = 0.3);
Matrix2 z2_eval(const GContext& gc, const Cx& lambda, double delta_scale = 0.3);

/// Clockwise trapezoid quadrature on the circle of radius
/// delta_scale * |lambda0| about -2 lambda0.
Matrix2 z1_quadrature(const GContext& gc, const Cx& lambda, long nodes = 256,
                      double delta_scale = 0.3);
Matrix2 z2_quadrature(const GContext& gc, const Cx& lambda, long nodes = 256,
                      double delta_scale = 0.3);

/// chi_{1,1} closed form (simple pole at lambda0) and the coefficient
/// matrix of the law chi^{(1)}_{1,1} = e^{2 t g0} t^{-1/2} (M + O(1/t)).
struct ChiExpansion {
    LaurentMatrix2 chi11;
    Matrix2 chi1_coeff;
};

ChiExpansion chi_expansion(const GContext& gc, const Cx& s_minus1);

Matrix2 chi11_eval(const GContext& gc, const Cx& s_minus1, const Cx& lambda,
                   double delta_scale = 0.3);
Matrix2 chi11_quadrature(const GContext& gc, const Cx& s_minus1, const Cx& lambda,
                         long nodes = 256, double delta_scale = 0.3);
Matrix2 chi21_quadrature(const GContext& gc, const Cx& s_minus1, const Cx& lambda,
                         long nodes = 256, double delta_scale = 0.3);

/// Leading transseries coefficients assembled from Z^{(1)} and
/// chi^{(1)}: y01 = -sqrt(6)/48, h01 = sqrt(6)/32 exactly, and the
/// one-instanton amplitudes y10, h10 proportional to s_{-1}.
struct Reconstruction {
    Cx y01, h01, y10, h10;
};

Reconstruction reconstruct(const GContext& gc, const Cx& s_minus1);

} // namespace pi1
