#include "borel/linalg.hpp"
#include "mp/error.hpp"

#include <cmath>

namespace pi1 {

std::vector<Cx> solve_linear(std::vector<std::vector<Cx>> A, std::vector<Cx> b) {
    size_t n = A.size();
    if (n == 0 || b.size() != n) throw DomainError("solve_linear: bad dimensions");
    mpfr_prec_t wp = b[0].prec();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = abs(A[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            Real m = abs(A[r][col]);
            if (m > best) { best = m; piv = r; }
        }
        if (best.is_zero()) throw DegeneracyError("solve_linear: singular matrix");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        Cx inv = cx_inv(A[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            Cx f = A[r][col] * inv;
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Cx> x(n, Cx(wp));
    for (long r = (long)n - 1; r >= 0; --r) {
        Cx s = b[r];
        for (size_t c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
        x[r] = s * cx_inv(A[r][r]);
    }
    return x;
}

Cx poly_eval(const std::vector<Cx>& coeffs, const Cx& z) {
    Cx acc(z.prec());
    for (long j = (long)coeffs.size() - 1; j >= 0; --j) acc = acc * z + coeffs[j];
    return acc;
}

Cx poly_eval_deriv(const std::vector<Cx>& coeffs, const Cx& z) {
    Cx acc(z.prec());
    for (long j = (long)coeffs.size() - 1; j >= 1; --j) acc = acc * z + coeffs[j] * j;
    return acc;
}

std::vector<Cx> poly_roots(const std::vector<Cx>& coeffs, long max_iter) {
    // strip trailing zeros, then make monic
    std::vector<Cx> c = coeffs;
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    long deg = (long)c.size() - 1;
    if (deg < 1) return {};
    mpfr_prec_t wp = c[0].prec();
    Cx lead_inv = cx_inv(c.back());
    for (auto& v : c) v *= lead_inv;

    // radius scale from the coefficient bound
    Real R(1.0, wp);
    for (long j = 0; j < deg; ++j) {
        Real m = abs(c[j]) + Real(1.0, wp);
        if (m > R) R = m;
    }
    double r0 = std::pow(std::min(1e30, R.to_double()), 1.0 / deg) * 0.7 + 0.3;

    std::vector<Cx> z(deg, Cx(wp));
    for (long k = 0; k < deg; ++k) {
        double ang = 2.0 * 3.14159265358979 * k / deg + 0.41;
        z[k] = Cx(r0 * std::cos(ang), r0 * std::sin(ang), wp);
    }
    Real tol = Real::pow10(-(long)((double)wp / 3.4), wp);
    for (long it = 0; it < max_iter; ++it) {
        Real worst(wp);
        for (long k = 0; k < deg; ++k) {
            Cx num = poly_eval(c, z[k]);
            Cx den(1.0, 0.0, wp);
            for (long j = 0; j < deg; ++j)
                if (j != k) den *= z[k] - z[j];
            if (den.is_zero()) {
                z[k] += Cx(1e-3, 1e-3, wp);
                worst = Real(1.0, wp);
                continue;
            }
            Cx delta = num * cx_inv(den);
            z[k] -= delta;
            Real m = abs(delta) / (abs(z[k]) + Real(1.0, wp));
            if (m > worst) worst = m;
        }
        if (worst < tol) break;
    }
    return z;
}

void gauss_legendre(long n, mpfr_prec_t wp, std::vector<Real>& nodes,
                    std::vector<Real>& weights) {
    nodes.assign(n, Real(wp));
    weights.assign(n, Real(wp));
    long half = (n + 1) / 2;
    for (long k = 0; k < half; ++k) {
        // Newton from the Chebyshev-based seed; quadratic convergence
        double seed = std::cos(3.14159265358979 * (k + 0.75) / (n + 0.5));
        Real x(seed, wp);
        Real dp(wp);
        for (int it = 0; it < 200; ++it) {
            // Legendre recurrence for P_n(x) and P_{n-1}(x)
            Real p0(1.0, wp), p1 = x;
            for (long j = 2; j <= n; ++j) {
                Real p2 = (x * p1 * (2 * j - 1) - p0 * (j - 1)) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = (x * p1 - p0) * n / (x * x - Real(1.0, wp));
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < Real::pow10(-(long)((double)wp / 3.2), wp)) break;
        }
        Real w = Real(2.0, wp) / ((Real(1.0, wp) - x * x) * dp * dp);
        nodes[n - 1 - k] = x;
        weights[n - 1 - k] = w;
        nodes[k] = -x;
        weights[k] = w;
    }
}

std::array<Real, 3> lsq3(const std::vector<std::array<Real, 3>>& rows,
                         const std::vector<Real>& rhs) {
    if (rows.size() != rhs.size() || rows.size() < 3)
        throw DomainError("lsq3: need at least 3 samples");
    mpfr_prec_t wp = rhs[0].prec();
    Real M[3][3];
    Real v[3];
    for (int i = 0; i < 3; ++i) {
        v[i] = Real(wp);
        for (int j = 0; j < 3; ++j) M[i][j] = Real(wp);
    }
    for (size_t r = 0; r < rows.size(); ++r) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) M[i][j] += rows[r][i] * rows[r][j];
            v[i] += rows[r][i] * rhs[r];
        }
    }
    // 3x3 elimination with partial pivoting
    int idx[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (abs(M[idx[r]][col]) > abs(M[idx[piv]][col])) piv = r;
        std::swap(idx[col], idx[piv]);
        if (M[idx[col]][col].is_zero()) throw DegeneracyError("lsq3: singular normal matrix");
        for (int r = col + 1; r < 3; ++r) {
            Real f = M[idx[r]][col] / M[idx[col]][col];
            for (int c = col; c < 3; ++c) M[idx[r]][c] -= f * M[idx[col]][c];
            v[idx[r]] -= f * v[idx[col]];
        }
    }
    std::array<Real, 3> x{Real(wp), Real(wp), Real(wp)};
    for (int r = 2; r >= 0; --r) {
        Real s = v[idx[r]];
        for (int c = r + 1; c < 3; ++c) s -= M[idx[r]][c] * x[c];
        x[r] = s / M[idx[r]][r];
    }
    return x;
}

} // namespace pi1
