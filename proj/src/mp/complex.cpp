#include "mp/complex.hpp"

namespace pi1 {

Cx cx_exp(const Cx& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Cx cx_log(const Cx& z) {
    return {log(abs(z)), arg(z)};
}

Cx cx_sqrt(const Cx& z) {
    if (z.im.is_zero() && z.re.sign() >= 0) return Cx(sqrt(z.re), Real(z.prec()));
    Real r = abs(z);
    Real half(0.5, z.prec());
    Real u = sqrt((r + z.re) * half);
    Real v = sqrt((r - z.re) * half);
    if (z.im.sign() < 0) v = -v;
    return {u, v};
}

Cx cx_inv(const Cx& z) {
    Real d = z.re * z.re + z.im * z.im;
    return {z.re / d, -z.im / d};
}

Cx cx_powi(const Cx& z, long n) {
    if (n == 0) return Cx(1.0, 0.0, z.prec());
    bool inv = n < 0;
    unsigned long k = inv ? -(unsigned long)n : (unsigned long)n;
    Cx base = z, acc(1.0, 0.0, z.prec());
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return inv ? cx_inv(acc) : acc;
}

} // namespace pi1
