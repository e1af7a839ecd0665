#pragma once

#include <mpfr.h>
#include <stdexcept>

namespace pi1 {

/// Requested precision for all numeric work.  Operations run at
/// digits+guard decimal digits internally; results are certified to
/// `digits`.  Passed explicitly everywhere; there is no global
/// precision state.
struct PrecisionContext {
    int digits = 60;
    int guard = 10;

    PrecisionContext() = default;
    explicit PrecisionContext(int d, int g = 10) : digits(d), guard(g) {
        if (digits < 15) throw std::invalid_argument("PrecisionContext: digits must be >= 15");
        if (guard < 0) throw std::invalid_argument("PrecisionContext: guard must be >= 0");
    }

    /// Working precision in bits (digits+guard decimal digits plus margin).
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>((digits + guard) * 3.3219280948873626 + 16.0);
    }
};

} // namespace pi1
