#include "mp/real.hpp"

#include <cstdio>
#include <vector>

namespace pi1 {

std::string Real::str(int digits) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

} // namespace pi1
