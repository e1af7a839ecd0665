#pragma once

#include <stdexcept>
#include <string>

namespace pi1 {

struct DomainError : std::runtime_error { using std::runtime_error::runtime_error; };
struct OverflowError : std::runtime_error { using std::runtime_error::runtime_error; };
struct RangeError : std::runtime_error { using std::runtime_error::runtime_error; };
struct DataError : std::runtime_error { using std::runtime_error::runtime_error; };
struct DegeneracyError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ContourError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ConsistencyError : std::runtime_error { using std::runtime_error::runtime_error; };
struct InconclusiveError : std::runtime_error { using std::runtime_error::runtime_error; };
struct BranchError : std::runtime_error { using std::runtime_error::runtime_error; };
struct TracingError : std::runtime_error { using std::runtime_error::runtime_error; };
struct PoleEncountered : std::runtime_error {
    double approx_re, approx_im;
    PoleEncountered(const std::string& m, double re, double im)
        : std::runtime_error(m), approx_re(re), approx_im(im) {}
};

} // namespace pi1
