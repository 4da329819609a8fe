#pragma once

#include <stdexcept>

namespace qcong {

// Bad arguments: even Jacobi modulus, zero B, composite ell, out-of-range t, ...
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A hypothesis the operation needs does not hold for the given parameters.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stored series precision (or numeric term count) is too small for the request.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact identity that must hold failed; points at a formula transcription bug.
struct diagnostic_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace qcong
