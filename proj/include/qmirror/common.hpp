// Shared numeric conventions: complex scalar type, tolerance policy,
// and the error type raised when a construction invariant fails.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qmirror {

using cx = std::complex<double>;

// Construction-time invariants (normalization, unitarity, idempotence).
inline constexpr double construction_tol = 1e-12;

// Decomposition round-trips accumulate trig error; one looser notch.
inline constexpr double decompose_tol = 1e-10;

// Raised when a value fails a type invariant or a precondition.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(double x, const char* what) {
    if (!is_finite(x)) throw validation_error(std::string(what) + ": non-finite value");
}

inline void require_finite(cx z, const char* what) {
    if (!is_finite(z)) throw validation_error(std::string(what) + ": non-finite value");
}

} // namespace qmirror
