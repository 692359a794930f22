#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace contin {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_finite(Cx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

enum class ErrorCode {
    OutOfDisk,
    Overflow,
    DegenerateOrder,
    InsufficientOrder,
    CenterMismatch,
    StalledLoop,
    SectorViolation,
    OverlapMismatch,
    NoConvergence,
    MultipleZero,
    PoleAtNonpositiveInteger,
    DomainViolation,
    InvariantViolation,
};

const char* error_code_name(ErrorCode c);

// true for conditions caused by bad inputs (CLI exit 1), false for numerical
// failures discovered mid-computation (CLI exit 2)
bool is_validation_error(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace contin
