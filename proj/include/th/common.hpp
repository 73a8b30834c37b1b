#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace th {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

/// Angle reduced to [0, 2*pi).
double canonical_angle(double theta);

/// Representative of x mod 1 in (-1/2, 1/2].
double principal_mod(double x);

/// Distance from x to the class c + Z, in [0, 1/2].
double circular_distance(double x, double c);

/// Representative of x mod 1 in the half-open window [upper-1, upper).
/// The genuine window of interest is open; callers must reject the
/// boundary value upper-1 themselves.
double window_representative(double x, double upper);

struct OnJumpError : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotFredholmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SpecParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace th
