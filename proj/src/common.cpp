#include "th/common.hpp"

#include <cmath>

namespace th {

double canonical_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // guard against fmod rounding at the seam
    return r;
}

double principal_mod(double x) {
    double r = std::remainder(x, 1.0);  // in [-1/2, 1/2]
    if (r <= -0.5) r += 1.0;
    return r;
}

double circular_distance(double x, double c) {
    return std::fabs(std::remainder(x - c, 1.0));
}

double window_representative(double x, double upper) {
    double k = std::floor(x - (upper - 1.0));
    return x - k;
}

}  // namespace th
