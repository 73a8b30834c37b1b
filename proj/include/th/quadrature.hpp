#pragma once

#include <functional>
#include <vector>

#include "th/common.hpp"

namespace th {

/// A point on [0, 2*pi) where the integrand is non-smooth.  Near the point
/// the integrand behaves like C * delta^exp_above as theta -> theta+ and
/// like C' * delta^exp_below as theta -> theta-  (delta = |theta - point|).
/// Plain jump discontinuities use exponent 0 on both sides.
struct Breakpoint {
    double theta = 0.0;
    cplx exp_above = 0.0;
    cplx exp_below = 0.0;
};

struct QuadOptions {
    int gl_order = 32;
    double osc_budget = 30.0;    // max |n| * panel length
    double min_resolution = 0.8; // max panel length regardless of n
    // Leftover length at singular endpoints.  Below ~1e-8 the angle
    // subtraction near the singular point loses more accuracy to
    // cancellation than the shorter power-law tail gains.
    double grade_floor = 1e-8;
    double tol = 1e-11;
    int max_rounds = 3;          // refinement rounds of the convergence check
};

struct QuadReport {
    double defect = 0.0;  // max coefficient change in the last refinement
    long nodes = 0;
    bool converged = true;
};

/// Dense window of Fourier coefficients c_n, n in [nmin, nmax].
class CoeffWindow {
public:
    CoeffWindow() = default;
    CoeffWindow(int nmin, std::vector<cplx> c) : nmin_(nmin), c_(std::move(c)) {}

    int nmin() const { return nmin_; }
    int nmax() const { return nmin_ + static_cast<int>(c_.size()) - 1; }
    cplx at(int n) const {
        if (c_.empty() || n < nmin_ || n > nmax()) return 0.0;
        return c_[static_cast<size_t>(n - nmin_)];
    }
    const std::vector<cplx>& data() const { return c_; }

private:
    int nmin_ = 0;
    std::vector<cplx> c_;
};

/// Computes c_n = (1/2pi) Int_0^{2pi} f(theta) e^{-i n theta} dtheta for all
/// n in [nmin, nmax].  Panels are split at the breakpoints, subdivided for
/// the oscillation of the largest |n|, geometrically graded into singular
/// endpoints, and closed with an analytic power-law tail correction.
CoeffWindow fourier_window(const std::function<cplx(double)>& f,
                           std::vector<Breakpoint> breaks, int nmin, int nmax,
                           const QuadOptions& opt = {}, QuadReport* report = nullptr);

struct GaussLegendre {
    std::vector<double> x;  // nodes on (-1, 1)
    std::vector<double> w;
};
const GaussLegendre& gauss_legendre(int order);

}  // namespace th
