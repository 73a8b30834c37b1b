#pragma once

#include <utility>
#include <vector>

#include "th/laurent.hpp"
#include "th/quadrature.hpp"

namespace th {

/// Continuous nonvanishing part  b(t) = t^winding * exp(g(t)).
/// The exp form makes the winding number exact by construction.
struct SmoothPart {
    int winding = 0;
    LaurentPolynomial log_part;

    cplx eval_angle(double theta) const;
    SmoothPart tilde() const;
    SmoothPart inverse() const;
    SmoothPart rotate_pi() const;
    SmoothPart conj_symbol() const;
    bool is_one() const { return winding == 0 && log_part.is_zero(); }
};

/// Canonical jump factor t_beta(e^{i(theta - theta_r)}) with
/// t_beta(e^{i theta}) = exp(i beta (theta - pi)) on 0 < theta < 2*pi.
struct JumpFactor {
    double theta = 0.0;  // canonical location in [0, 2*pi)
    cplx beta = 0.0;

    cplx value_at(double theta_eval) const;  // off the jump location
    cplx limit_above() const { return std::exp(cplx(0.0, -kPi) * beta); }
    cplx limit_below() const { return std::exp(cplx(0.0, kPi) * beta); }
    cplx ratio() const { return std::exp(cplx(0.0, kTwoPi) * beta); }
};

/// Piecewise continuous symbol on the circle for the Hardy space H^p:
/// smooth part times finitely many canonical jump factors.
struct PCSymbol {
    double p = 2.0;
    SmoothPart smooth;
    std::vector<JumpFactor> jumps;

    double q() const { return p / (p - 1.0); }
    void validate() const;  // p range and pairwise distinct jump locations
    std::vector<double> jump_angles() const;
    const JumpFactor* jump_at(double theta) const;  // canonical-exact match
};

cplx eval(const PCSymbol& sym, double theta);

/// (phi_plus, phi_minus): limits of phi(tau e^{i eps}) as eps -> +0 / -0
/// at tau = e^{i theta}, computed analytically from the structured form.
std::pair<cplx, cplx> one_sided_limits(const PCSymbol& sym, double theta);

/// phi_minus(tau) / phi_plus(tau); equals exp(2 pi i beta) at a stored jump.
cplx jump_ratio(const PCSymbol& sym, double theta);

PCSymbol tilde(const PCSymbol& sym);             // t -> 1/t
PCSymbol multiply(const PCSymbol& a, const PCSymbol& b);
PCSymbol inverse(const PCSymbol& sym);
PCSymbol rotate_pi(const PCSymbol& sym);         // t -> -t
PCSymbol conj_symbol(const PCSymbol& sym);

/// Fourier coefficients c_n, n in [n_min, n_max], by jump-aware panel
/// quadrature (Gauss-Legendre between consecutive jump locations).
std::vector<cplx> fourier_coeffs(const PCSymbol& sym, int n_min, int n_max,
                                 QuadReport* report = nullptr);
CoeffWindow fourier_window(const PCSymbol& sym, int n_min, int n_max,
                           QuadReport* report = nullptr);

double max_modulus_on_grid(const PCSymbol& sym, int grid);

}  // namespace th
