#pragma once

#include <optional>
#include <vector>

#include "th/fredholm.hpp"
#include "th/symbol.hpp"

namespace th {

/// One structured factor (base)^exponent of the asymmetric factorization,
/// evaluated with the principal branch (cut along [1, infinity) in the
/// base variable); the |.| bases are even real functions.
struct FactorTerm {
    enum class Base {
        OneMinusTrInvT,    // 1 - t_r t^{-1}      (vanishes at t = t_r)
        OneMinusInvTInvTr, // 1 - t^{-1} t_r^{-1} (vanishes at t = 1/t_r)
        OneMinusTInvTr,    // 1 - t t_r^{-1}      (vanishes at t = t_r)
        OneMinusTTr,       // 1 - t t_r           (vanishes at t = 1/t_r)
        AbsOneMinusT,      // |1 - t| = 2|sin(theta/2)|
        AbsOnePlusT        // |1 + t| = 2|cos(theta/2)|
    };
    Base base = Base::AbsOneMinusT;
    cplx exponent = 0.0;
    double theta_r = 0.0;  // location of t_r (ignored by the |.| bases)

    cplx base_value(double theta) const;
    cplx eval(double theta) const;  // base^exponent, principal branch
    /// Angles where this term is singular or vanishing, with the local
    /// power-law exponents it contributes there.
    std::vector<std::pair<double, cplx>> singular_points() const;
};

/// phi = phi_minus * t^kappa * phi_zero with phi_minus analytic-exterior up
/// to the (1 +- t^{-1}) weights and phi_zero even.  Both factors are stored
/// as structured products plus an absorbed smooth exponential.
struct AsymmetricFactorization {
    std::vector<FactorTerm> minus_terms;
    int kappa = 0;
    std::vector<FactorTerm> zero_terms;
    std::optional<SmoothPart> smooth_minus;  // exp factor inside phi_minus
    std::optional<SmoothPart> smooth_zero;   // even exp factor inside phi_zero
    cplx gamma = 1.0;                        // scalar on phi_minus, 1/gamma on phi_zero
    double p = 2.0;

    cplx eval_minus(double theta) const;
    cplx eval_minus_inv(double theta) const;
    cplx eval_zero(double theta) const;
    cplx eval_zero_inv(double theta) const;
    cplx eval(double theta) const;  // phi_minus e^{i kappa theta} phi_zero

    std::vector<double> singular_angles() const;
    AsymmetricFactorization rescaled(cplx scale) const;
};

/// F = phi phitilde^{-1} = phi_minus t^{2 kappa} phitilde_minus^{-1}.
struct AntisymmetricFactorization {
    std::vector<FactorTerm> minus_terms;
    std::optional<SmoothPart> smooth_minus;
    cplx gamma = 1.0;
    int kappa = 0;
    double p = 2.0;

    cplx eval_minus(double theta) const;
    cplx eval(double theta) const;
};

/// Explicit construction from the selected jump parameters (the canonical
/// two-sided split of each jump factor) with the smooth part absorbed as an
/// exterior-analytic exponential in phi_minus and an even exponential in
/// phi_zero.  Requires a Fredholm symbol.
AsymmetricFactorization factor_pc(const PCSymbol& sym);

/// Alternative admissible construction: conjugate-pair splits shifted by
/// the given integers (the sums are preserved) and the constant term of the
/// smooth log moved into gamma.  Used by the uniqueness checks.
AsymmetricFactorization factor_pc_alternative(const PCSymbol& sym,
                                              const std::vector<int>& pair_shifts);

struct ValidationReport {
    double max_residual = 0.0;        // |phi - phi_minus t^kappa phi_zero| on the grid
    double evenness_defect = 0.0;     // |phi_zero(theta) - phi_zero(-theta)|
    double support_defect_minus = 0.0;      // positive-degree mass of (1+t^{-1}) phi_minus
    double support_defect_minus_inv = 0.0;  // positive-degree mass of (1-t^{-1}) phi_minus^{-1}
    double quadrature_defect = 0.0;
    int grid = 0;
    int truncation = 512;
};
ValidationReport validate_factorization(const AsymmetricFactorization& fact, const PCSymbol& sym,
                                        int grid);

AntisymmetricFactorization antisymmetric_from_asymmetric(const AsymmetricFactorization& fact);

struct UniquenessReport {
    bool same_kappa = false;
    cplx gamma = 0.0;    // median of phi_minus^{(1)} / phi_minus^{(2)} over the grid
    double defect = 0.0; // max deviation of the ratio from gamma
};
UniquenessReport uniqueness_check(const AsymmetricFactorization& f1,
                                  const AsymmetricFactorization& f2, int grid = 1024);

/// The Hardy-membership window inequalities on the selected parameters,
/// checked symbolically (not numerically).
bool hardy_membership_windows_ok(const ParameterSelection& sel, double p);

/// Quadrature Fourier window of w(theta) = weight(theta) * product, with
/// grading driven by the terms' singular exponents.  `extra_weight_exp`
/// lists additional (angle, exponent) power factors contributed by the
/// weight, e.g. (1 - t^{-1}) adds exponent 1 at angle 0.
CoeffWindow factor_fourier_window(const std::function<cplx(double)>& w,
                                  const std::vector<FactorTerm>& terms,
                                  const std::vector<std::pair<double, cplx>>& extra_weight_exp,
                                  int nmin, int nmax, QuadReport* report = nullptr);

}  // namespace th
