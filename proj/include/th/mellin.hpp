#pragma once

#include <array>
#include <variant>
#include <vector>

#include "th/symbol.hpp"

namespace th {

/// Scalar Mellin symbols of the half-line singular integral operators:
/// s(z) = coth((z + i/p) pi),  n(z) = 1 / sinh((z + i/p) pi).
struct SN {
    cplx s;
    cplx n;
};
SN s_and_n(double z, double p);

struct TauOne {};
struct TauMinusOne {};
struct TauPair {
    double theta;  // in (0, pi); the pair is {e^{i theta}, e^{-i theta}}
};
using TauTag = std::variant<TauOne, TauMinusOne, TauPair>;

/// Local symbol b_tau(z) attached to a boundary point: scalar for
/// tau = +-1, 2x2 matrix-valued for a conjugate pair in the upper half.
struct LocalSymbol {
    enum class Kind { AtOne, AtMinusOne, Pair };
    Kind kind = Kind::AtOne;
    double p = 2.0;
    double theta = 0.0;  // pair angle; 0 resp. pi for the scalar kinds

    cplx fp_tau, fm_tau;        // phi_+(tau), phi_-(tau)
    cplx fp_taubar, fm_taubar;  // pair kinds only

    bool is_pair() const { return kind == Kind::Pair; }

    cplx scalar_value(double z) const;                  // tau = +-1
    std::array<std::array<cplx, 2>, 2> matrix_value(double z) const;  // pair
    cplx det_closed_form(double z) const;               // pair

    /// Analytic z -> +-infinity values: 2*phi_{+-} for scalars, the
    /// determinant of 2*diag(...) for pairs.
    cplx limit_value(bool plus_infinity) const;
    /// |b_tau| for scalars, |det b_tau| for pairs.
    double modulus(double z) const;
};

LocalSymbol local_symbol(const PCSymbol& sym, const TauTag& tag);

/// Closed-form determinant 2(1+s)phi_+(tau)phi_+(taubar) +
/// 2(1-s)phi_-(tau)phi_-(taubar), cross-checked against the direct 2x2
/// determinant (internal-consistency error on disagreement).
cplx det_local_symbol(const LocalSymbol& ls, double z);

struct SweepSample {
    double z = 0.0;
    cplx value;
    double modulus = 0.0;
    int endpoint = 0;  // +1 for the +inf row, -1 for -inf, 0 for finite z
};

struct SweepReport {
    std::vector<SweepSample> samples;  // ascending z, refined minimum included
    SweepSample pos_inf, neg_inf;
    double min_modulus = 0.0;
    double min_z = 0.0;
    bool min_at_infinity = false;
    bool nonvanishing(double threshold = 1e-6) const { return min_modulus > threshold; }
};

/// Samples the local symbol modulus on [-z_max, z_max] plus the analytic
/// endpoint limits; the coarse global minimum is refined by golden-section
/// search so boundary-case roots are certified below threshold.
SweepReport sweep_nonvanishing(const LocalSymbol& ls, double z_max = 12.0, int steps = 2048);

}  // namespace th
