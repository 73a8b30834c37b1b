#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "th/symbol.hpp"

namespace th {

/// One evaluated jump condition at a boundary point:
/// (f.38) at tau=1, (f.39) at tau=-1, (f.40) at a conjugate pair.
struct ConditionEvaluation {
    enum class Point { One, MinusOne, Pair };
    Point point = Point::One;
    double theta = 0.0;  // pair angle in (0, pi); 0 resp. pi otherwise
    cplx ratio = 1.0;
    double normalized_arg = 0.0;   // (1/2pi) arg(ratio), principal in (-1/2, 1/2]
    double forbidden_class = 0.0;  // 1/(2p), 1/2 + 1/(2p), or 1/p, as a class mod 1
    double distance_to_forbidden = 0.0;
    bool passes = false;
    bool boundary = false;  // within tolerance of the forbidden class
};

/// Jump parameters placed in the admissible windows:
/// Re beta+ in (-1/2 - 1/(2q), 1/(2p)), Re beta- in (-1/(2q), 1/2 + 1/(2p)),
/// Re(beta_r+ + beta_r-) in (-1/q, 1/p).
struct ParameterSelection {
    cplx beta_plus = 0.0;
    cplx beta_minus = 0.0;
    struct PairSelection {
        double theta = 0.0;  // in (0, pi)
        cplx beta_p = 0.0;   // at e^{i theta}
        cplx beta_m = 0.0;   // at e^{-i theta}
    };
    std::vector<PairSelection> pairs;
};

struct FredholmReport {
    std::vector<ConditionEvaluation> conditions;
    bool is_fredholm = false;
    bool boundary_case = false;
    std::optional<ParameterSelection> selection;
    int winding_b = 0;
    int kappa = 0;
    int index = 0;
    int dim_ker = 0;
    int dim_coker = 0;
    bool is_invertible = false;
};

/// Boundary tolerance: a normalized argument within this distance of the
/// forbidden class is reported not-Fredholm with the boundary flag set.
inline constexpr double kConditionBoundaryTol = 1e-9;

std::vector<ConditionEvaluation> check_conditions(const PCSymbol& sym);

/// Preconditions: all conditions pass.  Selected exponents differ from the
/// declared ones by exact integers, so exp(2 pi i beta) reproduces the
/// jump ratios to rounding.
ParameterSelection select_parameters(const PCSymbol& sym);

/// The jump model psi built from a selection (the explicit product of
/// canonical jump factors at 0, pi and the conjugate pairs).
PCSymbol selected_jump_product(const ParameterSelection& sel, double p);

/// Phase-accumulation winding number of a continuous nonvanishing function
/// given by an evaluator, excluding delta-neighbourhoods of the listed
/// angles; refines until every increment is < pi/2 (cap 2^20 points).
int winding_number(const std::function<cplx(double)>& f, const std::vector<double>& excluded,
                   int initial_grid = 4096);

/// Structural overload: requires an empty jump list.
int winding_number(const PCSymbol& continuous_sym, int initial_grid = 4096);

FredholmReport analyze(const PCSymbol& sym);

/// Classical Toeplitz-only mode: per-jump window -1/q < Re beta_r < 1/p,
/// forbidden class 1/p, kappa from the winding of the quotient.
struct ToeplitzReport {
    std::vector<ConditionEvaluation> conditions;
    bool is_fredholm = false;
    int kappa = 0;
    int index = 0;
    bool is_invertible = false;
};
ToeplitzReport toeplitz_analyze(const PCSymbol& sym);

}  // namespace th
