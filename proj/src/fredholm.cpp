#include "th/fredholm.hpp"

#include <algorithm>
#include <cmath>

namespace th {

namespace {

cplx declared_beta_at(const PCSymbol& sym, double angle) {
    if (const JumpFactor* j = sym.jump_at(angle)) return j->beta;
    return 0.0;
}

struct PairInfo {
    double theta;  // in (0, pi)
    cplx beta_p;   // declared at e^{i theta} (0 if absent)
    cplx beta_m;   // declared at e^{-i theta}
};

std::vector<PairInfo> collect_pairs(const PCSymbol& sym) {
    std::vector<PairInfo> pairs;
    for (const auto& j : sym.jumps) {
        double c = canonical_angle(j.theta);
        if (c == 0.0 || c == kPi) continue;
        double key = (c < kPi) ? c : kTwoPi - c;
        bool upper = c < kPi;
        bool merged = false;
        for (auto& pk : pairs) {
            if (std::fabs(pk.theta - key) < 1e-9) {
                (upper ? pk.beta_p : pk.beta_m) += j.beta;
                merged = true;
                break;
            }
        }
        if (!merged) {
            PairInfo pk{key, 0.0, 0.0};
            (upper ? pk.beta_p : pk.beta_m) = j.beta;
            pairs.push_back(pk);
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const PairInfo& a, const PairInfo& b) { return a.theta < b.theta; });
    return pairs;
}

ConditionEvaluation evaluate_condition(ConditionEvaluation::Point point, double theta, cplx beta,
                                       double forbidden) {
    ConditionEvaluation ce;
    ce.point = point;
    ce.theta = theta;
    ce.ratio = std::exp(cplx(0.0, kTwoPi) * beta);
    ce.normalized_arg = principal_mod(beta.real());
    ce.forbidden_class = forbidden;
    ce.distance_to_forbidden = circular_distance(beta.real(), forbidden);
    ce.boundary = ce.distance_to_forbidden <= kConditionBoundaryTol;
    ce.passes = !ce.boundary;
    return ce;
}

// Unique integer k with x - k in the open window (upper-1, upper).
long window_shift(double x, double upper) { return static_cast<long>(std::floor(x - upper)) + 1; }

// Unique integer k with x - k in (-1/2, 1/2].
long principal_shift(double x) { return static_cast<long>(std::ceil(x - 0.5)); }

}  // namespace

std::vector<ConditionEvaluation> check_conditions(const PCSymbol& sym) {
    std::vector<ConditionEvaluation> out;
    double p = sym.p;
    out.push_back(evaluate_condition(ConditionEvaluation::Point::One, 0.0,
                                     declared_beta_at(sym, 0.0), 1.0 / (2.0 * p)));
    out.push_back(evaluate_condition(ConditionEvaluation::Point::MinusOne, kPi,
                                     declared_beta_at(sym, kPi), 0.5 + 1.0 / (2.0 * p)));
    for (const auto& pk : collect_pairs(sym))
        out.push_back(evaluate_condition(ConditionEvaluation::Point::Pair, pk.theta,
                                         pk.beta_p + pk.beta_m, 1.0 / p));
    return out;
}

ParameterSelection select_parameters(const PCSymbol& sym) {
    auto conds = check_conditions(sym);
    for (const auto& c : conds)
        if (!c.passes)
            throw NotFredholmError("select_parameters: a jump condition fails or sits on a window boundary");

    double p = sym.p;
    ParameterSelection sel;

    cplx b0 = declared_beta_at(sym, 0.0);
    sel.beta_plus = b0 - static_cast<double>(window_shift(b0.real(), 1.0 / (2.0 * p)));

    cplx bpi = declared_beta_at(sym, kPi);
    sel.beta_minus = bpi - static_cast<double>(window_shift(bpi.real(), 0.5 + 1.0 / (2.0 * p)));

    for (const auto& pk : collect_pairs(sym)) {
        ParameterSelection::PairSelection ps;
        ps.theta = pk.theta;
        long kp = principal_shift(pk.beta_p.real());
        ps.beta_p = pk.beta_p - static_cast<double>(kp);
        double total = window_representative(pk.beta_p.real() + pk.beta_m.real(), 1.0 / p);
        long km = std::lround(pk.beta_m.real() - (total - ps.beta_p.real()));
        ps.beta_m = pk.beta_m - static_cast<double>(km);
        sel.pairs.push_back(ps);
    }
    return sel;
}

PCSymbol selected_jump_product(const ParameterSelection& sel, double p) {
    PCSymbol psi;
    psi.p = p;
    if (sel.beta_plus != cplx(0.0)) psi.jumps.push_back({0.0, sel.beta_plus});
    if (sel.beta_minus != cplx(0.0)) psi.jumps.push_back({kPi, sel.beta_minus});
    for (const auto& ps : sel.pairs) {
        if (ps.beta_p != cplx(0.0)) psi.jumps.push_back({ps.theta, ps.beta_p});
        if (ps.beta_m != cplx(0.0)) psi.jumps.push_back({kTwoPi - ps.theta, ps.beta_m});
    }
    return psi;
}

int winding_number(const std::function<cplx(double)>& f, const std::vector<double>& excluded,
                   int initial_grid) {
    const double delta = 1e-6;
    const int cap = 1 << 20;
    for (int n = std::max(initial_grid, 64); n <= cap; n *= 2) {
        std::vector<cplx> vals;
        vals.reserve(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            double theta = kTwoPi * (k + 0.5) / n;
            bool skip = false;
            for (double a : excluded)
                if (std::fabs(std::remainder(theta - a, kTwoPi)) < delta) {
                    skip = true;
                    break;
                }
            if (!skip) vals.push_back(f(theta));
        }
        if (vals.size() < 16) continue;
        double total = 0.0;
        bool ok = true;
        for (size_t i = 1; i <= vals.size(); ++i) {
            double d = std::arg(vals[i % vals.size()] / vals[i - 1]);
            if (std::fabs(d) >= kPi / 2.0) {
                ok = false;
                break;
            }
            total += d;
        }
        if (!ok) continue;
        double w = total / kTwoPi;
        double nearest = std::round(w);
        if (std::fabs(w - nearest) < 0.1) return static_cast<int>(nearest);
        throw NumericFailureError("winding_number: phase sum is not close to an integer");
    }
    throw NumericFailureError("winding_number: refinement cap exceeded");
}

int winding_number(const PCSymbol& continuous_sym, int initial_grid) {
    if (!continuous_sym.jumps.empty())
        throw SpecParseError("winding_number: symbol must be continuous (no jumps)");
    auto f = [&continuous_sym](double theta) { return eval(continuous_sym, theta); };
    return winding_number(f, {}, initial_grid);
}

FredholmReport analyze(const PCSymbol& sym) {
    FredholmReport rep;
    rep.conditions = check_conditions(sym);
    rep.is_fredholm = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                                  [](const ConditionEvaluation& c) { return c.passes; });
    rep.boundary_case = std::any_of(rep.conditions.begin(), rep.conditions.end(),
                                    [](const ConditionEvaluation& c) { return c.boundary; });
    if (!rep.is_fredholm) return rep;

    ParameterSelection sel = select_parameters(sym);
    PCSymbol psi = selected_jump_product(sel, sym.p);

    std::vector<double> excluded = sym.jump_angles();
    for (double a : psi.jump_angles()) excluded.push_back(a);
    auto quotient = [&sym, &psi](double theta) { return eval(sym, theta) / eval(psi, theta); };
    int wb = winding_number(quotient, excluded);

    // The quotient's winding is also available structurally from the
    // integer parameter shifts; disagreement means the numeric path failed.
    long shifts = std::lround((declared_beta_at(sym, 0.0) - sel.beta_plus).real()) +
                  std::lround((declared_beta_at(sym, kPi) - sel.beta_minus).real());
    auto pairs = collect_pairs(sym);
    for (size_t i = 0; i < pairs.size(); ++i) {
        shifts += std::lround((pairs[i].beta_p - sel.pairs[i].beta_p).real());
        shifts += std::lround((pairs[i].beta_m - sel.pairs[i].beta_m).real());
    }
    long kappa_struct = sym.smooth.winding + shifts;
    if (wb != kappa_struct)
        throw NumericFailureError("analyze: numeric winding disagrees with structural winding");

    rep.selection = sel;
    rep.winding_b = wb;
    rep.kappa = wb;
    rep.index = -wb;
    rep.dim_ker = std::max(0, -wb);
    rep.dim_coker = std::max(0, wb);
    rep.is_invertible = rep.is_fredholm && rep.index == 0;
    return rep;
}

ToeplitzReport toeplitz_analyze(const PCSymbol& sym) {
    ToeplitzReport rep;
    double p = sym.p;
    for (const auto& j : sym.jumps) {
        // Location tag reuses the pair slot; theta is the jump angle itself.
        rep.conditions.push_back(evaluate_condition(ConditionEvaluation::Point::Pair,
                                                    canonical_angle(j.theta), j.beta, 1.0 / p));
    }
    rep.is_fredholm = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                                  [](const ConditionEvaluation& c) { return c.passes; });
    if (!rep.is_fredholm) return rep;

    PCSymbol psi;
    psi.p = p;
    long shifts = 0;
    for (const auto& j : sym.jumps) {
        long k = window_shift(j.beta.real(), 1.0 / p);
        shifts += k;
        cplx bsel = j.beta - static_cast<double>(k);
        if (bsel != cplx(0.0)) psi.jumps.push_back({canonical_angle(j.theta), bsel});
    }
    std::vector<double> excluded = sym.jump_angles();
    auto quotient = [&sym, &psi](double theta) { return eval(sym, theta) / eval(psi, theta); };
    int wb = winding_number(quotient, excluded);
    if (wb != sym.smooth.winding + shifts)
        throw NumericFailureError("toeplitz_analyze: winding cross-check failed");
    rep.kappa = wb;
    rep.index = -wb;
    rep.is_invertible = wb == 0;
    return rep;
}

}  // namespace th
