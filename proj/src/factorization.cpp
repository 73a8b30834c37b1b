#include "th/factorization.hpp"

#include <algorithm>
#include <cmath>

namespace th {

namespace {

void add_term(std::vector<FactorTerm>& terms, FactorTerm::Base base, cplx exponent,
              double theta_r) {
    if (exponent == cplx(0.0)) return;
    terms.push_back({base, exponent, canonical_angle(theta_r)});
}

cplx eval_terms(const std::vector<FactorTerm>& terms, double theta) {
    cplx v = 1.0;
    for (const auto& t : terms) v *= t.eval(theta);
    return v;
}

cplx eval_terms_inv(const std::vector<FactorTerm>& terms, double theta) {
    cplx v = 1.0;
    for (const auto& t : terms) v *= t.eval(theta);
    return 1.0 / v;
}

}  // namespace

cplx FactorTerm::base_value(double theta) const {
    switch (base) {
        case Base::OneMinusTrInvT:
            return 1.0 - std::polar(1.0, theta_r - theta);
        case Base::OneMinusInvTInvTr:
            return 1.0 - std::polar(1.0, -(theta + theta_r));
        case Base::OneMinusTInvTr:
            return 1.0 - std::polar(1.0, theta - theta_r);
        case Base::OneMinusTTr:
            return 1.0 - std::polar(1.0, theta + theta_r);
        case Base::AbsOneMinusT:
            return 2.0 * std::fabs(std::sin(0.5 * theta));
        case Base::AbsOnePlusT:
            return 2.0 * std::fabs(std::cos(0.5 * theta));
    }
    return 1.0;
}

cplx FactorTerm::eval(double theta) const { return std::pow(base_value(theta), exponent); }

std::vector<std::pair<double, cplx>> FactorTerm::singular_points() const {
    switch (base) {
        case Base::OneMinusTrInvT:
        case Base::OneMinusTInvTr:
            return {{canonical_angle(theta_r), exponent}};
        case Base::OneMinusInvTInvTr:
        case Base::OneMinusTTr:
            return {{canonical_angle(-theta_r), exponent}};
        case Base::AbsOneMinusT:
            return {{0.0, exponent}};
        case Base::AbsOnePlusT:
            return {{kPi, exponent}};
    }
    return {};
}

cplx AsymmetricFactorization::eval_minus(double theta) const {
    cplx v = gamma * eval_terms(minus_terms, theta);
    if (smooth_minus) v *= std::exp(smooth_minus->log_part.eval_angle(theta));
    return v;
}

cplx AsymmetricFactorization::eval_minus_inv(double theta) const {
    return 1.0 / eval_minus(theta);
}

cplx AsymmetricFactorization::eval_zero(double theta) const {
    cplx v = eval_terms(zero_terms, theta);
    if (smooth_zero) v *= std::exp(smooth_zero->log_part.eval_angle(theta));
    return v;
}

cplx AsymmetricFactorization::eval_zero_inv(double theta) const { return 1.0 / eval_zero(theta); }

cplx AsymmetricFactorization::eval(double theta) const {
    return eval_minus(theta) * std::polar(1.0, kappa * theta) * eval_zero(theta);
}

std::vector<double> AsymmetricFactorization::singular_angles() const {
    std::vector<double> out;
    auto collect = [&out](const std::vector<FactorTerm>& terms) {
        for (const auto& t : terms)
            for (const auto& [ang, ex] : t.singular_points()) out.push_back(ang);
    };
    collect(minus_terms);
    collect(zero_terms);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
              out.end());
    return out;
}

AsymmetricFactorization AsymmetricFactorization::rescaled(cplx scale) const {
    AsymmetricFactorization r = *this;
    r.gamma *= scale;
    if (!r.smooth_zero) r.smooth_zero = SmoothPart{};
    LaurentPolynomial g = r.smooth_zero->log_part;
    g.set_coeff(0, g.coeff(0) - std::log(scale));
    r.smooth_zero->log_part = g;
    if (r.smooth_zero->log_part.is_zero() && r.smooth_zero->winding == 0) r.smooth_zero.reset();
    return r;
}

cplx AntisymmetricFactorization::eval_minus(double theta) const {
    cplx v = gamma * eval_terms(minus_terms, theta);
    if (smooth_minus) v *= std::exp(smooth_minus->log_part.eval_angle(theta));
    return v;
}

cplx AntisymmetricFactorization::eval(double theta) const {
    return eval_minus(theta) * std::polar(1.0, 2.0 * kappa * theta) / eval_minus(-theta);
}

namespace {

cplx declared_beta_at(const PCSymbol& sym, double angle) {
    if (const JumpFactor* j = sym.jump_at(angle)) return j->beta;
    return 0.0;
}

AsymmetricFactorization build_from_selection(const PCSymbol& sym, const ParameterSelection& sel,
                                             bool const_into_gamma) {
    AsymmetricFactorization F;
    F.p = sym.p;

    add_term(F.minus_terms, FactorTerm::Base::OneMinusTrInvT, -2.0 * sel.beta_plus, 0.0);
    add_term(F.minus_terms, FactorTerm::Base::OneMinusTrInvT, -2.0 * sel.beta_minus, kPi);
    add_term(F.zero_terms, FactorTerm::Base::AbsOneMinusT, 2.0 * sel.beta_plus, 0.0);
    add_term(F.zero_terms, FactorTerm::Base::AbsOnePlusT, 2.0 * sel.beta_minus, kPi);
    for (const auto& ps : sel.pairs) {
        cplx sigma = ps.beta_p + ps.beta_m;
        add_term(F.minus_terms, FactorTerm::Base::OneMinusTrInvT, -sigma, ps.theta);
        add_term(F.minus_terms, FactorTerm::Base::OneMinusInvTInvTr, -sigma, ps.theta);
        add_term(F.zero_terms, FactorTerm::Base::OneMinusTInvTr, ps.beta_p, ps.theta);
        add_term(F.zero_terms, FactorTerm::Base::OneMinusInvTInvTr, ps.beta_p, ps.theta);
        add_term(F.zero_terms, FactorTerm::Base::OneMinusTTr, ps.beta_m, ps.theta);
        add_term(F.zero_terms, FactorTerm::Base::OneMinusTrInvT, ps.beta_m, ps.theta);
    }

    // b = sym / psi_selected is continuous: the integer shifts k between the
    // declared and selected exponents turn each residual factor into
    // t^k e^{-i k (theta_r + pi)}.  Collect windings and constants.
    long shifts = 0;
    cplx cprod = 1.0;
    {
        long k0 = std::lround((declared_beta_at(sym, 0.0) - sel.beta_plus).real());
        shifts += k0;
        if (k0 % 2 != 0) cprod = -cprod;  // e^{-i k pi}
        long kpi = std::lround((declared_beta_at(sym, kPi) - sel.beta_minus).real());
        shifts += kpi;  // e^{-i k 2 pi} = 1
        for (const auto& ps : sel.pairs) {
            long kp = std::lround((declared_beta_at(sym, ps.theta) - ps.beta_p).real());
            long km = std::lround((declared_beta_at(sym, kTwoPi - ps.theta) - ps.beta_m).real());
            shifts += kp + km;
            cprod *= std::polar(1.0, -static_cast<double>(kp) * (ps.theta + kPi));
            cprod *= std::polar(1.0, -static_cast<double>(km) * (kTwoPi - ps.theta + kPi));
        }
    }
    F.kappa = sym.smooth.winding + static_cast<int>(shifts);

    LaurentPolynomial g_b = sym.smooth.log_part;
    if (cprod != cplx(1.0)) g_b.set_coeff(0, g_b.coeff(0) + std::log(cprod));

    // Split exp(g_b) into an exterior-analytic factor and an even factor:
    // twice the negative-degree part of the odd component goes to phi_minus,
    // the remainder g_b - m_part has coefficients c_{|n|} and is even.
    LaurentPolynomial odd = g_b.odd_part();
    LaurentPolynomial m_part = odd.restrict_degrees(odd.min_degree(), -1);
    m_part *= cplx(2.0);
    LaurentPolynomial e_part = g_b - m_part;

    if (const_into_gamma) {
        cplx c0 = e_part.coeff(0);
        if (c0 != cplx(0.0)) {
            F.gamma = std::exp(c0);
            e_part.set_coeff(0, 0.0);
        }
    }
    if (!m_part.is_zero()) F.smooth_minus = SmoothPart{0, m_part};
    if (!e_part.is_zero()) F.smooth_zero = SmoothPart{0, e_part};
    return F;
}

}  // namespace

AsymmetricFactorization factor_pc(const PCSymbol& sym) {
    FredholmReport rep = analyze(sym);
    if (!rep.is_fredholm) throw NotFredholmError("factor_pc: symbol is not Fredholm");
    AsymmetricFactorization F = build_from_selection(sym, *rep.selection, false);
    if (F.kappa != rep.kappa)
        throw NumericFailureError("factor_pc: structural kappa disagrees with analyze");
    return F;
}

AsymmetricFactorization factor_pc_alternative(const PCSymbol& sym,
                                              const std::vector<int>& pair_shifts) {
    FredholmReport rep = analyze(sym);
    if (!rep.is_fredholm) throw NotFredholmError("factor_pc_alternative: symbol is not Fredholm");
    ParameterSelection sel = *rep.selection;
    for (size_t i = 0; i < sel.pairs.size() && i < pair_shifts.size(); ++i) {
        sel.pairs[i].beta_p += static_cast<double>(pair_shifts[i]);
        sel.pairs[i].beta_m -= static_cast<double>(pair_shifts[i]);
    }
    return build_from_selection(sym, sel, true);
}

CoeffWindow factor_fourier_window(const std::function<cplx(double)>& w,
                                  const std::vector<FactorTerm>& terms,
                                  const std::vector<std::pair<double, cplx>>& extra_weight_exp,
                                  int nmin, int nmax, QuadReport* report) {
    std::vector<Breakpoint> breaks;
    for (const auto& t : terms)
        for (const auto& [ang, ex] : t.singular_points()) breaks.push_back({ang, ex, ex});
    for (const auto& [ang, ex] : extra_weight_exp)
        breaks.push_back({canonical_angle(ang), ex, ex});
    return fourier_window(w, std::move(breaks), nmin, nmax, QuadOptions{}, report);
}

ValidationReport validate_factorization(const AsymmetricFactorization& fact, const PCSymbol& sym,
                                        int grid) {
    if (grid < 256) throw SpecParseError("validate_factorization: grid must be >= 256");
    ValidationReport rep;
    rep.grid = grid;

    std::vector<double> excl = fact.singular_angles();
    for (double a : sym.jump_angles()) excl.push_back(a);

    auto excluded = [&excl](double theta) {
        for (double a : excl)
            if (std::fabs(std::remainder(theta - a, kTwoPi)) < 1e-3) return true;
        return false;
    };

    for (int k = 0; k < grid; ++k) {
        double theta = kTwoPi * (k + 0.5) / grid;
        if (excluded(theta) || excluded(-theta)) continue;
        rep.max_residual =
            std::max(rep.max_residual, std::abs(eval(sym, theta) - fact.eval(theta)));
        rep.evenness_defect = std::max(
            rep.evenness_defect, std::abs(fact.eval_zero(theta) - fact.eval_zero(-theta)));
    }

    const int trunc = rep.truncation;
    QuadReport q1, q2;
    {
        auto w1 = [&fact](double theta) {
            return (1.0 + std::polar(1.0, -theta)) * fact.eval_minus(theta);
        };
        CoeffWindow c1 = factor_fourier_window(w1, fact.minus_terms, {{kPi, 1.0}}, -4, trunc, &q1);
        for (int n = 1; n <= trunc; ++n)
            rep.support_defect_minus = std::max(rep.support_defect_minus, std::abs(c1.at(n)));
    }
    {
        std::vector<FactorTerm> inv_terms = fact.minus_terms;
        for (auto& t : inv_terms) t.exponent = -t.exponent;
        auto w2 = [&fact](double theta) {
            return (1.0 - std::polar(1.0, -theta)) * fact.eval_minus_inv(theta);
        };
        CoeffWindow c2 = factor_fourier_window(w2, inv_terms, {{0.0, 1.0}}, -4, trunc, &q2);
        for (int n = 1; n <= trunc; ++n)
            rep.support_defect_minus_inv =
                std::max(rep.support_defect_minus_inv, std::abs(c2.at(n)));
    }
    rep.quadrature_defect = std::max(q1.defect, q2.defect);
    return rep;
}

AntisymmetricFactorization antisymmetric_from_asymmetric(const AsymmetricFactorization& fact) {
    AntisymmetricFactorization a;
    a.minus_terms = fact.minus_terms;
    a.smooth_minus = fact.smooth_minus;
    a.gamma = fact.gamma;
    a.kappa = fact.kappa;
    a.p = fact.p;
    return a;
}

UniquenessReport uniqueness_check(const AsymmetricFactorization& f1,
                                  const AsymmetricFactorization& f2, int grid) {
    UniquenessReport rep;
    rep.same_kappa = f1.kappa == f2.kappa;

    std::vector<double> excl = f1.singular_angles();
    for (double a : f2.singular_angles()) excl.push_back(a);

    std::vector<double> re, im;
    std::vector<std::pair<double, cplx>> kept;
    for (int k = 0; k < grid; ++k) {
        double theta = kTwoPi * (k + 0.5) / grid;
        bool skip = false;
        for (double a : excl)
            if (std::fabs(std::remainder(theta - a, kTwoPi)) < 1e-3) {
                skip = true;
                break;
            }
        if (skip) continue;
        cplx r = f1.eval_minus(theta) / f2.eval_minus(theta);
        re.push_back(r.real());
        im.push_back(r.imag());
        kept.push_back({theta, r});
    }
    if (re.empty()) throw NumericFailureError("uniqueness_check: no usable grid points");
    auto median = [](std::vector<double>& v) {
        std::nth_element(v.begin(), v.begin() + static_cast<long>(v.size() / 2), v.end());
        return v[v.size() / 2];
    };
    rep.gamma = cplx(median(re), median(im));
    for (const auto& [theta, r] : kept) rep.defect = std::max(rep.defect, std::abs(r - rep.gamma));
    return rep;
}

bool hardy_membership_windows_ok(const ParameterSelection& sel, double p) {
    double q = p / (p - 1.0);
    double bp = sel.beta_plus.real(), bm = sel.beta_minus.real();
    if (!(-2.0 * bp > -1.0 / p)) return false;
    if (!(1.0 - 2.0 * bm > -1.0 / p)) return false;
    if (!(1.0 + 2.0 * bp > -1.0 / q)) return false;
    if (!(2.0 * bm > -1.0 / q)) return false;
    for (const auto& ps : sel.pairs) {
        double s = (ps.beta_p + ps.beta_m).real();
        if (!(-s > -1.0 / p)) return false;
        if (!(s > -1.0 / q)) return false;
    }
    return true;
}

}  // namespace th
