#include "th/symbol.hpp"

#include <algorithm>
#include <cmath>

namespace th {

cplx SmoothPart::eval_angle(double theta) const {
    return std::polar(1.0, winding * theta) * std::exp(log_part.eval_angle(theta));
}

SmoothPart SmoothPart::tilde() const { return {-winding, log_part.tilde()}; }

SmoothPart SmoothPart::inverse() const {
    LaurentPolynomial neg = log_part;
    neg *= cplx(-1.0);
    return {-winding, neg};
}

SmoothPart SmoothPart::rotate_pi() const {
    // b(-t) = (-1)^m t^m exp(g(-t)); the sign joins the log as i*pi*m mod 2i*pi.
    LaurentPolynomial g = log_part.rotate_pi();
    if (winding % 2 != 0) g.set_coeff(0, g.coeff(0) + cplx(0.0, kPi));
    return {winding, g};
}

SmoothPart SmoothPart::conj_symbol() const { return {-winding, log_part.conj_symbol()}; }

cplx JumpFactor::value_at(double theta_eval) const {
    double delta = canonical_angle(theta_eval - theta);
    if (delta == 0.0) throw OnJumpError("evaluation at a jump location");
    return std::exp(cplx(0.0, 1.0) * beta * (delta - kPi));
}

void PCSymbol::validate() const {
    if (!(p > 1.0) || !std::isfinite(p)) throw SpecParseError("p must satisfy 1 < p < infinity");
    for (size_t i = 0; i < jumps.size(); ++i) {
        double ti = canonical_angle(jumps[i].theta);
        for (size_t j = i + 1; j < jumps.size(); ++j)
            if (ti == canonical_angle(jumps[j].theta))
                throw SpecParseError("jump locations must be pairwise distinct");
    }
}

std::vector<double> PCSymbol::jump_angles() const {
    std::vector<double> a;
    a.reserve(jumps.size());
    for (const auto& j : jumps) a.push_back(canonical_angle(j.theta));
    return a;
}

const JumpFactor* PCSymbol::jump_at(double theta) const {
    double c = canonical_angle(theta);
    for (const auto& j : jumps)
        if (canonical_angle(j.theta) == c) return &j;
    return nullptr;
}

cplx eval(const PCSymbol& sym, double theta) {
    cplx v = sym.smooth.eval_angle(theta);
    for (const auto& j : sym.jumps) v *= j.value_at(theta);
    return v;
}

std::pair<cplx, cplx> one_sided_limits(const PCSymbol& sym, double theta) {
    double c = canonical_angle(theta);
    cplx plus = sym.smooth.eval_angle(c);
    cplx minus = plus;
    for (const auto& j : sym.jumps) {
        if (canonical_angle(j.theta) == c) {
            plus *= j.limit_above();
            minus *= j.limit_below();
        } else {
            cplx v = j.value_at(c);
            plus *= v;
            minus *= v;
        }
    }
    return {plus, minus};
}

cplx jump_ratio(const PCSymbol& sym, double theta) {
    // Analytically the smooth part and the continuous jump factors cancel.
    if (const JumpFactor* j = sym.jump_at(theta)) return j->ratio();
    return 1.0;
}

PCSymbol tilde(const PCSymbol& sym) {
    PCSymbol r;
    r.p = sym.p;
    r.smooth = sym.smooth.tilde();
    for (const auto& j : sym.jumps)
        r.jumps.push_back({canonical_angle(-j.theta), -j.beta});
    return r;
}

PCSymbol multiply(const PCSymbol& a, const PCSymbol& b) {
    if (a.p != b.p) throw SpecParseError("multiply: mismatched Hardy exponents");
    PCSymbol r;
    r.p = a.p;
    r.smooth.winding = a.smooth.winding + b.smooth.winding;
    r.smooth.log_part = a.smooth.log_part + b.smooth.log_part;
    r.jumps = a.jumps;
    for (const auto& j : b.jumps) {
        bool mergedin = false;
        for (auto& k : r.jumps) {
            if (canonical_angle(k.theta) == canonical_angle(j.theta)) {
                k.beta += j.beta;
                mergedin = true;
                break;
            }
        }
        if (!mergedin) r.jumps.push_back(j);
    }
    std::erase_if(r.jumps, [](const JumpFactor& j) { return j.beta == cplx(0.0); });
    return r;
}

PCSymbol inverse(const PCSymbol& sym) {
    PCSymbol r;
    r.p = sym.p;
    r.smooth = sym.smooth.inverse();
    for (const auto& j : sym.jumps) r.jumps.push_back({j.theta, -j.beta});
    return r;
}

PCSymbol rotate_pi(const PCSymbol& sym) {
    PCSymbol r;
    r.p = sym.p;
    r.smooth = sym.smooth.rotate_pi();
    for (const auto& j : sym.jumps)
        r.jumps.push_back({canonical_angle(j.theta - kPi), j.beta});
    return r;
}

PCSymbol conj_symbol(const PCSymbol& sym) {
    PCSymbol r;
    r.p = sym.p;
    r.smooth = sym.smooth.conj_symbol();
    for (const auto& j : sym.jumps) r.jumps.push_back({j.theta, -std::conj(j.beta)});
    return r;
}

CoeffWindow fourier_window(const PCSymbol& sym, int n_min, int n_max, QuadReport* report) {
    std::vector<Breakpoint> breaks;
    for (const auto& j : sym.jumps) breaks.push_back({canonical_angle(j.theta), 0.0, 0.0});
    auto f = [&sym](double theta) { return eval(sym, theta); };
    return fourier_window(f, std::move(breaks), n_min, n_max, QuadOptions{}, report);
}

std::vector<cplx> fourier_coeffs(const PCSymbol& sym, int n_min, int n_max, QuadReport* report) {
    return fourier_window(sym, n_min, n_max, report).data();
}

double max_modulus_on_grid(const PCSymbol& sym, int grid) {
    double m = 0.0;
    for (int k = 0; k < grid; ++k) {
        double theta = kTwoPi * (k + 0.5) / grid;
        if (sym.jump_at(theta)) continue;
        m = std::max(m, std::abs(eval(sym, theta)));
    }
    return m;
}

}  // namespace th
