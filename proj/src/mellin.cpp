#include "th/mellin.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace th {

SN s_and_n(double z, double p) {
    if (!(p > 1.0)) throw SpecParseError("s_and_n: p must satisfy 1 < p < infinity");
    cplx w = cplx(z, 1.0 / p) * kPi;
    cplx sh = std::sinh(w);
    return {std::cosh(w) / sh, 1.0 / sh};
}

cplx LocalSymbol::scalar_value(double z) const {
    SN sn = s_and_n(z, p);
    double tau = (kind == Kind::AtOne) ? 1.0 : -1.0;
    cplx a = 1.0 + sn.s + tau * sn.n;
    cplx b = 1.0 - sn.s - tau * sn.n;
    return a * fp_tau + b * fm_tau;
}

std::array<std::array<cplx, 2>, 2> LocalSymbol::matrix_value(double z) const {
    SN sn = s_and_n(z, p);
    std::array<std::array<cplx, 2>, 2> m;
    m[0][0] = (1.0 + sn.s) * fp_tau + (1.0 - sn.s) * fm_taubar;
    m[0][1] = sn.n * (fp_taubar - fm_tau);
    m[1][0] = sn.n * (fp_tau - fm_taubar);
    m[1][1] = (1.0 - sn.s) * fm_tau + (1.0 + sn.s) * fp_taubar;
    return m;
}

cplx LocalSymbol::det_closed_form(double z) const {
    SN sn = s_and_n(z, p);
    return 2.0 * (1.0 + sn.s) * fp_tau * fp_taubar + 2.0 * (1.0 - sn.s) * fm_tau * fm_taubar;
}

cplx LocalSymbol::limit_value(bool plus_infinity) const {
    if (!is_pair()) return plus_infinity ? 2.0 * fp_tau : 2.0 * fm_tau;
    // b(+inf) = 2 diag(phi_+(tau), phi_+(taubar)), b(-inf) = 2 diag(phi_-(taubar), phi_-(tau)).
    return plus_infinity ? 4.0 * fp_tau * fp_taubar : 4.0 * fm_taubar * fm_tau;
}

double LocalSymbol::modulus(double z) const {
    return is_pair() ? std::abs(det_local_symbol(*this, z)) : std::abs(scalar_value(z));
}

LocalSymbol local_symbol(const PCSymbol& sym, const TauTag& tag) {
    LocalSymbol ls;
    ls.p = sym.p;
    if (std::holds_alternative<TauOne>(tag)) {
        ls.kind = LocalSymbol::Kind::AtOne;
        ls.theta = 0.0;
        auto [fp, fm] = one_sided_limits(sym, 0.0);
        ls.fp_tau = fp;
        ls.fm_tau = fm;
    } else if (std::holds_alternative<TauMinusOne>(tag)) {
        ls.kind = LocalSymbol::Kind::AtMinusOne;
        ls.theta = kPi;
        auto [fp, fm] = one_sided_limits(sym, kPi);
        ls.fp_tau = fp;
        ls.fm_tau = fm;
    } else {
        double theta = std::get<TauPair>(tag).theta;
        if (!(theta > 0.0) || !(theta < kPi))
            throw SpecParseError("local_symbol: pair point must lie in the open upper half");
        ls.kind = LocalSymbol::Kind::Pair;
        ls.theta = theta;
        auto [fp, fm] = one_sided_limits(sym, theta);
        auto [fpb, fmb] = one_sided_limits(sym, kTwoPi - theta);
        ls.fp_tau = fp;
        ls.fm_tau = fm;
        ls.fp_taubar = fpb;
        ls.fm_taubar = fmb;
    }
    return ls;
}

cplx det_local_symbol(const LocalSymbol& ls, double z) {
    if (!ls.is_pair()) throw SpecParseError("det_local_symbol: scalar local symbol");
    cplx closed = ls.det_closed_form(z);
    auto m = ls.matrix_value(z);
    cplx direct = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    double scale = std::max({1.0, std::abs(closed), std::abs(direct)});
    if (std::abs(closed - direct) > 1e-12 * scale)
        throw NumericFailureError("det_local_symbol: closed form disagrees with direct determinant");
    return closed;
}

SweepReport sweep_nonvanishing(const LocalSymbol& ls, double z_max, int steps) {
    if (steps < 64) throw SpecParseError("sweep_nonvanishing: steps must be >= 64");
    SweepReport rep;
    rep.samples.reserve(static_cast<size_t>(steps) + 2);

    auto value_at = [&](double z) {
        return ls.is_pair() ? det_local_symbol(ls, z) : ls.scalar_value(z);
    };

    size_t best = 0;
    for (int k = 0; k <= steps; ++k) {
        double z = -z_max + 2.0 * z_max * static_cast<double>(k) / steps;
        cplx v = value_at(z);
        rep.samples.push_back({z, v, std::abs(v), 0});
        if (rep.samples[best].modulus > rep.samples.back().modulus) best = rep.samples.size() - 1;
    }

    // Golden-section refinement of |b| around the coarse minimum.
    {
        double lo = rep.samples[best > 0 ? best - 1 : 0].z;
        double hi = rep.samples[std::min(best + 1, rep.samples.size() - 1)].z;
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = lo, b = hi;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = ls.modulus(x1), f2 = ls.modulus(x2);
        for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = ls.modulus(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = ls.modulus(x2);
            }
        }
        double zr = 0.5 * (a + b);
        cplx vr = value_at(zr);
        SweepSample refined{zr, vr, std::abs(vr), 0};
        if (refined.modulus < rep.samples[best].modulus) {
            auto pos = std::upper_bound(
                rep.samples.begin(), rep.samples.end(), refined,
                [](const SweepSample& s1, const SweepSample& s2) { return s1.z < s2.z; });
            rep.samples.insert(pos, refined);
        }
    }

    cplx vp = ls.limit_value(true), vn = ls.limit_value(false);
    rep.pos_inf = {0.0, vp, std::abs(vp), +1};
    rep.neg_inf = {0.0, vn, std::abs(vn), -1};

    rep.min_modulus = rep.pos_inf.modulus;
    rep.min_z = 0.0;
    rep.min_at_infinity = true;
    if (rep.neg_inf.modulus < rep.min_modulus) rep.min_modulus = rep.neg_inf.modulus;
    for (const auto& s : rep.samples) {
        if (s.modulus < rep.min_modulus) {
            rep.min_modulus = s.modulus;
            rep.min_z = s.z;
            rep.min_at_infinity = false;
        }
    }
    return rep;
}

}  // namespace th
