#include "th/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace th {

namespace {

GaussLegendre compute_gauss_legendre(int order) {
    GaussLegendre gl;
    gl.x.resize(static_cast<size_t>(order));
    gl.w.resize(static_cast<size_t>(order));
    for (int i = 0; i < order; ++i) {
        // Newton iteration from the Chebyshev-based initial guess.
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = order * (x * p1 - p0) / (x * x - 1.0);
        gl.x[static_cast<size_t>(order - 1 - i)] = x;
        gl.w[static_cast<size_t>(order - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return gl;
}

struct Panel {
    double a, b;
};

struct TailJob {
    double theta_s;   // singular angle
    cplx gamma;       // power-law exponent on this side
    double leftover;  // length of the uncovered sliver
    int side;         // +1: theta_s^+, -1: theta_s^-
};

struct Mesh {
    std::vector<Panel> panels;
    std::vector<TailJob> tails;
};

Mesh build_mesh(const std::vector<Breakpoint>& bps, int max_abs_n, const QuadOptions& opt,
                int refine) {
    Mesh mesh;
    const size_t m = bps.size();
    for (size_t i = 0; i < m; ++i) {
        const Breakpoint& left = bps[i];
        const Breakpoint& right = bps[(i + 1) % m];
        double a = left.theta;
        double b = (i + 1 < m) ? right.theta : right.theta + kTwoPi;
        double len = b - a;
        if (len <= 1e-13) continue;

        bool grade_left = left.exp_above != cplx(0.0);
        bool grade_right = right.exp_below != cplx(0.0);

        long chunks = std::max<long>(
            1, static_cast<long>(std::ceil(len * std::max(1, max_abs_n) / opt.osc_budget)));
        chunks = std::max(chunks, static_cast<long>(std::ceil(len / opt.min_resolution)));
        chunks *= refine;
        if (grade_left && grade_right && chunks < 2) chunks = 2;
        double h = len / static_cast<double>(chunks);

        for (long c = 0; c < chunks; ++c) {
            double pa = a + h * static_cast<double>(c);
            double pb = (c + 1 == chunks) ? b : a + h * static_cast<double>(c + 1);
            bool gl = grade_left && c == 0;
            bool gr = grade_right && c + 1 == chunks;
            if (!gl && !gr) {
                mesh.panels.push_back({pa, pb});
                continue;
            }
            if (gl) {
                // Geometric stack shrinking toward pa.
                double cur = pb - pa;
                while (cur > opt.grade_floor) {
                    double next = cur * 0.5;
                    mesh.panels.push_back({pa + next, pa + cur});
                    cur = next;
                }
                mesh.tails.push_back({pa, left.exp_above, cur, +1});
            }
            if (gr) {
                double cur = pb - pa;
                while (cur > opt.grade_floor) {
                    double next = cur * 0.5;
                    mesh.panels.push_back({pb - cur, pb - next});
                    cur = next;
                }
                mesh.tails.push_back({pb, right.exp_below, cur, -1});
            }
        }
    }
    return mesh;
}

// Int_0^L delta^gamma e^{s i n delta} d delta, three series terms (|n|*L << 1).
cplx tail_moment(cplx gamma, double L, double n_times_side) {
    cplx in(0.0, n_times_side);
    cplx lg = std::log(cplx(L, 0.0));
    cplx term0 = std::exp((gamma + 1.0) * lg) / (gamma + 1.0);
    cplx term1 = in * std::exp((gamma + 2.0) * lg) / (gamma + 2.0);
    cplx term2 = 0.5 * in * in * std::exp((gamma + 3.0) * lg) / (gamma + 3.0);
    return term0 + term1 + term2;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
    static const GaussLegendre gl16 = compute_gauss_legendre(16);
    static const GaussLegendre gl32 = compute_gauss_legendre(32);
    static const GaussLegendre gl64 = compute_gauss_legendre(64);
    if (order <= 16) return gl16;
    if (order <= 32) return gl32;
    return gl64;
}

CoeffWindow fourier_window(const std::function<cplx(double)>& f, std::vector<Breakpoint> breaks,
                           int nmin, int nmax, const QuadOptions& opt, QuadReport* report) {
    if (nmin > nmax) throw NumericFailureError("fourier_window: empty degree window");

    // Canonicalize, sort, merge coincident breakpoints (exponents add).
    for (auto& bp : breaks) bp.theta = canonical_angle(bp.theta);
    std::sort(breaks.begin(), breaks.end(),
              [](const Breakpoint& x, const Breakpoint& y) { return x.theta < y.theta; });
    std::vector<Breakpoint> merged;
    for (const auto& bp : breaks) {
        if (!merged.empty() && bp.theta - merged.back().theta < 1e-12) {
            merged.back().exp_above += bp.exp_above;
            merged.back().exp_below += bp.exp_below;
        } else {
            merged.push_back(bp);
        }
    }
    if (merged.empty()) merged.push_back({0.0, 0.0, 0.0});
    for (const auto& bp : merged)
        if (bp.exp_above.real() <= -1.0 || bp.exp_below.real() <= -1.0)
            throw NumericFailureError("fourier_window: non-integrable singularity");

    const int count = nmax - nmin + 1;
    const int max_abs_n = std::max(std::abs(nmin), std::abs(nmax));
    const GaussLegendre& gl = gauss_legendre(opt.gl_order);

    long nodes_used = 0;
    auto run = [&](int refine) {
        Mesh mesh = build_mesh(merged, max_abs_n, opt, refine);
        std::vector<cplx> s(static_cast<size_t>(count), cplx(0.0));
        for (const Panel& pan : mesh.panels) {
            double mid = 0.5 * (pan.a + pan.b), half = 0.5 * (pan.b - pan.a);
            for (size_t j = 0; j < gl.x.size(); ++j) {
                double theta = mid + half * gl.x[j];
                cplx wf = f(theta) * (gl.w[j] * half / kTwoPi);
                ++nodes_used;
                cplx cur = wf * std::polar(1.0, -static_cast<double>(nmin) * theta);
                cplx step = std::polar(1.0, -theta);
                for (int k = 0; k < count; ++k) {
                    if (k > 0 && k % 64 == 0)  // resync against drift
                        cur = wf * std::polar(1.0, -static_cast<double>(nmin + k) * theta);
                    s[static_cast<size_t>(k)] += cur;
                    cur *= step;
                }
            }
        }
        for (const TailJob& t : mesh.tails) {
            double L = t.leftover;
            double d1 = 1.5 * L, d2 = 3.0 * L;
            cplx g = t.gamma;
            cplx v1 = f(t.theta_s + t.side * d1) * std::exp(-g * std::log(cplx(d1, 0.0)));
            cplx v2 = f(t.theta_s + t.side * d2) * std::exp(-g * std::log(cplx(d2, 0.0)));
            nodes_used += 2;
            cplx D = (v2 - v1) / (d2 - d1);
            cplx C = v1 - D * d1;
            for (int k = 0; k < count; ++k) {
                double n = static_cast<double>(nmin + k);
                cplx phase = std::polar(1.0, -n * t.theta_s);
                cplx I0 = tail_moment(g, L, -n * t.side);
                cplx I1 = tail_moment(g + 1.0, L, -n * t.side);
                s[static_cast<size_t>(k)] += phase * (C * I0 + D * I1) / kTwoPi;
            }
        }
        return s;
    };

    std::vector<cplx> prev = run(1);
    std::vector<cplx> cur = run(2);
    double scale = 1.0;
    for (const auto& v : cur) scale = std::max(scale, std::abs(v));
    double defect = 0.0;
    for (int k = 0; k < count; ++k)
        defect = std::max(defect, std::abs(cur[static_cast<size_t>(k)] - prev[static_cast<size_t>(k)]));
    int refine = 4;
    int rounds = 1;
    while (defect > opt.tol * scale && rounds < opt.max_rounds) {
        prev = std::move(cur);
        cur = run(refine);
        defect = 0.0;
        for (int k = 0; k < count; ++k)
            defect = std::max(defect,
                              std::abs(cur[static_cast<size_t>(k)] - prev[static_cast<size_t>(k)]));
        refine *= 2;
        ++rounds;
    }
    if (report) {
        report->defect = defect;
        report->nodes = nodes_used;
        report->converged = defect <= opt.tol * scale;
    }
    return CoeffWindow(nmin, std::move(cur));
}

}  // namespace th
