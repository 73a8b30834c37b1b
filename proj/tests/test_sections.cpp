#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "th/sections.hpp"

using namespace th;

namespace {

PCSymbol single_jump(double theta, cplx beta, double p = 2.0) {
    PCSymbol s;
    s.p = p;
    s.jumps.push_back({theta, beta});
    return s;
}

LaurentPolynomial random_poly(std::mt19937& rng, int d) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    LaurentPolynomial p;
    for (int n = -d; n <= d; ++n) p.set_coeff(n, cplx(u(rng), u(rng)));
    return p;
}

double interior_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int m) {
    return (a.topLeftCorner(m, m) - b.topLeftCorner(m, m)).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("Toeplitz sections") {
    LaurentPolynomial t = LaurentPolynomial::monomial(1);
    auto T = build_toeplitz_section(t, 4).entries;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) CHECK(T(j, k) == cplx(j == k + 1 ? 1.0 : 0.0));

    auto I = build_toeplitz_section(LaurentPolynomial::monomial(0), 3).entries;
    CHECK((I - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);

    auto Th = build_toeplitz_section(single_jump(0.0, 0.5), 2).entries;
    CHECK(std::abs(Th(0, 0) - 2.0 / kPi) < 1e-12);
    CHECK(std::abs(Th(1, 1) - 2.0 / kPi) < 1e-12);
}

TEST_CASE("Hankel sections and the P(phi Jf) oracle") {
    auto Ht = build_hankel_section(LaurentPolynomial::monomial(1), 3).entries;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(Ht(j, k) == cplx(j == 0 && k == 0 ? 1.0 : 0.0));
    CHECK(build_hankel_section(LaurentPolynomial::monomial(-1), 3).entries.cwiseAbs().maxCoeff() ==
          0.0);
    CHECK(build_hankel_section(LaurentPolynomial::monomial(0), 3).entries.cwiseAbs().maxCoeff() ==
          0.0);

    // column k of H(phi) equals P(phi * J e_k) with J e_k = e_{-k-1}
    std::mt19937 rng(3u);
    LaurentPolynomial phi = random_poly(rng, 3);
    const int N = 8;
    auto H = build_hankel_section(phi, N).entries;
    for (int k = 0; k < N; ++k) {
        LaurentPolynomial col = phi * LaurentPolynomial::monomial(-k - 1);
        for (int j = 0; j < N; ++j) CHECK(std::abs(H(j, k) - col.coeff(j)) < 1e-14);
    }
}

TEST_CASE("M sections") {
    auto I = build_m_section(LaurentPolynomial::monomial(0), 3).entries;
    CHECK((I - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);

    auto Mt = build_m_section(LaurentPolynomial::monomial(1), 3).entries;
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(3, 3);
    expect(0, 0) = 1.0;
    expect(1, 0) = 1.0;
    expect(2, 1) = 1.0;
    CHECK((Mt - expect).cwiseAbs().maxCoeff() == 0.0);

    auto Mtinv = build_m_section(LaurentPolynomial::monomial(-1), 3).entries;
    Eigen::MatrixXcd sup = Eigen::MatrixXcd::Zero(3, 3);
    sup(0, 1) = 1.0;
    sup(1, 2) = 1.0;
    CHECK((Mtinv - sup).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Phi sections") {
    auto P1 = build_phi_section(single_jump(0.0, 0.0), 3).entries;  // symbol == 1
    CHECK((P1 - Eigen::MatrixXcd::Identity(3, 3) / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-12);

    CoeffWindow wt = laurent_window(LaurentPolynomial::monomial(1), -4, 4);
    auto Pt = build_phi_section(wt, 2).entries;
    CHECK(std::abs(Pt(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(Pt(1, 0) - 1.0 / std::sqrt(2.0)) < 1e-14);

    // Phi-section equals the M-section scaled by 1/sqrt(2)
    PCSymbol s = single_jump(1.2, cplx(0.2, -0.1));
    s.smooth.winding = 1;
    const int N = 24;
    auto Phi = build_phi_section(s, N).entries;
    auto M = build_m_section(s, N).entries;
    CHECK((Phi - M / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Psi sections and the adjoint law") {
    auto Ps1 = build_psi_section(single_jump(0.0, 0.0), 3).entries;
    CHECK((Ps1 - Eigen::MatrixXcd::Identity(3, 3) / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-12);

    // Psi(t^{-1}) mirrors Phi(t) transposed
    CoeffWindow wt = laurent_window(LaurentPolynomial::monomial(1), -6, 6);
    CoeffWindow wtinv = laurent_window(LaurentPolynomial::monomial(-1), -6, 6);
    auto Phi_t = build_phi_section(wt, 3).entries;
    auto Psi_tinv = build_psi_section(wtinv, 3).entries;
    CHECK((Psi_tinv - Phi_t.transpose()).cwiseAbs().maxCoeff() < 1e-14);

    // (Psi(psi))^* = Phi(conj psi)
    PCSymbol psi = single_jump(2.4, cplx(0.15, 0.2));
    psi.smooth.log_part.set_coeff(-1, cplx(0.2, 0.1));
    const int N = 20;
    auto Psi = build_psi_section(psi, N).entries;
    auto PhiConj = build_phi_section(conj_symbol(psi), N).entries;
    CHECK((Psi.adjoint() - PhiConj).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("hand check at N=8: M(t^2) = M(t)^2 + H(t)M(1/t - t) on interior entries") {
    LaurentPolynomial t = LaurentPolynomial::monomial(1);
    LaurentPolynomial t2 = t * t;
    LaurentPolynomial diff = LaurentPolynomial::monomial(-1) - t;
    const int N = 8, d = 1;
    Eigen::MatrixXcd lhs = build_m_section(t2, N).entries;
    Eigen::MatrixXcd mt = build_m_section(t, N).entries;
    Eigen::MatrixXcd rhs =
        mt * mt + build_hankel_section(t, N).entries * build_m_section(diff, N).entries;
    CHECK(interior_diff(lhs, rhs, N - 2 * d) < 1e-15);
}

TEST_CASE("product identities on interior entries") {
    std::mt19937 rng(17u);
    const int N = 48;
    for (int d : {1, 2, 3}) {
        for (int trial = 0; trial < 5; ++trial) {
            LaurentPolynomial phi = random_poly(rng, d), psi = random_poly(rng, d);
            LaurentPolynomial psit = psi.tilde();
            int m = N - 2 * d;

            auto T_phi = build_toeplitz_section(phi, N).entries;
            auto T_psi = build_toeplitz_section(psi, N).entries;
            auto T_psit = build_toeplitz_section(psit, N).entries;
            auto H_phi = build_hankel_section(phi, N).entries;
            auto H_psi = build_hankel_section(psi, N).entries;
            auto H_psit = build_hankel_section(psit, N).entries;

            LaurentPolynomial prod = phi * psi;
            CHECK(interior_diff(build_toeplitz_section(prod, N).entries,
                                T_phi * T_psi + H_phi * H_psit, m) < 1e-12);
            CHECK(interior_diff(build_hankel_section(prod, N).entries,
                                T_phi * H_psi + H_phi * T_psit, m) < 1e-12);
            auto M_phi = build_m_section(phi, N).entries;
            auto M_psi = build_m_section(psi, N).entries;
            CHECK(interior_diff(
                      build_m_section(prod, N).entries,
                      M_phi * M_psi + H_phi * build_m_section(psit - psi, N).entries, m) < 1e-12);

            // multiplicative cases: even psi, anti-analytic phi
            LaurentPolynomial psi_even = psi + psit;
            CHECK(interior_diff(build_m_section(phi * psi_even, N).entries,
                                M_phi * build_m_section(psi_even, N).entries, m) < 1e-12);
            LaurentPolynomial phi_anti = phi.restrict_degrees(-d, 0);
            CHECK(interior_diff(build_m_section(phi_anti * psi, N).entries,
                                build_m_section(phi_anti, N).entries * M_psi, m) < 1e-12);
        }
    }
}

TEST_CASE("J and P on the Laurent window: J^2 = I, JPJ = I - P") {
    const int W = 12, dim = 2 * W + 1;  // degrees -W..W
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim, dim);
    auto idx = [](int n) { return n + 12; };
    for (int n = -W; n <= W; ++n) {
        if (-n - 1 >= -W && -n - 1 <= W) J(idx(-n - 1), idx(n)) = 1.0;
        if (n >= 0) P(idx(n), idx(n)) = 1.0;
    }
    // J pairs degrees n <-> -n-1; the window loses only the unmatched edge n = W.
    Eigen::MatrixXcd JJ = J * J;
    for (int n = -W; n <= W - 1; ++n) CHECK(JJ(idx(n), idx(n)) == cplx(1.0));
    Eigen::MatrixXcd JPJ = J * P * J;
    for (int n = -W; n <= W - 1; ++n) CHECK(JPJ(idx(n), idx(n)) == cplx(n >= 0 ? 0.0 : 1.0));
}

TEST_CASE("norm sandwich at p=2") {
    PCSymbol s = single_jump(0.0, cplx(0.1, 0.05));
    s.smooth.log_part.set_coeff(1, cplx(0.2, 0.0));
    s.smooth.log_part.set_coeff(-1, cplx(0.0, 0.3));
    double target = max_modulus_on_grid(s, 2048);
    CoeffWindow win = fourier_window(s, -511, 1023);
    double prev_deficit = 1e300;
    for (int n : {32, 64, 128, 256}) {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(build_m_section(win, n).entries);
        double smax = svd.singularValues()(0);
        double deficit = std::max(0.0, target - smax);
        CHECK(deficit <= prev_deficit + 1e-9);
        CHECK(smax <= 2.0 * target * (1.0 + 1e-9));
        prev_deficit = deficit;
    }
    CHECK(prev_deficit < 0.05 * target);
}

TEST_CASE("rectangular sections agree with the square ones on shared entries") {
    PCSymbol s = single_jump(0.0, 0.1);
    s.smooth.winding = 1;
    CoeffWindow win = fourier_window(s, -63, 95);
    auto rect = build_m_section_rect(win, 64, 32).entries;
    auto sq = build_m_section(win, 32).entries;
    CHECK((rect.topRows(32) - sq).cwiseAbs().maxCoeff() == 0.0);
    auto adj = build_m_adjoint_section_rect(win, 64, 32).entries;
    auto wide = build_m_section_rect(win, 32, 64).entries;
    CHECK((adj - wide.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}
