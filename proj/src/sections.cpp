#include "th/sections.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace th {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

OperatorSection make_section(SectionKind kind, int rows, int cols, std::string note) {
    OperatorSection s;
    s.kind = kind;
    s.rows = rows;
    s.cols = cols;
    s.entries = Eigen::MatrixXcd::Zero(rows, cols);
    s.basis_note = std::move(note);
    return s;
}

}  // namespace

CoeffWindow laurent_window(const LaurentPolynomial& poly, int nmin, int nmax) {
    std::vector<cplx> c(static_cast<size_t>(nmax - nmin + 1));
    for (int n = nmin; n <= nmax; ++n) c[static_cast<size_t>(n - nmin)] = poly.coeff(n);
    return CoeffWindow(nmin, std::move(c));
}

OperatorSection build_toeplitz_section(const CoeffWindow& c, int N) {
    auto s = make_section(SectionKind::T, N, N, "rows/cols: e_0..e_{N-1}");
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) s.entries(j, k) = c.at(j - k);
    return s;
}

OperatorSection build_hankel_section(const CoeffWindow& c, int N) {
    auto s = make_section(SectionKind::H, N, N, "rows/cols: e_0..e_{N-1}");
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) s.entries(j, k) = c.at(j + k + 1);
    return s;
}

OperatorSection build_m_section(const CoeffWindow& c, int N) {
    auto s = make_section(SectionKind::M, N, N, "rows/cols: e_0..e_{N-1}");
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) s.entries(j, k) = c.at(j - k) + c.at(j + k + 1);
    return s;
}

OperatorSection build_phi_section(const CoeffWindow& c, int N) {
    // Column n is P(phi * u_n) with u_n = (e_n + e_{-n-1})/sqrt(2); the
    // product is expanded over the coefficient window and projected.
    auto s = make_section(SectionKind::Phi, N, N,
                          "cols: (e_n + e_{-n-1})/sqrt2, rows: e_0..e_{N-1}");
    for (int n = 0; n < N; ++n)
        for (int j = 0; j < N; ++j)
            s.entries(j, n) = kInvSqrt2 * (c.at(j - n) + c.at(j + n + 1));
    return s;
}

OperatorSection build_psi_section(const CoeffWindow& c, int N) {
    auto s = make_section(SectionKind::Psi, N, N,
                          "cols: e_0..e_{N-1}, rows: (e_j + e_{-j-1})/sqrt2");
    for (int n = 0; n < N; ++n)
        for (int j = 0; j < N; ++j)
            s.entries(j, n) = kInvSqrt2 * (c.at(j - n) + c.at(-j - n - 1));
    return s;
}

namespace {

CoeffWindow symbol_window_for(const PCSymbol& sym, int nmin, int nmax) {
    return fourier_window(sym, nmin, nmax);
}

}  // namespace

OperatorSection build_toeplitz_section(const PCSymbol& sym, int N) {
    return build_toeplitz_section(symbol_window_for(sym, -(N - 1), N - 1), N);
}
OperatorSection build_hankel_section(const PCSymbol& sym, int N) {
    return build_hankel_section(symbol_window_for(sym, 1, 2 * N - 1), N);
}
OperatorSection build_m_section(const PCSymbol& sym, int N) {
    return build_m_section(symbol_window_for(sym, -(N - 1), 2 * N - 1), N);
}
OperatorSection build_phi_section(const PCSymbol& sym, int N) {
    return build_phi_section(symbol_window_for(sym, -2 * N, 2 * N), N);
}
OperatorSection build_psi_section(const PCSymbol& sym, int N) {
    return build_psi_section(symbol_window_for(sym, -2 * N, 2 * N), N);
}

OperatorSection build_toeplitz_section(const LaurentPolynomial& sym, int N) {
    return build_toeplitz_section(laurent_window(sym, -(N - 1), N - 1), N);
}
OperatorSection build_hankel_section(const LaurentPolynomial& sym, int N) {
    return build_hankel_section(laurent_window(sym, 1, 2 * N - 1), N);
}
OperatorSection build_m_section(const LaurentPolynomial& sym, int N) {
    return build_m_section(laurent_window(sym, -(N - 1), 2 * N - 1), N);
}

OperatorSection build_m_section_rect(const CoeffWindow& c, int rows, int cols) {
    auto s = make_section(SectionKind::M, rows, cols, "rectangular M truncation");
    for (int j = 0; j < rows; ++j)
        for (int k = 0; k < cols; ++k) s.entries(j, k) = c.at(j - k) + c.at(j + k + 1);
    return s;
}

OperatorSection build_m_adjoint_section_rect(const CoeffWindow& c, int rows, int cols) {
    // Entry (j, k) of M* is the conjugate of entry (k, j) of the full matrix.
    auto s = make_section(SectionKind::M, rows, cols, "rectangular M* truncation");
    for (int j = 0; j < rows; ++j)
        for (int k = 0; k < cols; ++k)
            s.entries(j, k) = std::conj(c.at(k - j) + c.at(k + j + 1));
    return s;
}

OperatorSection build_toeplitz_section_rect(const CoeffWindow& c, int rows, int cols) {
    auto s = make_section(SectionKind::T, rows, cols, "rectangular T truncation");
    for (int j = 0; j < rows; ++j)
        for (int k = 0; k < cols; ++k) s.entries(j, k) = c.at(j - k);
    return s;
}

LaurentPolynomial X1Element::expand() const {
    LaurentPolynomial one_minus_tinv;
    one_minus_tinv.set_coeff(0, 1.0);
    one_minus_tinv.set_coeff(-1, -1.0);
    return one_minus_tinv * f1;
}

CoeffWindow zero_inv_weighted_window(const AsymmetricFactorization& fact, int nmin, int nmax,
                                     QuadReport* report) {
    std::vector<FactorTerm> inv_terms = fact.zero_terms;
    for (auto& t : inv_terms) t.exponent = -t.exponent;
    auto v = [&fact](double theta) {
        return (1.0 + std::polar(1.0, -theta)) * fact.eval_zero_inv(theta);
    };
    return factor_fourier_window(v, inv_terms, {{kPi, 1.0}}, nmin, nmax, report);
}

FormalInverseWorkspace make_formal_inverse_workspace(const AsymmetricFactorization& fact,
                                                     int dmax, int n_trunc) {
    if (fact.kappa != 0)
        throw NotFredholmError("apply_formal_inverse: factorization must have kappa = 0");
    if (n_trunc < dmax + 2)
        throw TruncationError("apply_formal_inverse: n_trunc below the degree bound of f");
    FormalInverseWorkspace ws;
    ws.dmax = dmax;
    ws.n_trunc = n_trunc;

    QuadReport qu;
    std::vector<FactorTerm> minus_inv = fact.minus_terms;
    for (auto& t : minus_inv) t.exponent = -t.exponent;
    auto u_eval = [&fact](double theta) {
        return (1.0 - std::polar(1.0, -theta)) * fact.eval_minus_inv(theta);
    };
    ws.u = factor_fourier_window(u_eval, minus_inv, {{0.0, 1.0}}, -(dmax + 2), 2, &qu);

    QuadReport qv;
    // J-symmetric window: degrees n and -n-1 are both present, so the
    // computed Bf inherits the exact coefficient symmetry away from the edge.
    ws.v = zero_inv_weighted_window(fact, -(n_trunc + 1), n_trunc, &qv);
    ws.quad_defect = std::max(qu.defect, qv.defect);
    ws.converged = qu.converged && qv.converged && ws.quad_defect <= 1e-8;
    return ws;
}

FormalInverseResult apply_formal_inverse(const AsymmetricFactorization& fact, const X1Element& f,
                                         const FormalInverseWorkspace& ws) {
    if (fact.kappa != 0)
        throw NotFredholmError("apply_formal_inverse: factorization must have kappa = 0");
    FormalInverseResult res;
    res.quad_defect = ws.quad_defect;
    if (!ws.converged)
        throw TruncationError("apply_formal_inverse: coefficient quadrature did not converge");
    if (f.f1.is_zero()) return res;
    int dmax = std::max(std::abs(f.f1.max_degree()), std::abs(f.f1.min_degree()));
    if (dmax > ws.dmax)
        throw TruncationError("apply_formal_inverse: f exceeds the workspace degree bound");

    // p1 = P(phi_minus^{-1} f) = P(u * f1) with u = (1 - t^{-1}) phi_minus^{-1};
    // only the top coefficients of u reach the polynomial part.
    int pmax = f.f1.max_degree();
    LaurentPolynomial p1;
    for (int n = 0; n <= pmax; ++n) {
        cplx acc = 0.0;
        for (int j = ws.u.nmin(); j <= ws.u.nmax(); ++j) acc += ws.u.at(j) * f.f1.coeff(n - j);
        if (acc != cplx(0.0)) p1.set_coeff(n, acc);
    }
    res.p1 = p1;

    // r = (p1(t) + t^{-1} p1(1/t)) / (1 + t^{-1}), an exact Laurent division;
    // the remainder vanishes because the numerator is zero at t = -1.
    LaurentPolynomial numer = p1;
    for (int n = 0; n <= pmax; ++n) numer.set_coeff(-n - 1, numer.coeff(-n - 1) + p1.coeff(n));
    LaurentPolynomial r;
    cplx carry = 0.0;
    for (int n = pmax; n >= -pmax; --n) {
        cplx rn = numer.coeff(n) - carry;
        if (rn != cplx(0.0)) r.set_coeff(n, rn);
        carry = rn;
    }
    res.r = r;

    // Bf = v * r with v = (1 + t^{-1}) phi_zero^{-1}.
    LaurentPolynomial bf;
    for (int n = ws.v.nmin() - pmax; n <= ws.v.nmax() + pmax; ++n) {
        cplx acc = 0.0;
        for (int k = -pmax; k <= pmax; ++k) acc += r.coeff(k) * ws.v.at(n - k);
        if (acc != cplx(0.0)) bf.set_coeff(n, acc);
    }
    res.coeffs = bf;

    for (int n = 0; n <= ws.n_trunc - ws.dmax - 1; ++n)
        res.j_symmetry_defect =
            std::max(res.j_symmetry_defect, std::abs(bf.coeff(n) - bf.coeff(-n - 1)));
    return res;
}

FormalInverseResult apply_formal_inverse(const AsymmetricFactorization& fact, const X1Element& f,
                                         int n_trunc) {
    int dmax = f.f1.is_zero()
                   ? 0
                   : std::max(std::abs(f.f1.max_degree()), std::abs(f.f1.min_degree()));
    FormalInverseWorkspace ws = make_formal_inverse_workspace(fact, dmax, n_trunc);
    return apply_formal_inverse(fact, f, ws);
}

double smallest_singular_value(const Eigen::MatrixXcd& m) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().tail(1)(0);
}

int count_singular_below(const Eigen::MatrixXcd& m, double threshold) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    int count = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) < threshold) ++count;
    return count;
}

}  // namespace th
