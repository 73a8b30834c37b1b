#pragma once

#include <Eigen/Dense>
#include <string>

#include "th/factorization.hpp"
#include "th/symbol.hpp"

namespace th {

enum class SectionKind { T, H, M, Phi, Psi };

/// Finite dense section of one of the operators T, H, M, Phi, Psi.
/// T/H/M map {e_0..e_{cols-1}} to {e_0..e_{rows-1}}.  Phi maps the
/// J-symmetric basis u_n = (e_n + e_{-n-1})/sqrt(2) to {e_j}; Psi is the
/// transposed convention.
struct OperatorSection {
    SectionKind kind = SectionKind::T;
    int rows = 0;
    int cols = 0;
    Eigen::MatrixXcd entries;
    std::string basis_note;

    int size() const { return rows; }
};

CoeffWindow laurent_window(const LaurentPolynomial& poly, int nmin, int nmax);

OperatorSection build_toeplitz_section(const CoeffWindow& c, int N);
OperatorSection build_hankel_section(const CoeffWindow& c, int N);
OperatorSection build_m_section(const CoeffWindow& c, int N);
OperatorSection build_phi_section(const CoeffWindow& c, int N);
OperatorSection build_psi_section(const CoeffWindow& c, int N);

OperatorSection build_toeplitz_section(const PCSymbol& sym, int N);
OperatorSection build_hankel_section(const PCSymbol& sym, int N);
OperatorSection build_m_section(const PCSymbol& sym, int N);
OperatorSection build_phi_section(const PCSymbol& sym, int N);
OperatorSection build_psi_section(const PCSymbol& sym, int N);

OperatorSection build_toeplitz_section(const LaurentPolynomial& sym, int N);
OperatorSection build_hankel_section(const LaurentPolynomial& sym, int N);
OperatorSection build_m_section(const LaurentPolynomial& sym, int N);

/// Rectangular sections used to separate kernel and cokernel numerically:
/// rows x cols truncation of M, and of its adjoint M*(phi) = P(I+J)L(conj phi)P.
OperatorSection build_m_section_rect(const CoeffWindow& c, int rows, int cols);
OperatorSection build_m_adjoint_section_rect(const CoeffWindow& c, int rows, int cols);
OperatorSection build_toeplitz_section_rect(const CoeffWindow& c, int rows, int cols);

/// Element (1 - t^{-1}) f1 of the dense subspace X1.
struct X1Element {
    LaurentPolynomial f1;
    LaurentPolynomial expand() const;  // Laurent coefficients of (1 - t^{-1}) f1
};

struct FormalInverseResult {
    LaurentPolynomial coeffs;       // Bf on a symmetric degree window
    LaurentPolynomial p1;           // the polynomial part P(phi_minus^{-1} f)
    LaurentPolynomial r;            // even quotient (p1 + t^{-1} p1tilde)/(1 + t^{-1})
    double j_symmetry_defect = 0.0; // max |c_n - c_{-n-1}|
    double quad_defect = 0.0;       // quadrature convergence defect
};

/// Precomputed coefficient windows shared across formal-inverse calls:
/// u = (1 - t^{-1}) phi_minus^{-1} and v = (1 + t^{-1}) phi_zero^{-1}.
struct FormalInverseWorkspace {
    CoeffWindow u;
    CoeffWindow v;
    int n_trunc = 0;
    int dmax = 0;  // degree bound of admissible f1
    double quad_defect = 0.0;
    bool converged = true;
};
FormalInverseWorkspace make_formal_inverse_workspace(const AsymmetricFactorization& fact,
                                                     int dmax, int n_trunc);

/// Formal inverse of Lemma-form B f = phi_zero^{-1} (p1(t) + t^{-1} p1(1/t))
/// with p1 the polynomial part of phi_minus^{-1} f.  Requires kappa = 0.
/// Throws TruncationError when the coefficient quadrature fails to converge
/// below 1e-8 at the requested truncation.
FormalInverseResult apply_formal_inverse(const AsymmetricFactorization& fact, const X1Element& f,
                                         int n_trunc);
FormalInverseResult apply_formal_inverse(const AsymmetricFactorization& fact, const X1Element& f,
                                         const FormalInverseWorkspace& ws);

/// Fourier window of v = (1 + t^{-1}) phi_zero^{-1} (integrable even weight
/// carrying the whole phi_zero^{-1} data needed by the formal inverse).
CoeffWindow zero_inv_weighted_window(const AsymmetricFactorization& fact, int nmin, int nmax,
                                     QuadReport* report = nullptr);

double smallest_singular_value(const Eigen::MatrixXcd& m);
int count_singular_below(const Eigen::MatrixXcd& m, double threshold);

}  // namespace th
