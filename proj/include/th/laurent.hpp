#pragma once

#include <map>
#include <vector>

#include "th/common.hpp"

namespace th {

/// Finite Laurent polynomial  sum_{n=nmin..nmax} c_n t^n,
/// evaluated on the unit circle t = e^{i theta}.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const std::map<int, cplx>& coeffs);
    static LaurentPolynomial monomial(int degree, cplx c = 1.0);

    bool is_zero() const { return c_.empty(); }
    int min_degree() const { return c_.empty() ? 0 : nmin_; }
    int max_degree() const { return c_.empty() ? 0 : nmin_ + static_cast<int>(c_.size()) - 1; }
    cplx coeff(int n) const;
    void set_coeff(int n, cplx v);

    cplx eval_angle(double theta) const;
    cplx eval(cplx t) const;

    LaurentPolynomial tilde() const;         // t -> 1/t
    LaurentPolynomial conj_symbol() const;   // pointwise conjugate on |t|=1
    LaurentPolynomial rotate_pi() const;     // t -> -t
    LaurentPolynomial even_part() const;
    LaurentPolynomial odd_part() const;
    LaurentPolynomial restrict_degrees(int lo, int hi) const;
    LaurentPolynomial shifted(int k) const;  // multiply by t^k

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(cplx s);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(cplx s, LaurentPolynomial a) {
        a *= s;
        return a;
    }

    std::map<int, cplx> coeff_map() const;
    double max_abs_coeff() const;

private:
    int nmin_ = 0;
    std::vector<cplx> c_;  // c_[k] is the coefficient of degree nmin_ + k

    void grow_to(int lo, int hi);
    void trim();
};

}  // namespace th
