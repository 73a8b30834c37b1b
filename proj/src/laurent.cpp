#include "th/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace th {

LaurentPolynomial::LaurentPolynomial(const std::map<int, cplx>& coeffs) {
    for (const auto& [n, v] : coeffs)
        if (v != cplx(0.0)) set_coeff(n, v);
}

LaurentPolynomial LaurentPolynomial::monomial(int degree, cplx c) {
    LaurentPolynomial p;
    p.set_coeff(degree, c);
    return p;
}

cplx LaurentPolynomial::coeff(int n) const {
    if (c_.empty() || n < nmin_ || n > max_degree()) return 0.0;
    return c_[static_cast<size_t>(n - nmin_)];
}

void LaurentPolynomial::grow_to(int lo, int hi) {
    if (c_.empty()) {
        nmin_ = lo;
        c_.assign(static_cast<size_t>(hi - lo + 1), cplx(0.0));
        return;
    }
    if (lo < nmin_) {
        c_.insert(c_.begin(), static_cast<size_t>(nmin_ - lo), cplx(0.0));
        nmin_ = lo;
    }
    if (hi > max_degree()) c_.resize(static_cast<size_t>(hi - nmin_ + 1), cplx(0.0));
}

void LaurentPolynomial::set_coeff(int n, cplx v) {
    grow_to(std::min(n, c_.empty() ? n : nmin_), std::max(n, c_.empty() ? n : max_degree()));
    c_[static_cast<size_t>(n - nmin_)] = v;
    trim();
}

void LaurentPolynomial::trim() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == cplx(0.0)) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        nmin_ = 0;
        return;
    }
    size_t tail = c_.size();
    while (tail > lead && c_[tail - 1] == cplx(0.0)) --tail;
    if (lead > 0 || tail < c_.size()) {
        c_ = std::vector<cplx>(c_.begin() + static_cast<long>(lead),
                               c_.begin() + static_cast<long>(tail));
        nmin_ += static_cast<int>(lead);
    }
}

cplx LaurentPolynomial::eval_angle(double theta) const {
    cplx s = 0.0;
    for (size_t k = 0; k < c_.size(); ++k) {
        int n = nmin_ + static_cast<int>(k);
        s += c_[k] * std::polar(1.0, n * theta);
    }
    return s;
}

cplx LaurentPolynomial::eval(cplx t) const {
    cplx s = 0.0;
    for (size_t k = 0; k < c_.size(); ++k) {
        int n = nmin_ + static_cast<int>(k);
        s += c_[k] * std::pow(t, n);
    }
    return s;
}

LaurentPolynomial LaurentPolynomial::tilde() const {
    LaurentPolynomial r;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != cplx(0.0)) r.set_coeff(-(nmin_ + static_cast<int>(k)), c_[k]);
    return r;
}

LaurentPolynomial LaurentPolynomial::conj_symbol() const {
    LaurentPolynomial r;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != cplx(0.0)) r.set_coeff(-(nmin_ + static_cast<int>(k)), std::conj(c_[k]));
    return r;
}

LaurentPolynomial LaurentPolynomial::rotate_pi() const {
    LaurentPolynomial r;
    for (size_t k = 0; k < c_.size(); ++k) {
        int n = nmin_ + static_cast<int>(k);
        if (c_[k] != cplx(0.0)) r.set_coeff(n, (n % 2 == 0) ? c_[k] : -c_[k]);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::even_part() const {
    LaurentPolynomial r;
    int lo = min_degree(), hi = max_degree();
    for (int n = std::min(lo, -hi); n <= std::max(hi, -lo); ++n) {
        cplx v = 0.5 * (coeff(n) + coeff(-n));
        if (v != cplx(0.0)) r.set_coeff(n, v);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::odd_part() const {
    LaurentPolynomial r;
    int lo = min_degree(), hi = max_degree();
    for (int n = std::min(lo, -hi); n <= std::max(hi, -lo); ++n) {
        cplx v = 0.5 * (coeff(n) - coeff(-n));
        if (v != cplx(0.0)) r.set_coeff(n, v);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::restrict_degrees(int lo, int hi) const {
    LaurentPolynomial r;
    for (int n = std::max(lo, min_degree()); n <= std::min(hi, max_degree()); ++n)
        if (coeff(n) != cplx(0.0)) r.set_coeff(n, coeff(n));
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial r = *this;
    r.nmin_ += k;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    if (rhs.c_.empty()) return *this;
    grow_to(c_.empty() ? rhs.nmin_ : std::min(nmin_, rhs.nmin_),
            c_.empty() ? rhs.max_degree() : std::max(max_degree(), rhs.max_degree()));
    for (size_t k = 0; k < rhs.c_.size(); ++k)
        c_[static_cast<size_t>(rhs.nmin_ + static_cast<int>(k) - nmin_)] += rhs.c_[k];
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    LaurentPolynomial neg = rhs;
    neg *= cplx(-1.0);
    return (*this += neg);
}

LaurentPolynomial& LaurentPolynomial::operator*=(cplx s) {
    if (s == cplx(0.0)) {
        c_.clear();
        nmin_ = 0;
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.nmin_ = a.nmin_ + b.nmin_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, cplx(0.0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

std::map<int, cplx> LaurentPolynomial::coeff_map() const {
    std::map<int, cplx> m;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != cplx(0.0)) m[nmin_ + static_cast<int>(k)] = c_[k];
    return m;
}

double LaurentPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace th
