#include <doctest.h>

#include "th/laurent.hpp"

using namespace th;

TEST_CASE("coefficient storage and degree window") {
    LaurentPolynomial p;
    CHECK(p.is_zero());
    p.set_coeff(2, cplx(1.0, 0.0));
    p.set_coeff(-3, cplx(0.0, 2.0));
    CHECK(p.min_degree() == -3);
    CHECK(p.max_degree() == 2);
    CHECK(p.coeff(0) == cplx(0.0));
    CHECK(p.coeff(-3) == cplx(0.0, 2.0));
    p.set_coeff(-3, 0.0);
    p.set_coeff(2, 0.0);
    CHECK(p.is_zero());
}

TEST_CASE("evaluation matches the finite sum") {
    LaurentPolynomial p(std::map<int, cplx>{{-1, {0.5, 0.0}}, {0, {1.0, 0.0}}, {2, {0.0, 1.0}}});
    double theta = 0.7;
    cplx t = std::polar(1.0, theta);
    cplx expect = 0.5 / t + 1.0 + cplx(0.0, 1.0) * t * t;
    CHECK(std::abs(p.eval_angle(theta) - expect) < 1e-14);
    CHECK(std::abs(p.eval(t) - expect) < 1e-14);
}

TEST_CASE("product is the coefficient convolution") {
    LaurentPolynomial a(std::map<int, cplx>{{-1, {1.0, 0.0}}, {1, {2.0, 0.0}}});
    LaurentPolynomial b(std::map<int, cplx>{{0, {3.0, 0.0}}, {2, {-1.0, 0.0}}});
    LaurentPolynomial c = a * b;
    CHECK(c.coeff(-1) == cplx(3.0));
    CHECK(c.coeff(1) == cplx(6.0) + cplx(-1.0));
    CHECK(c.coeff(3) == cplx(-2.0));
    for (int k = 0; k < 32; ++k) {
        double theta = 6.28318530717958647692 * k / 32.0 + 0.01;
        CHECK(std::abs(c.eval_angle(theta) - a.eval_angle(theta) * b.eval_angle(theta)) < 1e-13);
    }
}

TEST_CASE("tilde reflects degrees, even/odd split reassembles") {
    LaurentPolynomial p(std::map<int, cplx>{{-2, {1.0, 1.0}}, {1, {2.0, 0.0}}, {3, {0.0, -1.0}}});
    CHECK(p.tilde().coeff(2) == cplx(1.0, 1.0));
    CHECK(p.tilde().coeff(-1) == cplx(2.0));
    LaurentPolynomial back = p.even_part() + p.odd_part();
    for (int n = -4; n <= 4; ++n) CHECK(std::abs(back.coeff(n) - p.coeff(n)) < 1e-15);
    // even part is tilde-invariant
    LaurentPolynomial e = p.even_part();
    for (int n = -4; n <= 4; ++n) CHECK(e.coeff(n) == e.coeff(-n));
}

TEST_CASE("conjugate symbol matches pointwise conjugation") {
    LaurentPolynomial p(std::map<int, cplx>{{-1, {0.3, 0.4}}, {2, {-0.2, 1.0}}});
    LaurentPolynomial c = p.conj_symbol();
    for (int k = 0; k < 16; ++k) {
        double theta = 0.1 + k * 0.39;
        CHECK(std::abs(c.eval_angle(theta) - std::conj(p.eval_angle(theta))) < 1e-14);
    }
}

TEST_CASE("rotate_pi matches evaluation at theta + pi") {
    LaurentPolynomial p(std::map<int, cplx>{{-2, {1.0, 0.0}}, {1, {0.0, 1.0}}, {4, {2.0, 0.0}}});
    LaurentPolynomial r = p.rotate_pi();
    for (int k = 0; k < 16; ++k) {
        double theta = 0.05 + k * 0.37;
        CHECK(std::abs(r.eval_angle(theta) - p.eval_angle(theta + th::kPi)) < 1e-13);
    }
}
