#include <doctest.h>

#include <random>

#include "th/fredholm.hpp"
#include "th/symbol.hpp"

using namespace th;

namespace {

PCSymbol single_jump(double theta, cplx beta, double p = 2.0) {
    PCSymbol s;
    s.p = p;
    s.jumps.push_back({theta, beta});
    return s;
}

// c_n of the lone jump factor t_beta at theta_r: e^{-i n theta_r} sin(pi b)/(pi (b - n)).
cplx jump_coeff(cplx beta, double theta_r, int n) {
    return std::polar(1.0, -n * theta_r) * std::sin(kPi * beta) /
           (kPi * (beta - static_cast<double>(n)));
}

}  // namespace

TEST_CASE("angle helpers") {
    CHECK(canonical_angle(-0.5) == doctest::Approx(kTwoPi - 0.5));
    CHECK(canonical_angle(kTwoPi) == 0.0);
    CHECK(principal_mod(0.75) == doctest::Approx(-0.25));
    CHECK(principal_mod(0.5) == 0.5);
    CHECK(principal_mod(-0.5) == 0.5);
    CHECK(circular_distance(0.9, 0.0) == doctest::Approx(0.1));
}

TEST_CASE("eval: jump factor and smooth part") {
    // jump at 0 with beta = 0.25 evaluated opposite the jump
    CHECK(std::abs(eval(single_jump(0.0, 0.25), kPi) - 1.0) < 1e-15);
    // pure monomial smooth part
    PCSymbol t;
    t.p = 2.0;
    t.smooth.winding = 1;
    CHECK(std::abs(eval(t, kPi / 2.0) - cplx(0.0, 1.0)) < 1e-15);
    // beta = 0.5 at theta = pi/2: exp(i 0.5 (pi/2 - pi))
    CHECK(std::abs(eval(single_jump(0.0, 0.5), kPi / 2.0) - std::exp(cplx(0.0, -kPi / 4.0))) <
          1e-15);
    CHECK_THROWS_AS((void)eval(single_jump(1.0, 0.5), 1.0), OnJumpError);
    CHECK_THROWS_AS((void)eval(single_jump(1.0, 0.5), 1.0 + kTwoPi), OnJumpError);
}

TEST_CASE("one_sided_limits") {
    auto [plus, minus] = one_sided_limits(single_jump(0.0, 0.25), 0.0);
    CHECK(std::abs(plus - std::exp(cplx(0.0, -kPi / 4.0))) < 1e-15);
    CHECK(std::abs(minus - std::exp(cplx(0.0, kPi / 4.0))) < 1e-15);

    PCSymbol smooth;
    smooth.p = 2.0;
    smooth.smooth.winding = 1;
    smooth.smooth.log_part.set_coeff(1, cplx(0.2, 0.1));
    auto [p2, m2] = one_sided_limits(smooth, 1.3);
    CHECK(std::abs(p2 - m2) < 1e-15);
    CHECK(std::abs(p2 - eval(smooth, 1.3)) < 1e-15);

    // two jumps: the factor away from tau contributes equally to both limits
    PCSymbol two = single_jump(0.0, 0.25);
    two.jumps.push_back({kPi, 0.1});
    auto [tp, tm] = one_sided_limits(two, 0.0);
    CHECK(std::abs(tm / tp - std::exp(cplx(0.0, kPi / 2.0))) < 1e-14);
    double eps = 1e-8;
    CHECK(std::abs(tp - eval(two, eps)) < 1e-7);
    CHECK(std::abs(tm - eval(two, -eps)) < 1e-7);
}

TEST_CASE("jump_ratio") {
    CHECK(std::abs(jump_ratio(single_jump(0.0, 0.25), 0.0) - cplx(0.0, 1.0)) < 1e-15);
    CHECK(jump_ratio(single_jump(0.0, 0.25), 1.0) == cplx(1.0));
    cplx beta(0.1, 0.2);
    PCSymbol s = single_jump(0.0, beta);
    cplx expect = std::exp(cplx(0.0, kTwoPi) * beta);
    CHECK(std::abs(jump_ratio(s, 0.0) - expect) < 1e-15);
    auto [plus, minus] = one_sided_limits(s, 0.0);
    CHECK(std::abs(minus / plus - expect) < 1e-14);
}

TEST_CASE("jump factor ratio is exact for each JumpFactor alone") {
    for (cplx beta : {cplx(0.3, 0.0), cplx(-0.7, 0.25), cplx(1.4, -0.6)}) {
        JumpFactor j{2.1, beta};
        CHECK(std::abs(j.limit_below() / j.limit_above() - j.ratio()) < 1e-14 * std::abs(j.ratio()));
    }
}

TEST_CASE("tilde") {
    PCSymbol t;
    t.p = 2.0;
    t.smooth.winding = 1;
    CHECK(tilde(t).smooth.winding == -1);

    // even symbol: exp of an even log part
    PCSymbol even;
    even.p = 2.0;
    even.smooth.log_part.set_coeff(1, cplx(0.3, 0.0));
    even.smooth.log_part.set_coeff(-1, cplx(0.3, 0.0));
    for (int k = 0; k < 64; ++k) {
        double theta = kTwoPi * (k + 0.5) / 64.0;
        CHECK(std::abs(eval(tilde(even), theta) - eval(even, theta)) < 1e-12);
    }

    PCSymbol s = single_jump(kPi / 3.0, cplx(0.2, -0.1));
    PCSymbol st = tilde(s);
    REQUIRE(st.jumps.size() == 1);
    CHECK(st.jumps[0].theta == doctest::Approx(5.0 * kPi / 3.0));
    for (int k = 0; k < 64; ++k) {
        double theta = kTwoPi * (k + 0.37) / 64.0;
        CHECK(std::abs(eval(st, theta) - eval(s, kTwoPi - theta)) < 1e-12);
    }
    // involution on a composite symbol
    PCSymbol mix = single_jump(1.0, cplx(0.1, 0.3));
    mix.smooth.winding = -2;
    mix.smooth.log_part.set_coeff(2, cplx(0.0, 0.4));
    PCSymbol back = tilde(tilde(mix));
    for (int k = 0; k < 64; ++k) {
        double theta = kTwoPi * (k + 0.37) / 64.0;
        CHECK(std::abs(eval(back, theta) - eval(mix, theta)) < 1e-12);
    }
}

TEST_CASE("multiply") {
    PCSymbol t, tinv;
    t.p = tinv.p = 2.0;
    t.smooth.winding = 1;
    tinv.smooth.winding = -1;
    PCSymbol one = multiply(t, tinv);
    CHECK(one.smooth.winding == 0);
    CHECK(one.smooth.log_part.is_zero());
    CHECK(one.jumps.empty());

    PCSymbol a = single_jump(0.0, 0.2), b = single_jump(0.0, 0.3);
    PCSymbol ab = multiply(a, b);
    REQUIRE(ab.jumps.size() == 1);
    CHECK(ab.jumps[0].beta == cplx(0.5));

    PCSymbol x = single_jump(1.0, cplx(0.2, 0.1));
    x.smooth.winding = 1;
    x.smooth.log_part.set_coeff(-1, cplx(0.3, 0.0));
    PCSymbol y = single_jump(2.5, cplx(-0.4, 0.0));
    y.smooth.log_part.set_coeff(1, cplx(0.0, -0.2));
    PCSymbol xy = multiply(x, y);
    for (int k = 0; k < 64; ++k) {
        double theta = kTwoPi * (k + 0.21) / 64.0;
        CHECK(std::abs(eval(xy, theta) - eval(x, theta) * eval(y, theta)) < 1e-12);
    }
    // associativity on the grid
    PCSymbol z = single_jump(4.0, cplx(0.15, 0.05));
    PCSymbol l = multiply(multiply(x, y), z), r = multiply(x, multiply(y, z));
    for (int k = 0; k < 64; ++k) {
        double theta = kTwoPi * (k + 0.21) / 64.0;
        CHECK(std::abs(eval(l, theta) - eval(r, theta)) < 1e-12);
    }

    PCSymbol wrong_p = single_jump(0.0, 0.2, 4.0);
    CHECK_THROWS_AS((void)multiply(a, wrong_p), SpecParseError);
}

TEST_CASE("inverse, rotate_pi, conj as grid oracles") {
    PCSymbol s = single_jump(1.0, cplx(0.2, -0.1));
    s.smooth.winding = 2;
    s.smooth.log_part.set_coeff(-1, cplx(0.1, 0.3));
    for (int k = 0; k < 64; ++k) {
        double theta = kTwoPi * (k + 0.29) / 64.0;
        CHECK(std::abs(eval(inverse(s), theta) - 1.0 / eval(s, theta)) < 1e-12);
        CHECK(std::abs(eval(rotate_pi(s), theta) - eval(s, theta + kPi)) < 1e-12);
        CHECK(std::abs(eval(conj_symbol(s), theta) - std::conj(eval(s, theta))) < 1e-12);
    }
}

TEST_CASE("fourier_coeffs") {
    PCSymbol t;
    t.p = 2.0;
    t.smooth.winding = 1;
    auto c = fourier_coeffs(t, -3, 3);
    for (int n = -3; n <= 3; ++n)
        CHECK(std::abs(c[static_cast<size_t>(n + 3)] - (n == 1 ? 1.0 : 0.0)) < 1e-12);

    // half jump: c_0 = 2/pi plus the full analytic window
    PCSymbol h = single_jump(0.0, 0.5);
    auto ch = fourier_coeffs(h, -8, 8);
    CHECK(std::abs(ch[8] - 2.0 / kPi) < 1e-12);
    for (int n = -8; n <= 8; ++n)
        CHECK(std::abs(ch[static_cast<size_t>(n + 8)] - jump_coeff(0.5, 0.0, n)) < 1e-11);

    // analytic coefficients survive a shifted location and complex exponent
    PCSymbol g = single_jump(2.0, cplx(0.3, -0.2));
    auto cg = fourier_coeffs(g, -6, 6);
    for (int n = -6; n <= 6; ++n)
        CHECK(std::abs(cg[static_cast<size_t>(n + 6)] - jump_coeff(cplx(0.3, -0.2), 2.0, n)) <
              1e-11);

    // even symbol: coefficients symmetric to 1e-10
    PCSymbol e;
    e.p = 2.0;
    e.smooth.log_part.set_coeff(1, 0.3);
    e.smooth.log_part.set_coeff(-1, 0.3);
    auto ce = fourier_coeffs(e, -16, 16);
    for (int n = 1; n <= 16; ++n)
        CHECK(std::abs(ce[static_cast<size_t>(16 + n)] - ce[static_cast<size_t>(16 - n)]) < 1e-10);
}

TEST_CASE("fourier window of a pure power reproduces the stored coefficient") {
    for (int m : {-3, 0, 2}) {
        PCSymbol s;
        s.p = 2.0;
        s.smooth.winding = m;
        auto c = fourier_coeffs(s, -5, 5);
        for (int n = -5; n <= 5; ++n)
            CHECK(std::abs(c[static_cast<size_t>(n + 5)] - (n == m ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("numeric winding equals the stored smooth winding") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (int m : {-3, -1, 0, 2}) {
        PCSymbol s;
        s.p = 2.0;
        s.smooth.winding = m;
        for (int n = -2; n <= 2; ++n) s.smooth.log_part.set_coeff(n, cplx(u(rng), u(rng)));
        CHECK(winding_number(s, 4096) == m);
    }
}

TEST_CASE("validate flags bad symbols") {
    PCSymbol bad;
    bad.p = 1.0;
    CHECK_THROWS_AS(bad.validate(), SpecParseError);
    PCSymbol dup = single_jump(1.0, 0.1);
    dup.jumps.push_back({1.0, 0.2});
    CHECK_THROWS_AS(dup.validate(), SpecParseError);
}
