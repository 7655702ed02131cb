#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "pwsb/num.hpp"
#include "pwsb/returnmaps.hpp"

using namespace pwsb;

TEST_CASE("aux_rho values and symmetry") {
    CHECK(aux_rho(0.0, 0.7) == 0.0);
    CHECK(aux_rho(kPi, 0.0) == doctest::Approx(2.0));
    for (double s : {0.3, 1.1, 2.9, 5.0})
        for (double nu : {-0.8, -0.1, 0.2, 1.3})
            CHECK(aux_rho(-s, -nu) == doctest::Approx(aux_rho(s, nu)).epsilon(1e-13));
}

TEST_CASE("aux_rho stationary points via the derivative identity") {
    const double h = 1e-6;
    for (double s : {0.5, 2.0, 4.4})
        for (double nu : {-0.5, 0.3}) {
            const double fd = (aux_rho(s + h, nu) - aux_rho(s - h, nu)) / (2.0 * h);
            const double formula = (1.0 + nu * nu) * std::exp(nu * s) * std::sin(s);
            CHECK(fd == doctest::Approx(formula).epsilon(1e-7));
        }
}

TEST_CASE("aux_rho_node values and the complex identity") {
    CHECK(aux_rho_node(0.0, 0.4) == 0.0);
    for (double s : {0.5, 1.5, 3.0})
        for (double nu : {1.2, -1.5, 2.0})
            CHECK(aux_rho_node(s, nu) > 0.0);
    // rho(i s; -i nu) = rho_node(s; nu) by analytic continuation.
    using C = std::complex<double>;
    auto rho_c = [](C s, C nu) { return 1.0 - std::exp(nu * s) * (std::cos(s) - nu * std::sin(s)); };
    for (double s : {0.4, 1.7})
        for (double nu : {0.3, 1.4}) {
            const C v = rho_c(C(0, s), C(0, -nu));
            CHECK(std::fabs(v.imag()) < 1e-12);
            CHECK(v.real() == doctest::Approx(aux_rho_node(s, nu)).epsilon(1e-12));
        }
}

TEST_CASE("aux_shat limits, brackets, and the bisection oracle") {
    // shat(nu) -> 2 pi as nu -> 0+ with deviation ~ 2 sqrt(pi nu).
    CHECK(std::fabs(aux_shat(1e-8) - 2.0 * kPi) < 1e-3);
    CHECK(std::fabs(aux_shat(1e-6) - 2.0 * kPi) < 2.5 * std::sqrt(kPi * 1e-6));
    CHECK(std::fabs(aux_shat(1e-6) - 2.0 * kPi) > 1.5 * std::sqrt(kPi * 1e-6));
    const double s01 = aux_shat(0.1);
    CHECK(s01 > kPi);
    CHECK(s01 < 2.0 * kPi);
    CHECK(std::fabs(aux_rho(s01, 0.1)) < 1e-12);

    // Independent oracle: plain bisection of rho on (pi, 2 pi).
    double lo = kPi + 1e-12, hi = 2.0 * kPi;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (aux_rho(mid, 0.5) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    CHECK(aux_shat(0.5) == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-12));
    CHECK_THROWS(aux_shat(-0.2));
}

TEST_CASE("shat satisfies the minus-nu identity") {
    for (double nu : {0.1, 0.4, 1.0}) {
        const double sh = aux_shat(nu);
        const double lhs = aux_rho(sh, -nu);
        const double rhs = (1.0 + nu * nu) * std::sin(sh) * std::sin(sh);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("g_func value, pole, and derivative identity") {
    CHECK(g_func(kPi / 2.0, 0.0) == doctest::Approx(1.0));
    CHECK_THROWS(g_func(kPi, 0.3));
    const double h = 1e-6;
    for (double s : {0.7, 2.2, 4.0})
        for (double nu : {-0.4, 0.6}) {
            const double fd = (g_func(s + h, nu) - g_func(s - h, nu)) / (2.0 * h);
            const double formula = aux_rho(s, -nu) / (std::sin(s) * std::sin(s));
            CHECK(fd == doctest::Approx(formula).epsilon(1e-6));
        }
}

TEST_CASE("chi_focus on the reference quadratic system") {
    TaylorTable t;
    t.deriv[0][0][1] = 1.0;   // f_y
    t.deriv[0][0][2] = -2.0;  // f_yy
    t.deriv[1][1][0] = -1.0;  // g_x
    CHECK(chi_focus(t) == doctest::Approx(1.0 / 3.0));

    BasicTaylorTable<Rational> tr;
    tr.deriv[0][0][1] = Rational(1);
    tr.deriv[0][0][2] = Rational(-2);
    tr.deriv[1][1][0] = Rational(-1);
    CHECK(chi_focus_exact(tr) == Rational(1, 3));
}

TEST_CASE("chi_focus vanishes for a linear field and rejects real eigenvalues") {
    TaylorTable t;
    t.deriv[0][0][1] = 1.0;
    t.deriv[1][1][0] = -1.0;
    CHECK(chi_focus(t) == 0.0);
    TaylorTable node;
    node.deriv[0][1][0] = -1.0;
    node.deriv[1][0][1] = -2.0;
    CHECK_THROWS(chi_focus(node));
}

TEST_CASE("sigma_fold and chi_fold on reference systems") {
    // f = y - y^4, g = -1: sigma = 0, chi = 3.
    BasicTaylorTable<Rational> t;
    t.deriv[0][0][1] = Rational(1);
    t.deriv[0][0][4] = Rational(-24);
    t.deriv[1][0][0] = Rational(-1);
    CHECK(sigma_fold_exact(t) == Rational(0));
    CHECK(chi_fold_exact(t) == Rational(3));

    // f = y, g = -1: everything vanishes.
    BasicTaylorTable<Rational> triv;
    triv.deriv[0][0][1] = Rational(1);
    triv.deriv[1][0][0] = Rational(-1);
    CHECK(sigma_fold_exact(triv) == Rational(0));
    CHECK(chi_fold_exact(triv) == Rational(0));

    // Left piece f = x + y, g = 1 reflected into the fold frame.
    BasicTaylorTable<Rational> left;
    left.deriv[0][1][0] = Rational(1);
    left.deriv[0][0][1] = Rational(1);
    left.deriv[1][0][0] = Rational(1);
    const auto folded = reflect_left_to_fold_frame(left);
    CHECK(folded.a2() == Rational(1));
    CHECK(folded.b0() == Rational(-1));
    CHECK(sigma_fold_exact(folded) == Rational(1));
    CHECK(chi_fold_exact(folded) == Rational(22, 9));
    // The transformation leaves the formula values unchanged.
    CHECK(sigma_fold_t(left) == Rational(1));
    CHECK(chi_fold_t(left) == Rational(22, 9));
}

TEST_CASE("fold-frame preconditions are enforced") {
    TaylorTable bad;
    bad.deriv[0][0][1] = 1.0;
    bad.deriv[1][0][0] = 1.0;  // b0 > 0
    CHECK_THROWS(sigma_fold(bad));
    CHECK_THROWS(chi_fold(bad));
}

TEST_CASE("half-return series values") {
    TaylorTable focus;
    focus.deriv[0][0][1] = 1.0;
    focus.deriv[0][0][2] = -2.0;
    focus.deriv[1][1][0] = -1.0;
    const auto f01 = p_focus_series(focus, 0.1);
    CHECK(f01.P == doctest::Approx(-0.1 + 2.0 * (1.0 / 3.0) * 0.01));
    CHECK(f01.T == doctest::Approx(kPi));
    CHECK(p_focus_series(focus, 0.0).P == 0.0);

    TaylorTable fold;
    fold.deriv[0][0][1] = 1.0;
    fold.deriv[0][0][4] = -24.0;
    fold.deriv[1][0][0] = -1.0;
    const auto g01 = p_fold_series(fold, 0.1);
    CHECK(g01.P == doctest::Approx(-0.1 + (2.0 * 3.0 / 15.0) * 1e-4));
    CHECK(g01.T == doctest::Approx(0.2));
    CHECK(p_fold_series(fold, 0.0).P == 0.0);
}

TEST_CASE("affine return: Type I small-r limit") {
    const auto res = affine_return(0.4, 1.0, -1.0, 1e-6);
    CHECK(res.type == AffineType::I);
    CHECK(std::fabs(res.T) < 1e-4);
    CHECK(std::fabs(res.P) < 1e-4);
}

TEST_CASE("affine return: Type III small-r limit") {
    const double lambda = 0.5, omega = 1.0, b0 = 1.0;
    const double nu = lambda / omega;
    const double sh = aux_shat(nu);
    const double limit = (b0 / omega) * std::exp(nu * sh) * std::sin(sh);
    const auto res = affine_return(lambda, omega, b0, 1e-8);
    CHECK(res.type == AffineType::III);
    CHECK(res.P == doctest::Approx(limit).epsilon(1e-4));
    CHECK(res.T == doctest::Approx(sh / omega).epsilon(1e-4));
}

TEST_CASE("affine return: Type II cutoff behavior") {
    const double lambda = -0.3, omega = 1.0, b0 = 1.0;
    const double rh = affine_r_hat(lambda, omega, b0);
    CHECK(rh > 0.0);
    // P -> 0 like a square root as r -> r_hat from above.
    const auto at = affine_return(lambda, omega, b0, rh * (1.0 + 1e-10));
    CHECK(at.type == AffineType::II);
    REQUIRE(at.r_hat.has_value());
    CHECK(*at.r_hat == doctest::Approx(rh));
    CHECK(std::fabs(at.P) < 1e-4);
    CHECK_THROWS(affine_return(lambda, omega, b0, 0.5 * rh));
}

TEST_CASE("affine return: large-r asymptotics") {
    const double lambda = -0.2, omega = 1.3, b0 = -1.0;
    const double r = 1e9;
    const auto res = affine_return(lambda, omega, b0, r);
    CHECK(res.T == doctest::Approx(kPi / omega).epsilon(1e-6));
    CHECK(res.P / r == doctest::Approx(-std::exp(lambda * kPi / omega)).epsilon(1e-6));
}

TEST_CASE("affine return rejects bad arguments") {
    CHECK_THROWS(affine_return(0.1, 1.0, 0.0, 1.0));
    CHECK_THROWS(affine_return(0.1, 1.0, -1.0, -1.0));
    CHECK_THROWS(affine_return(0.1, -1.0, -1.0, 1.0));
}
