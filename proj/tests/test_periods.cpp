#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pwsb/hlb.hpp"
#include "pwsb/poincare.hpp"
#include "pwsb/zoo.hpp"

using namespace pwsb;

namespace {

double simulated_period(const PWSystem& family, double mu, double r_lo, double r_hi) {
    CycleSearch search;
    search.r_lo = r_lo;
    search.r_hi = r_hi;
    auto fp = find_limit_cycle(family, mu, search);
    REQUIRE(fp.has_value());
    return fp->period;
}

}  // namespace

TEST_CASE("HLB 1 implicit period matches the simulated McKean cycle") {
    PWSystem family = zoo_build("mckean", {});
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB1);
    const double predicted = predicted_period(rep, family);
    const double sim = simulated_period(family, -5e-4, 1e-6, 0.1);
    CHECK(predicted == doctest::Approx(sim).epsilon(0.03));
}

TEST_CASE("HLB 2 implicit period (hyperbolic branch) matches the ocean cycle") {
    PWSystem family = zoo_build("ocean", {});
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB2);
    const double predicted = predicted_period(rep, family);
    // The O(mu) correction has a large coefficient here; probe the limit.
    const double sim = simulated_period(family, 2.5e-4, 1e-6, 0.5);
    CHECK(predicted == doctest::Approx(sim).epsilon(0.03));
}

TEST_CASE("HLB 4 implicit period matches the valve generator cycle") {
    PWSystem family = zoo_build("valve", {});
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB4);
    const double predicted = predicted_period(rep, family);
    const double sim = simulated_period(family, 1e-3, 1e-5, 0.5);
    CHECK(predicted == doctest::Approx(sim).epsilon(0.02));
}

TEST_CASE("HLB 5 period limit pi/omega_L + pi/omega_R") {
    PWSystem family = zoo_build("slip_focus_focus", {});
    HLBReport rep = classify(family);
    CHECK(rep.predicted_period == doctest::Approx(2.0 * kPi));
    const double sim = simulated_period(family, 1e-3, 1e-5, 0.5);
    CHECK(sim == doctest::Approx(2.0 * kPi).epsilon(0.02));
}

TEST_CASE("HLB 7 period power law") {
    PWSystem family = zoo_build("pendulum", {});
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB7);
    REQUIRE(rep.period_form == PeriodForm::PowerLawCoefficient);
    const double coeff = predicted_period(rep, family);
    for (double mu : {1e-4, 1e-3}) {
        const double sim = simulated_period(family, mu, 1e-5, 0.5);
        CHECK(sim == doctest::Approx(coeff * std::sqrt(mu)).epsilon(0.05));
    }
}

TEST_CASE("HLB 8 period limit for the bilinear oscillator") {
    PWSystem family = zoo_build("bilinear", {});
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB8);
    const double expect = kPi / rep.eig_left.omega + kPi / rep.eig_right.omega;
    CHECK(rep.predicted_period == doctest::Approx(expect));
    const double sim = simulated_period(family, 1e-3, 1e-5, 1.0);
    CHECK(sim == doctest::Approx(expect).epsilon(0.02));
}

TEST_CASE("HLB 14 period limit 3 pi / 2 for the impulsive system") {
    PWSystem family = zoo_build("lv_impulse", {});
    HLBReport rep = classify(family);
    CHECK(rep.predicted_period == doctest::Approx(1.5 * kPi));
    CycleSearch search;
    search.r_lo = 1e-4;
    search.r_hi = 1.5;
    search.scale_by_r = true;
    auto fp = find_limit_cycle(family, 5e-3, search);
    REQUIRE(fp.has_value());
    CHECK(fp->period == doctest::Approx(1.5 * kPi).epsilon(0.02));
}

TEST_CASE("HLB 17 cube-root period law") {
    PWSystem family = zoo_build_mech("forced_osc", "hysteretic");
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB17);
    const double coeff = rep.predicted_period;
    // T = |2/b0L - 2/b0R| (3 kappa mu / |alpha|)^(1/3) with kappa = 2, alpha = -1.
    CHECK(coeff == doctest::Approx(4.0 * std::cbrt(6.0)));
    for (double mu : {1e-4, 1e-3}) {
        const double sim = simulated_period(family, mu, 1e-4, 1.0);
        CHECK(sim == doctest::Approx(coeff * std::cbrt(mu)).epsilon(0.05));
    }
}

TEST_CASE("HLB 18 square-root period law") {
    PWSystem family = zoo_build_mech("forced_osc", "delayed");
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB18);
    const double coeff = rep.predicted_period;
    CHECK(coeff == doctest::Approx(4.0 * std::sqrt(6.0)));
    const double mu = 1e-3;
    auto fp = measure_attractor_cycle(family, mu, {0.5 * std::sqrt(mu), std::sqrt(mu)},
                                      900.0 * std::sqrt(mu), 8);
    REQUIRE(fp.has_value());
    CHECK(fp->period == doctest::Approx(coeff * std::sqrt(mu)).epsilon(0.05));
}

TEST_CASE("HLB 16 linear period law for the delayed relay") {
    PWSystem family = zoo_build_mech("relay_observer", "delayed");
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB16);
    const double mu = 2e-3;
    auto fp = measure_attractor_cycle(family, mu, {0.5 * mu, 0.0}, 40.0, 8);
    REQUIRE(fp.has_value());
    CHECK(fp->period == doctest::Approx(rep.predicted_period * mu).epsilon(0.05));
}

TEST_CASE("HLB 19 linear period law for Wilson-Cowan") {
    PWSystem family = zoo_build("wilson_cowan", {});
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB19);
    // The stationary spiral period at onset plus the linear-in-mu correction;
    // near onset the simulated period should approach the base spiral period.
    const double mu = 2e-3;
    const double sim = simulated_period(family, mu, 1e-5, 0.5);
    // Base revolution time at onset from the spiral segments:
    const double sim2 = simulated_period(family, 1e-3, 1e-5, 0.5);
    // The period varies linearly in mu with the predicted coefficient.
    const double coeff = rep.predicted_period;
    CHECK(sim - sim2 == doctest::Approx(coeff * 1e-3).epsilon(0.2));
}

TEST_CASE("HLB 20 period limit matches the simulated square-root cycle") {
    PWSystem family = zoo_build("sqrt_example", {});
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB20);
    const double predicted = rep.predicted_period;
    const double sim1 = simulated_period(family, 1e-3, 1e-5, 0.5);
    const double sim2 = simulated_period(family, 2.5e-4, 1e-6, 0.5);
    CHECK(predicted == doctest::Approx(sim1).epsilon(0.02));
    // and the gap shrinks as mu decreases
    CHECK(std::fabs(predicted - sim2) < std::fabs(predicted - sim1));
}

TEST_CASE("HLB 11 and 12 implicit periods sit on the correct branches") {
    PWSystem f11 = zoo_build("impact_osc", {{"tau", 0.2}});
    HLBReport r11 = classify(f11);
    const double om = std::sqrt(0.99);
    CHECK(r11.predicted_period > kPi / om);
    CHECK(r11.predicted_period < 2.0 * kPi / om);
    const double sim11 = simulated_period(f11, 1e-2, 1e-5, 0.5);
    CHECK(r11.predicted_period == doctest::Approx(sim11).epsilon(0.02));

    PWSystem f12 = zoo_build("impact_osc", {{"tau", 0.8}});
    HLBReport r12 = classify(f12);
    const double om12 = std::sqrt(4.0 - 0.64) / 2.0;
    CHECK(r12.predicted_period < kPi / om12);
    const double sim12 = simulated_period(f12, -1e-2, 1e-5, 0.5);
    CHECK(r12.predicted_period == doctest::Approx(sim12).epsilon(0.02));
}
