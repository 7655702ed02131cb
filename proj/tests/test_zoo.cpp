#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pwsb/hlb.hpp"
#include "pwsb/zoo.hpp"

using namespace pwsb;

TEST_CASE("zoo catalogue is complete and rejects unknowns") {
    auto names = zoo_list();
    CHECK(names.size() == 16);
    CHECK_THROWS_AS(zoo_build("welander"), ModelError);
    CHECK_THROWS_AS(zoo_build("vdp", {{"bogus", 1.0}}), ModelError);
}

TEST_CASE("vdp classifies as a Hopf bifurcation") {
    HLBReport rep = classify(zoo_build("vdp", {}));
    CHECK(rep.kind == HLBKind::Hopf);
    CHECK(*rep.alpha == doctest::Approx(-6.0));
    CHECK(*rep.beta == doctest::Approx(1.0));
    CHECK(rep.criticality == Criticality::Supercritical);
}

TEST_CASE("mckean classifies as subcritical HLB 1") {
    PWSystem s = zoo_build("mckean", {{"I", 0.375}});
    CHECK(s.mu == doctest::Approx(0.0));
    HLBReport rep = classify(s);
    REQUIRE(rep.kind == HLBKind::HLB1);
    CHECK(rep.criticality == Criticality::Subcritical);
    CHECK(*rep.alpha == doctest::Approx(0.0913).epsilon(2e-3));
    CHECK(rep.eig_left.lambda == doctest::Approx(0.3750).epsilon(1e-4));
    CHECK(rep.eig_left.omega == doctest::Approx(0.3307).epsilon(1e-3));
    CHECK(rep.eig_right.lambda == doctest::Approx(-0.6250).epsilon(1e-4));
    CHECK(rep.eig_right.omega == doctest::Approx(0.5995).epsilon(1e-3));
    CHECK(rep.cycle_side == -1);
}

TEST_CASE("ocean classifies as HLB 2") {
    HLBReport rep = classify(zoo_build("ocean", {}));
    REQUIRE(rep.kind == HLBKind::HLB2);
    CHECK(*rep.beta == doctest::Approx(0.01));
    CHECK(rep.cycle_side == 1);  // stable cycle for lambda < 1
    CHECK(rep.cycle_stable);
}

TEST_CASE("gause classifies as HLB 3 with persistence") {
    HLBReport rep = classify(zoo_build("gause", {}));
    REQUIRE(rep.kind == HLBKind::HLB3);
    CHECK(*rep.gamma < 0.0);
    CHECK(*rep.beta > 0.0);
    CHECK(rep.cycle_stable);
}

TEST_CASE("valve generator classifies as HLB 4") {
    HLBReport rep = classify(zoo_build("valve", {}));
    REQUIRE(rep.kind == HLBKind::HLB4);
    const double expect = 0.3 / std::sqrt(1.0 - 0.09) - 0.6 / std::sqrt(1.0 - 0.36);
    CHECK(*rep.alpha == doctest::Approx(expect).epsilon(1e-9));
    CHECK(*rep.gamma == doctest::Approx(0.0));
    CHECK(rep.criticality == Criticality::Supercritical);
}

TEST_CASE("slipping examples classify as HLB 5 and HLB 6") {
    HLBReport r5 = classify(zoo_build("slip_focus_focus", {}));
    REQUIRE(r5.kind == HLBKind::HLB5);
    CHECK(*r5.alpha == doctest::Approx(-0.4));
    CHECK(*r5.beta == doctest::Approx(1.0));
    CHECK(*r5.gamma == doctest::Approx(-0.6));

    HLBReport r6 = classify(zoo_build("slip_focus_fold", {}));
    REQUIRE(r6.kind == HLBKind::HLB6);
    CHECK(*r6.alpha == doctest::Approx(1.0));
    CHECK(*r6.beta == doctest::Approx(1.0));
    CHECK(r6.criticality == Criticality::Subcritical);
}

TEST_CASE("pendulum classifies as HLB 7") {
    HLBReport rep = classify(zoo_build("pendulum", {}));
    REQUIRE(rep.kind == HLBKind::HLB7);
    CHECK(*rep.alpha == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(*rep.beta == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.criticality == Criticality::Supercritical);
}

TEST_CASE("bilinear oscillator: HLB 8 at xhat = 0") {
    HLBReport rep = classify(zoo_build("bilinear", {}));
    REQUIRE(rep.kind == HLBKind::HLB8);
    const double b = 0.5, nu2 = 1.0;
    CHECK(*rep.alpha ==
          doctest::Approx(-9.0 * b * nu2 / (2.0 * (81.0 - 2.0 * b * b))).epsilon(1e-9));
    CHECK(*rep.beta ==
          doctest::Approx(162.0 / std::pow(36.0 - b * b, 1.5)).epsilon(1e-6));
}

TEST_CASE("bilinear oscillator: HLB 9 at xhat = 0.1") {
    HLBReport rep = classify(zoo_build("bilinear", {{"xhat", 0.1}}));
    REQUIRE(rep.kind == HLBKind::HLB9);
    CHECK(*rep.alpha == doctest::Approx(-5.0 / 9.0).epsilon(1e-10));
    CHECK(*rep.beta == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("fixed two-fold classifies as HLB 10") {
    HLBReport rep = classify(zoo_build("fixed_two_fold", {}));
    REQUIRE(rep.kind == HLBKind::HLB10);
    CHECK(*rep.alpha == doctest::Approx(-1.0));
    CHECK(*rep.beta == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("impact oscillator covers HLB 11, 12, 13") {
    HLBReport r11 = classify(zoo_build("impact_osc", {{"tau", 0.2}}));
    REQUIRE(r11.kind == HLBKind::HLB11);
    CHECK(*r11.alpha ==
          doctest::Approx(std::log(0.5) + 0.2 * kPi / std::sqrt(3.96)).epsilon(1e-9));
    CHECK(*r11.beta == doctest::Approx(1.0));
    CHECK(*r11.gamma == doctest::Approx(0.5).epsilon(1e-7));

    HLBReport r12 = classify(zoo_build("impact_osc", {{"tau", 0.8}}));
    REQUIRE(r12.kind == HLBKind::HLB12);
    CHECK(*r12.alpha > 0.0);
    CHECK(r12.cycle_side == -1);

    HLBReport r13 = classify(zoo_build("impact_osc", {{"tau", 2.5}}));
    REQUIRE(r13.kind == HLBKind::HLB13);
    CHECK(!r13.alpha.has_value());
    CHECK(r13.criticality == Criticality::Subcritical);
}

TEST_CASE("impulsive Lotka-Volterra classifies as HLB 14") {
    HLBReport rep = classify(zoo_build("lv_impulse", {}));
    REQUIRE(rep.kind == HLBKind::HLB14);
    CHECK(*rep.alpha == doctest::Approx(-1.0 / 6.0).epsilon(1e-8));
    CHECK(*rep.beta == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rep.predicted_period == doctest::Approx(1.5 * kPi));
}

TEST_CASE("relay observer classifies as HLB 15 / 16") {
    HLBReport r15 = classify(zoo_build_mech("relay_observer", "hysteretic"));
    REQUIRE(r15.kind == HLBKind::HLB15);
    CHECK(*r15.alpha == doctest::Approx(-2.0));

    HLBReport r16 = classify(zoo_build_mech("relay_observer", "delayed"));
    REQUIRE(r16.kind == HLBKind::HLB16);
    CHECK(*r16.alpha == doctest::Approx(-2.0));
}

TEST_CASE("forced oscillator classifies as HLB 17 / 18") {
    HLBReport r17 = classify(zoo_build_mech("forced_osc", "hysteretic"));
    REQUIRE(r17.kind == HLBKind::HLB17);
    CHECK(*r17.alpha == doctest::Approx(-1.0));

    HLBReport r18 = classify(zoo_build_mech("forced_osc", "delayed"));
    REQUIRE(r18.kind == HLBKind::HLB18);
    CHECK(*r18.alpha == doctest::Approx(-1.0));
}

TEST_CASE("wilson_cowan classifies as HLB 19 with the published onset") {
    PWSystem s = zoo_build("wilson_cowan", {});
    HLBReport rep = classify(s);
    REQUIRE(rep.kind == HLBKind::HLB19);
    // onset tau within 1e-3 of 0.5240
    const std::string& notes = s.notes;
    CHECK(notes.find("0.52") != std::string::npos);
    CHECK(*rep.alpha == doctest::Approx(-8.47).epsilon(0.02));
    CHECK(*rep.beta == doctest::Approx(9.53).epsilon(0.02));
    CHECK(rep.criticality == Criticality::Supercritical);
}

TEST_CASE("sqrt example classifies as HLB 20") {
    HLBReport rep = classify(zoo_build("sqrt_example", {}));
    REQUIRE(rep.kind == HLBKind::HLB20);
    CHECK(*rep.beta == doctest::Approx(1.0));
    CHECK(*rep.gamma == doctest::Approx(0.5));
    CHECK(rep.cycle_stable);
    CHECK(rep.predicted_period > 0.0);
}

TEST_CASE("gause builder places the boundary equilibrium at the origin") {
    PWSystem s = zoo_build("gause", {{"b", 0.25}});
    const auto& m = s.as<FilippovMech>();
    const Vec2 vl = m.left.eval(0.0, 0.0, 0.0);
    CHECK(std::fabs(vl.x) < 1e-9);
    CHECK(std::fabs(vl.y) < 1e-9);
    const Vec2 vr = m.right.eval(0.0, 0.0, 0.0);
    CHECK(vr.x < 0.0);
}
