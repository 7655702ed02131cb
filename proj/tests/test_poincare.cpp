#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pwsb/poincare.hpp"
#include "pwsb/zoo.hpp"

using namespace pwsb;

TEST_CASE("van der Pol limit cycle: existence, stability, sqrt growth") {
    PWSystem s = zoo_build("vdp", {});
    CycleSearch search;
    search.r_lo = 1e-3;
    search.r_hi = 3.0;
    auto fp1 = find_limit_cycle(s, 0.1, search);
    REQUIRE(fp1.has_value());
    CHECK(fp1->stable());
    CHECK(fp1->residual < 1e-8);
    auto fp2 = find_limit_cycle(s, 0.025, search);
    REQUIRE(fp2.has_value());
    // amplitude ~ sqrt(k1): quartering k1 halves the amplitude
    CHECK(fp1->amplitude() / fp2->amplitude() == doctest::Approx(2.0).epsilon(0.1));
    // period near 2 pi
    CHECK(fp1->period == doctest::Approx(2.0 * kPi).epsilon(0.05));
}

TEST_CASE("no cycle on the wrong side of a supercritical bifurcation") {
    PWSystem s = zoo_build("pendulum", {});
    CycleSearch search;
    search.r_lo = 1e-4;
    search.r_hi = 0.5;
    CHECK(!find_limit_cycle(s, -0.05, search).has_value());
    auto fp = find_limit_cycle(s, 0.05, search);
    REQUIRE(fp.has_value());
    CHECK(fp->stable());
}

TEST_CASE("fixed point is a genuine fixed point of the return map") {
    PWSystem s = zoo_build("vdp", {});
    CycleSearch search;
    search.r_lo = 1e-2;
    search.r_hi = 3.0;
    auto fp = find_limit_cycle(s, 0.1, search);
    REQUIRE(fp.has_value());
    PoincareResult ret = poincare_numeric(s.with_mu(0.1), SectionKind::Full, fp->r_star);
    REQUIRE(ret.ok);
    CHECK(ret.P == doctest::Approx(fp->r_star).epsilon(1e-7));
}

TEST_CASE("McKean sweep shows the unstable branch below onset") {
    // The subcritical cycle grows fast (amplitude ~ 1.4e2 |mu|) and grazes the
    // second manifold beyond |mu| ~ 5e-3, so the sweep stays near onset.
    PWSystem family = zoo_build("mckean", {});
    std::vector<double> grid;
    for (int i = 0; i < 9; ++i) grid.push_back(-0.0035 + 0.001 * i);  // mu = I - 0.375
    SweepOptions opt;
    opt.search.r_lo = 1e-5;
    opt.search.r_hi = 0.1;
    opt.box = {-0.4, 0.4, -0.4, 0.4, 12};
    opt.slide_lo = -0.3;
    opt.slide_hi = 0.3;
    auto rows = sweep_diagram(family, grid, opt);
    int unstable_below = 0, stable_above = 0, unstable_above = 0;
    for (const auto& b : rows) {
        if (b.branch == "cycle_y_max") {
            if (b.mu < -1e-12 && !b.stable) ++unstable_below;
            if (b.mu > 1e-12 && b.stable) ++stable_above;
            if (b.mu > 1e-12 && !b.stable) ++unstable_above;
        }
    }
    // The local subcritical branch lives below onset; anything above is the
    // coexisting large relaxation oscillation, which is stable.
    CHECK(unstable_below >= 3);
    CHECK(unstable_above == 0);
    CHECK(stable_above >= 0);
}

TEST_CASE("ocean sweep shows the stable cycle for lambda < 1") {
    PWSystem family = zoo_build("ocean", {});
    std::vector<double> grid;
    for (int i = 0; i < 7; ++i) grid.push_back(-0.03 + 0.01 * i);  // mu = 1 - lambda
    SweepOptions opt;
    opt.search.r_lo = 1e-5;
    opt.search.r_hi = 0.8;
    opt.box = {-0.5, 0.5, -0.5, 0.5, 12};
    auto rows = sweep_diagram(family, grid, opt);
    int stable_cycles = 0;
    for (const auto& b : rows)
        if (b.branch == "cycle_y_max" && b.mu > 1e-12) {
            ++stable_cycles;
            CHECK(b.stable);
        }
    CHECK(stable_cycles >= 2);

    CHECK(sweep_diagram(family, {}, opt).empty());
}

TEST_CASE("attractor measurement for a delayed relay cycle") {
    PWSystem s = zoo_build_mech("relay_observer", "delayed");
    const double mu = 0.02;
    auto fp = measure_attractor_cycle(s, mu, {0.5 * mu, 0.0}, 20.0, 6);
    REQUIRE(fp.has_value());
    // Leading-order period 4 mu for this system.
    CHECK(fp->period == doctest::Approx(4.0 * mu).epsilon(0.1));
    CHECK(std::fabs(fp->multiplier) < 1.0);
}

TEST_CASE("theorem seed accelerates the two-fold search and matches the law") {
    PWSystem family = zoo_build("pendulum", {});
    HLBReport rep = classify(family);
    const double mu = 1e-3;
    auto seed = theorem_seed(rep, mu);
    REQUIRE(seed.has_value());
    CycleSearch search;
    search.r_lo = 1e-5;
    search.r_hi = 0.5;
    search.seed = seed;
    auto fp = find_limit_cycle(family, mu, search);
    REQUIRE(fp.has_value());
    CHECK(fp->r_star == doctest::Approx(*seed).epsilon(0.1));
    CHECK(!theorem_seed(rep, -mu).has_value());  // no cycle side
}

TEST_CASE("diagram rows include the continuation fixed point") {
    PWSystem family = zoo_build("pendulum", {});
    SweepOptions opt;
    opt.search.r_lo = 1e-5;
    opt.search.r_hi = 0.5;
    opt.parallel = false;
    std::vector<double> grid{1e-3, 2e-3, 4e-3};
    auto rows = sweep_diagram(family, grid, opt);
    int r_star_rows = 0;
    for (const auto& b : rows)
        if (b.branch == "cycle_r_star") ++r_star_rows;
    CHECK(r_star_rows == 3);
}
