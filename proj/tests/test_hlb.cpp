#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pwsb/geometry.hpp"
#include "pwsb/hlb.hpp"
#include "pwsb/integrator.hpp"
#include "pwsb/zoo.hpp"

using namespace pwsb;

TEST_CASE("hopf_coeffs on the van der Pol normal form") {
    PWSystem s = zoo_build("vdp", {{"k2", 2.0}});
    const auto& m = s.as<FilippovMech>();
    HopfCoeffs hc = hopf_coeffs(m.left.taylor(0.0));
    CHECK(hc.beta == doctest::Approx(1.0));
    CHECK(hc.alpha == doctest::Approx(-12.0));
}

TEST_CASE("hopf_coeffs on a linear center vanish") {
    Poly f, g;
    f.add(0, 1, 1.0);
    g.add(1, 0, -1.0);
    HopfCoeffs hc = hopf_coeffs(SmoothPiece::polynomial(f, g).taylor(0.0));
    CHECK(hc.alpha == 0.0);
    CHECK(hc.beta == 0.0);
}

TEST_CASE("hopf alpha sign matches a return-map curvature oracle") {
    // Cubic perturbations of a center with fixed pseudo-random coefficients.
    struct Case {
        double c30, c12, d21, d03;
    };
    const Case cases[] = {
        {-0.7, 0.3, 0.2, -0.4}, {0.5, 0.1, -0.3, 0.6}, {0.2, -0.8, 0.4, 0.3},
        {-0.1, -0.2, -0.3, -0.4},
    };
    for (const Case& cs : cases) {
        Poly f, g;
        f.add(0, 1, 1.0);
        f.add(3, 0, cs.c30);
        f.add(1, 2, cs.c12);
        g.add(1, 0, -1.0);
        g.add(2, 1, cs.d21);
        g.add(0, 3, cs.d03);
        auto piece = SmoothPiece::polynomial(f, g);
        HopfCoeffs hc = hopf_coeffs(piece.taylor(0.0));
        PWSystem sys;
        sys.mech = FilippovMech{piece, piece};
        SimPolicy pol;
        pol.abs_tol = 1e-14;
        pol.rel_tol = 1e-12;
        const double r = 0.05;
        PoincareResult full = poincare_numeric(sys, SectionKind::Full, r, pol);
        REQUIRE(full.ok);
        // alpha < 0: orbits contract; alpha > 0: they expand.
        if (hc.alpha < 0.0)
            CHECK(full.P < r);
        else
            CHECK(full.P > r);
    }
}

TEST_CASE("predicted period coefficients for the relay pseudo-equilibrium") {
    HLBReport rep15 = classify(zoo_build_mech("relay_observer", "hysteretic"));
    REQUIRE(rep15.kind == HLBKind::HLB15);
    CHECK(rep15.period_form == PeriodForm::PowerLawCoefficient);
    CHECK(rep15.predicted_period == doctest::Approx(4.0));  // 2/a0L - 2/a0R with a0 = +-1

    HLBReport rep16 = classify(zoo_build_mech("relay_observer", "delayed"));
    REQUIRE(rep16.kind == HLBKind::HLB16);
    CHECK(rep16.predicted_period == doctest::Approx(4.0));  // 2 - a0L/a0R - a0R/a0L
}

TEST_CASE("slipping foci period limit") {
    HLBReport rep = classify(zoo_build("slip_focus_focus", {}));
    REQUIRE(rep.kind == HLBKind::HLB5);
    CHECK(rep.predicted_period == doctest::Approx(2.0 * kPi));
}

TEST_CASE("scaling_row lookup matches the tabulated exponents") {
    CHECK(scaling_row(HLBKind::Hopf).amplitude == Rational(1, 2));
    CHECK(scaling_row(HLBKind::Hopf).period == Rational(0));
    CHECK(scaling_row(HLBKind::HLB7).amplitude == Rational(1, 2));
    CHECK(scaling_row(HLBKind::HLB7).period == Rational(1, 2));
    CHECK(scaling_row(HLBKind::HLB17).amplitude == Rational(1, 3));
    CHECK(scaling_row(HLBKind::HLB17).period == Rational(1, 3));
    CHECK(scaling_row(HLBKind::HLB15).amplitude == Rational(1));
    CHECK(scaling_row(HLBKind::HLB15).period == Rational(1));
    CHECK(scaling_row(HLBKind::HLB1).amplitude == Rational(1));
    CHECK(scaling_row(HLBKind::HLB1).period == Rational(0));
}

TEST_CASE("impact period equation solves on the documented branch") {
    // tau = 0.2, delta = 1, r = 0.5: lambda = 0.1, omega = sqrt(0.99).
    const double lambda = 0.1, omega = std::sqrt(0.99), gamma = 0.5;
    const double T = impact_period_root(lambda, omega, gamma, true);
    CHECK(T > kPi / omega);
    CHECK(T < 2.0 * kPi / omega);
    // residual check
    const double nu = lambda / omega;
    const double lhs = gamma * std::exp(2.0 * lambda * T);
    const double rhs = aux_rho(omega * T, nu) / aux_rho(omega * T, -nu);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
}

TEST_CASE("unclassified systems come back with a checklist") {
    // A Filippov system with no structure at the origin at all.
    Poly fl, gl, fr, gr;
    fl.add(0, 0, 0.4);
    gl.add(0, 0, 1.0);
    fr.add(0, 0, 0.7);
    gr.add(0, 0, -1.0);
    PWSystem s;
    s.mech = FilippovMech{SmoothPiece::polynomial(fl, gl), SmoothPiece::polynomial(fr, gr)};
    HLBReport rep = classify(s);
    CHECK(rep.kind == HLBKind::Unclassified);
    CHECK(!rep.checklist.empty());
}

TEST_CASE("degree cap: degree-5 polynomials are rejected for coefficient work") {
    Poly f, g;
    f.add(0, 5, 1.0);
    f.add(0, 1, 1.0);
    g.add(1, 0, -1.0);
    auto piece = SmoothPiece::polynomial(f, g);
    PWSystem s;
    s.mech = FilippovMech{piece, piece};
    CHECK_THROWS_AS(classify(s), ModelError);
    // Simulation is still allowed.
    Trajectory tr = simulate(s, {0.1, 0.1}, 1.0);
    CHECK(tr.t_end == doctest::Approx(1.0));
}

TEST_CASE("time-reversal duality negates alpha on the slipping-foci example") {
    HLBReport a = classify(zoo_build("slip_focus_focus",
                                     {{"lambda_L", 0.1}, {"lambda_R", -0.5}}));
    HLBReport b = classify(zoo_build("slip_focus_focus",
                                     {{"lambda_L", 0.5}, {"lambda_R", -0.1}}));
    REQUIRE(a.kind == HLBKind::HLB5);
    REQUIRE(b.kind == HLBKind::HLB5);
    CHECK(*a.alpha == doctest::Approx(-*b.alpha));
    CHECK(a.criticality == Criticality::Supercritical);
    CHECK(b.criticality == Criticality::Subcritical);
}

TEST_CASE("degenerate alpha is reported, not guessed") {
    // Slipping foci with lambda_L = -lambda_R: alpha = 0 exactly.
    HLBReport rep = classify(zoo_build("slip_focus_focus",
                                       {{"lambda_L", 0.3}, {"lambda_R", -0.3}}));
    REQUIRE(rep.kind == HLBKind::HLB5);
    CHECK(rep.criticality == Criticality::Degenerate);
    CHECK(rep.cycle_side == 0);
}

TEST_CASE("BEB transversality: equilibrium distance is linear with slope beta") {
    // x*(mu) = -beta mu / (lambda^2 + omega^2) + O(mu^2) for the McKean model.
    PWSystem family = zoo_build("mckean", {});
    HLBReport rep = classify(family);
    REQUIRE(rep.kind == HLBKind::HLB1);
    const double denomL =
        rep.eig_left.lambda * rep.eig_left.lambda + rep.eig_left.omega * rep.eig_left.omega;
    SearchBox box{-0.2, 0.2, -0.2, 0.2, 10};
    std::vector<double> mus{-2e-3, -1e-3, 1e-3, 2e-3};
    for (double mu : mus) {
        auto eqs = find_regular_equilibria(family.with_mu(mu), box, mu);
        bool found = false;
        for (const auto& eq : eqs) {
            const bool left_admissible =
                eq.kind == EquilibriumKind::RegularL && eq.admissible;
            const bool right_admissible =
                eq.kind == EquilibriumKind::RegularR && eq.admissible;
            if (mu > 0.0 && left_admissible) {
                found = true;
                CHECK(eq.location.x ==
                      doctest::Approx(-*rep.beta * mu / denomL).epsilon(0.05));
            }
            if (mu < 0.0 && right_admissible) found = true;
        }
        CHECK(found);  // admissible side flips with the sign of mu
    }
}

TEST_CASE("two-fold arrival halts with a diagnostic") {
    PWSystem family = zoo_build("fixed_two_fold", {});
    Trajectory tr = simulate(family.with_mu(0.0), {0.0, 1e-12}, 1.0);
    bool stopped = false;
    for (const auto& ev : tr.events)
        if (ev.type == EventType::TwoFoldStop) stopped = true;
    CHECK(stopped);
    CHECK(tr.truncated);
}

TEST_CASE("mirrored systems classify through the half-plane swap") {
    // Rotate the Gause model by pi so its boundary focus sits on the right.
    PWSystem g = zoo_build("gause", {});
    const auto& m = g.as<FilippovMech>();
    auto rot = [](const SmoothPiece p) {
        return SmoothPiece::callable([p](double x, double y, double mu) {
            const Vec2 v = p.eval(-x, -y, mu);
            return Vec2{-v.x, -v.y};
        }, FdOptions{1e-2});
    };
    PWSystem mirrored;
    mirrored.name = "gause_mirrored";
    mirrored.mech = FilippovMech{rot(m.right), rot(m.left)};
    HLBReport rep = classify(mirrored);
    CHECK(rep.kind == HLBKind::HLB3);
    CHECK(*rep.gamma < 0.0);
}

TEST_CASE("flow_piece honors the requested tolerance") {
    Poly f, gg;
    f.add(0, 1, 1.0);
    gg.add(1, 0, -1.0);
    auto piece = SmoothPiece::polynomial(f, gg);
    IntegrateResult res = flow_piece(piece, {1.0, 0.0}, 0.5 * kPi, 1e-12);
    CHECK(std::fabs(res.state_end.x) < 1e-9);
    CHECK(std::fabs(res.state_end.y + 1.0) < 1e-9);
}
