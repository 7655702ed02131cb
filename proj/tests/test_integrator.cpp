#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pwsb/geometry.hpp"
#include "pwsb/integrator.hpp"
#include "pwsb/verify.hpp"
#include "pwsb/zoo.hpp"

using namespace pwsb;

namespace {

PWSystem schematic() {
    Poly fl, gl, fr, gr;
    fl.add(0, 1, 1.0);
    gl.add(0, 0, 1.0);
    fr.add(0, 1, -2.0);
    fr.add(0, 0, 2.0);
    gr.add(0, 0, -1.0);
    PWSystem s;
    s.name = "schematic";
    s.mech = FilippovMech{SmoothPiece::polynomial(fl, gl), SmoothPiece::polynomial(fr, gr)};
    return s;
}

}  // namespace

TEST_CASE("flow accuracy: harmonic quarter period and affine closed form") {
    CHECK(check_flow_quarter_period().passed);
    CHECK(check_affine_flow_exact().passed);
}

TEST_CASE("zero field keeps the state constant") {
    PWSystem s;
    s.mech = FilippovMech{SmoothPiece::polynomial(Poly{}, Poly{}),
                          SmoothPiece::polynomial(Poly{}, Poly{})};
    Trajectory tr = simulate(s, {0.3, -0.4}, 5.0);
    CHECK(tr.state_end.x == doctest::Approx(0.3));
    CHECK(tr.state_end.y == doctest::Approx(-0.4));
    CHECK(tr.t_end == doctest::Approx(5.0));
}

TEST_CASE("Filippov crossing event with tight residual") {
    PWSystem s = schematic();
    Trajectory tr = simulate(s, {-0.1, 0.3}, 0.6);
    REQUIRE(!tr.events.empty());
    bool crossed = false;
    for (const auto& ev : tr.events) {
        if (ev.type == EventType::Switch) {
            crossed = true;
            CHECK(std::fabs(ev.location.x) < 1e-10);
            CHECK(ev.location.y > 0.0);
            CHECK(ev.location.y < 1.0);  // through the crossing region
        }
    }
    CHECK(crossed);
    CHECK(tr.state_end.x > 0.0);  // continued into the right half-plane
}

TEST_CASE("sliding entry, sliding motion, and tangential exit") {
    PWSystem s = schematic();
    Trajectory tr = simulate(s, {-1.0, 0.5}, 5.0);
    bool slide_started = false, slide_ended = false, has_sliding_segment = false;
    for (const auto& ev : tr.events) {
        if (ev.type == EventType::SlideStart) {
            slide_started = true;
            CHECK(ev.location.y == doctest::Approx(1.5).epsilon(1e-8));
        }
        if (ev.type == EventType::SlideEnd) {
            slide_ended = true;
            CHECK(ev.location.y == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
    for (const auto& seg : tr.segments) {
        if (seg.kind == SegmentKind::Sliding) {
            has_sliding_segment = true;
            for (std::size_t i = 0; i + 1 < seg.states.size(); ++i) {
                const auto& q = seg.states[i];
                CHECK(std::fabs(q.state.x) < 1e-12);
                // interior slide samples carry a strict convex weight (the
                // exit endpoint itself sits on a fold where w reaches 1)
                const double w = sliding_weight(s, q.state.y, 0.0);
                CHECK(w > 0.0);
                CHECK(w <= 1.0);
            }
        }
    }
    CHECK(slide_started);
    CHECK(slide_ended);
    CHECK(has_sliding_segment);
    CHECK(tr.state_end.x > 0.0);  // leaves through the visible fold of the right piece
}

TEST_CASE("repelling region start follows the exit policy") {
    PWSystem s = schematic();
    SimPolicy pol;
    pol.repelling_exit = ExitSide::Left;
    Trajectory tr = simulate(s, {0.0, -1.0}, 0.2, pol);
    bool flagged = false;
    for (const auto& ev : tr.events)
        if (ev.type == EventType::RepellingExit) flagged = true;
    CHECK(flagged);
    CHECK(tr.state_end.x < 0.0);

    SimPolicy pol_r;
    pol_r.repelling_exit = ExitSide::Right;
    Trajectory tr2 = simulate(s, {0.0, -1.0}, 0.2, pol_r);
    CHECK(tr2.state_end.x > 0.0);
}

TEST_CASE("time reversal retraces a crossing trajectory") {
    PWSystem s = schematic();
    const Vec2 start{-0.1, 0.3};
    const double T = 0.5;
    Trajectory fwd = simulate(s, start, T);
    // Reverse both fields; regions stay attached to their half-planes.
    const auto& m = s.as<FilippovMech>();
    auto negate = [](const SmoothPiece p) {
        return SmoothPiece::callable([p](double x, double y, double mu) {
            const Vec2 v = p.eval(x, y, mu);
            return Vec2{-v.x, -v.y};
        });
    };
    PWSystem rev;
    rev.mech = FilippovMech{negate(m.left), negate(m.right)};
    Trajectory back = simulate(rev, fwd.state_end, T);
    CHECK(std::fabs(back.state_end.x - start.x) < 1e-6);
    CHECK(std::fabs(back.state_end.y - start.y) < 1e-6);
}

TEST_CASE("impact oscillator reaches the pseudo-equilibrium through a Zeno cascade") {
    PWSystem s = zoo_build("impact_osc", {{"xi", -1.0}});
    Trajectory tr = simulate(s, {-0.5, 0.5}, 200.0);
    bool zeno = false;
    std::size_t impacts = 0;
    for (const auto& ev : tr.events) {
        if (ev.type == EventType::ZenoStop) zeno = true;
        if (ev.type == EventType::Impact) ++impacts;
    }
    CHECK(zeno);
    CHECK(impacts > 10);
    CHECK(tr.truncated);
    CHECK(std::fabs(tr.state_end.y) < 1e-8);
    CHECK(tr.t_end < 200.0);  // finite-time accumulation
}

TEST_CASE("impact events land on the manifold with zero residual") {
    PWSystem s = zoo_build("impact_osc", {{"xi", 1.0}});
    Trajectory tr = simulate(s, {-1.0, 0.2}, 30.0);
    std::size_t impacts = 0;
    for (const auto& ev : tr.events)
        if (ev.type == EventType::Impact) {
            ++impacts;
            CHECK(std::fabs(ev.location.x) < 1e-10);
            CHECK(ev.location.y > 0.0);
        }
    CHECK(impacts > 0);
}

TEST_CASE("hysteretic forced oscillator settles onto an alternating-switch cycle") {
    PWSystem s = zoo_build_mech("forced_osc", "hysteretic").with_mu(0.05);
    Trajectory tr = simulate(s, {0.2, 0.1}, 120.0);
    std::vector<double> xs;
    std::vector<double> ts;
    for (const auto& ev : tr.events)
        if (ev.type == EventType::Switch) {
            xs.push_back(ev.location.x);
            ts.push_back(ev.time);
        }
    REQUIRE(xs.size() > 8);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        CHECK(std::fabs(std::fabs(xs[i]) - 0.05) < 1e-9);
        CHECK(xs[i] * xs[i + 1] < 0.0);  // alternating x = +mu / x = -mu
    }
    // Times between late switches settle to a fixed half-period.
    const std::size_t n = ts.size();
    const double d1 = ts[n - 1] - ts[n - 2];
    const double d3 = ts[n - 3] - ts[n - 4];
    CHECK(d1 == doctest::Approx(d3).epsilon(1e-3));
}

TEST_CASE("delayed switching obeys the lag") {
    PWSystem s = zoo_build_mech("forced_osc", "delayed").with_mu(0.02);
    Trajectory tr = simulate(s, {0.05, 0.05}, 40.0);
    std::vector<double> ts;
    for (const auto& ev : tr.events)
        if (ev.type == EventType::Switch) ts.push_back(ev.time);
    REQUIRE(ts.size() > 6);
    for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i] - ts[i - 1] >= 0.02 * (1.0 - 1e-9));
    for (const auto& ev : tr.events) CHECK(ev.type != EventType::DelayViolation);
}

TEST_CASE("four-quadrant simulation cycles through the quadrants in order") {
    PWSystem s = zoo_build("wilson_cowan", {}).with_mu(0.05);
    Trajectory tr = simulate(s, {0.0, 0.05}, 10.0);
    REQUIRE(tr.segments.size() > 4);
    int expected = static_cast<int>(SegmentKind::FlowQ1);
    for (const auto& seg : tr.segments) {
        CHECK(static_cast<int>(seg.kind) == expected);
        expected = static_cast<int>(SegmentKind::FlowQ1) +
                   ((expected - static_cast<int>(SegmentKind::FlowQ1) + 1) % 4);
    }
}

TEST_CASE("impulse mechanism applies the law on the positive y-axis") {
    PWSystem s = zoo_build("lv_impulse", {{"nu", 2.5}});
    Trajectory tr = simulate(s, {0.0, 0.4}, 30.0);
    std::size_t impulses = 0;
    for (const auto& ev : tr.events)
        if (ev.type == EventType::ImpulseApplied) {
            ++impulses;
            CHECK(std::fabs(ev.location.x) < 1e-10);
            CHECK(ev.location.y > 0.0);
        }
    CHECK(impulses > 2);
}

TEST_CASE("poincare half-return matches the focus series to third order") {
    // DERIVED ratio oracle: |P_series - P_sim| / r^3 stays bounded as r -> 0.
    double prev_ratio = 0.0;
    for (double r : {0.1, 0.05, 0.02, 0.01}) {
        const double sim = simulate_focus_return(r);
        const double series = -r + 2.0 * (1.0 / 3.0) * r * r;
        const double ratio = std::fabs(sim - series) / (r * r * r);
        CHECK(ratio < 5.0);
        prev_ratio = ratio;
    }
    (void)prev_ratio;
}

TEST_CASE("poincare returns report failure reasons") {
    // Type II affine: small r never returns.
    Poly f, g;
    f.add(1, 0, -0.3);
    f.add(0, 1, 1.0);
    g.add(0, 0, 1.0);
    g.add(1, 0, -1.0);
    g.add(0, 1, -0.3);
    auto piece = SmoothPiece::polynomial(f, g);
    PWSystem s;
    s.mech = FilippovMech{piece, piece};
    SimPolicy pol;
    pol.t_budget = 50.0;
    PoincareResult res = poincare_numeric(s, SectionKind::RightHalf, 1e-3, pol, 4);
    CHECK(!res.ok);
    CHECK(!res.reason.empty());
}

TEST_CASE("delayed switching reports violations when the lag exceeds the spacing") {
    // A fast center under a long lag: x crosses zero every pi/10 time units,
    // so queued switch commands land closer together than the lag.
    Poly f, g;
    f.add(0, 1, 1.0);
    g.add(1, 0, -100.0);
    auto piece = SmoothPiece::polynomial(f, g);
    PWSystem s;
    s.mech = DelayedMech{piece, piece};
    s.mu = 1.0;
    Trajectory tr = simulate(s, {1.0, 0.0}, 10.0);
    bool violated = false;
    for (const auto& ev : tr.events)
        if (ev.type == EventType::DelayViolation) violated = true;
    CHECK(violated);
}
