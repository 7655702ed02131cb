#pragma once

// Event-driven simulation of all mechanism classes, producing labeled
// trajectories, plus the numerical Poincare return map built on top of it.

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "pwsb/model.hpp"
#include "pwsb/ode.hpp"

namespace pwsb {

enum class SegmentKind {
    FlowL,
    FlowR,
    FlowQ1,
    FlowQ2,
    FlowQ3,
    FlowQ4,
    Sliding,
    Reset,
    Impulse,
};

enum class EventType {
    Switch,
    SlideStart,
    SlideEnd,
    FoldTangency,
    Impact,
    ImpulseApplied,
    ZenoStop,
    TwoFoldStop,
    RepellingExit,
    DelayViolation,
    Section,
};

const char* segment_kind_name(SegmentKind k);
const char* event_type_name(EventType t);

struct TrajectorySegment {
    SegmentKind kind = SegmentKind::FlowL;
    double t_start = 0.0;
    double t_end = 0.0;
    std::vector<StepRecord> states;
};

struct TrajectoryEvent {
    double time = 0.0;
    EventType type = EventType::Switch;
    Vec2 location;
    std::string note;
};

struct Trajectory {
    std::vector<TrajectorySegment> segments;
    std::vector<TrajectoryEvent> events;
    double t_end = 0.0;
    Vec2 state_end;
    bool truncated = false;  // event budget or Zeno stop
};

enum class ExitSide { Left, Right };

struct SimPolicy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double manifold_tol = 1e-9;       // |f| scale for fold/two-fold detection
    ExitSide repelling_exit = ExitSide::Right;
    std::size_t max_events = 100000;
    double zeno_y_tol = 1e-10;        // impact velocity below which the cascade stops
    std::size_t zeno_max_resets = 1000000;
    double t_budget = 1e4;            // time horizon for section returns
};

// Adaptive dense-output integration of one smooth piece for a time span,
// local error bounded by tol.
IntegrateResult flow_piece(const SmoothPiece& piece, const Vec2& state, double dt,
                           double tol = 1e-10, double mu = 0.0);

// Simulate the system from state0 for t_max time units.
Trajectory simulate(const PWSystem& sys, const Vec2& state0, double t_max,
                    const SimPolicy& policy = {});

// ---------------------------------------------------------------------------
// Poincare return maps. The section and the meaning of r are
// mechanism-appropriate:
//   filippov / sqrt: r = y at an arrival at x=0 from the left half-plane
//   impact:          r = pre-impact velocity (y > 0 at x=0)
//   impulse:         r = y > 0 on the positive y-axis, pre-impulse
//   four-quadrant:   r = y > 0 on the positive y-axis
//   hysteretic:      r = y at the switch on x = +mu (end of the F_L phase)
//   delayed:         r = y at a field switch L -> R
// ---------------------------------------------------------------------------

enum class SectionKind { Full, RightHalf, LeftHalf };

struct PoincareResult {
    double P = 0.0;
    double T = 0.0;
    bool ok = false;
    std::string reason;          // set when !ok
    Vec2 extremes_min, extremes_max;  // bounding box of the orbit segment
};

PoincareResult poincare_numeric(const PWSystem& sys, SectionKind section, double r,
                                const SimPolicy& policy = {},
                                std::size_t max_events = 10000);

}  // namespace pwsb
