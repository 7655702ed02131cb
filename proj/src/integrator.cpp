#include "pwsb/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "pwsb/geometry.hpp"

namespace pwsb {

const char* segment_kind_name(SegmentKind k) {
    switch (k) {
        case SegmentKind::FlowL: return "flow_L";
        case SegmentKind::FlowR: return "flow_R";
        case SegmentKind::FlowQ1: return "flow_quadrant_1";
        case SegmentKind::FlowQ2: return "flow_quadrant_2";
        case SegmentKind::FlowQ3: return "flow_quadrant_3";
        case SegmentKind::FlowQ4: return "flow_quadrant_4";
        case SegmentKind::Sliding: return "sliding";
        case SegmentKind::Reset: return "reset";
        case SegmentKind::Impulse: return "impulse";
    }
    return "unknown";
}

const char* event_type_name(EventType t) {
    switch (t) {
        case EventType::Switch: return "switch";
        case EventType::SlideStart: return "slide_start";
        case EventType::SlideEnd: return "slide_end";
        case EventType::FoldTangency: return "fold_tangency";
        case EventType::Impact: return "impact";
        case EventType::ImpulseApplied: return "impulse";
        case EventType::ZenoStop: return "zeno_stop";
        case EventType::TwoFoldStop: return "two_fold_stop";
        case EventType::RepellingExit: return "repelling_exit";
        case EventType::DelayViolation: return "delay_violation";
        case EventType::Section: return "section";
    }
    return "unknown";
}

namespace {

Rhs rhs_of(const SmoothPiece& piece, double mu) {
    return [&piece, mu](double, const Vec2& s) { return piece.eval(s.x, s.y, mu); };
}

OdeOptions ode_options(const SimPolicy& p) {
    OdeOptions o;
    o.abs_tol = p.abs_tol;
    o.rel_tol = p.rel_tol;
    return o;
}

struct Recorder {
    Trajectory traj;
    Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};

    void bump(const Vec2& s) {
        lo.x = std::min(lo.x, s.x);
        lo.y = std::min(lo.y, s.y);
        hi.x = std::max(hi.x, s.x);
        hi.y = std::max(hi.y, s.y);
    }
    void add_segment(SegmentKind kind, std::vector<StepRecord> states) {
        if (states.empty()) return;
        TrajectorySegment seg;
        seg.kind = kind;
        seg.t_start = states.front().t;
        seg.t_end = states.back().t;
        seg.states = std::move(states);
        for (const auto& r : seg.states) bump(r.state);
        traj.segments.push_back(std::move(seg));
    }
    void add_event(double t, EventType type, const Vec2& loc, std::string note = {}) {
        traj.events.push_back({t, type, loc, std::move(note)});
    }
};

// Arrival at the switching manifold; `from_left` tells which half-plane the
// preceding flow segment lived in. `visited_other` reports whether the orbit
// has visited the opposite half-plane or slid since the start (used to tell a
// full loop from the first half-arc).
struct Arrival {
    double t = 0.0;
    double y = 0.0;
    bool from_left = false;
    bool visited_other = true;
};

using StopPredicate = std::function<bool(const Arrival&)>;

// ---------------------------------------------------------------------------
// Filippov (also used for the continuous and square-root systems through the
// same left/right piece interface).
// ---------------------------------------------------------------------------

struct FilippovSim {
    const SmoothPiece& left;
    const SmoothPiece& right;
    double mu;
    const SimPolicy& policy;
    Recorder& rec;
    StopPredicate stop;

    double f_tol(double y, const SmoothPiece& p) const {
        const double h = 1e-6 * (1.0 + std::fabs(y));
        const double d = (p.eval(0.0, y + h, mu).x - p.eval(0.0, y - h, mu).x) / (2.0 * h);
        return policy.manifold_tol * (1.0 + std::fabs(d));
    }

    // Runs until t_max or a stop-predicate arrival; returns final time.
    void run(Vec2 s, double t0, double t_max) {
        double t = t0;
        enum class Mode { L, R, Slide } mode;

        auto decide_on_manifold = [&](double y, bool arriving_from_left,
                                      bool have_origin_side) -> Mode {
            const double fl = left.eval(0.0, y, mu).x;
            const double fr = right.eval(0.0, y, mu).x;
            const double tl = f_tol(y, left), tr = f_tol(y, right);
            if (std::fabs(fl) < tl && std::fabs(fr) < tr) {
                rec.add_event(t, EventType::TwoFoldStop, {0.0, y},
                              "reached a two-fold; continuation not chosen");
                rec.traj.truncated = true;
                return Mode::Slide;  // caller checks truncated flag
            }
            if (fl > 0.0 && fr < 0.0) return Mode::Slide;
            if (fl < 0.0 && fr > 0.0) {
                rec.add_event(t, EventType::RepellingExit, {0.0, y},
                              "forward orbit non-unique; policy exit");
                return policy.repelling_exit == ExitSide::Left ? Mode::L : Mode::R;
            }
            if (fl > 0.0 && fr > 0.0) return Mode::R;
            if (fl < 0.0 && fr < 0.0) return Mode::L;
            // One field is (numerically) tangent: fold boundary. Continue on
            // the side the non-tangent field dictates.
            rec.add_event(t, EventType::FoldTangency, {0.0, y});
            if (std::fabs(fl) < tl) return fr > 0.0 ? Mode::R : Mode::Slide;
            if (have_origin_side) return arriving_from_left ? Mode::R : Mode::L;
            return fl > 0.0 ? Mode::R : Mode::L;
        };

        if (std::fabs(s.x) < 1e-14) {
            mode = decide_on_manifold(s.y, false, false);
            if (rec.traj.truncated) {
                rec.traj.t_end = t;
                rec.traj.state_end = s;
                return;
            }
        } else {
            mode = s.x < 0.0 ? Mode::L : Mode::R;
        }

        std::size_t events_used = 0;
        bool been_right_or_slide = (mode != Mode::L);
        bool been_left_or_slide = (mode != Mode::R);
        while (t < t_max) {
            if (++events_used > policy.max_events) {
                rec.traj.truncated = true;
                break;
            }
            if (mode == Mode::L || mode == Mode::R) {
                const bool in_left = (mode == Mode::L);
                if (in_left)
                    been_left_or_slide = true;
                else
                    been_right_or_slide = true;
                const SmoothPiece& piece = in_left ? left : right;
                std::vector<EventSpec> evs;
                evs.push_back({[](double, const Vec2& v) { return v.x; },
                               in_left ? +1 : -1, true});
                IntegrateResult r =
                    integrate(rhs_of(piece, mu), t, s, t_max, evs, ode_options(policy));
                rec.add_segment(in_left ? SegmentKind::FlowL : SegmentKind::FlowR,
                                std::move(r.samples));
                t = r.t_end;
                s = r.state_end;
                if (!r.event) break;  // reached t_max inside one half-plane
                s.x = 0.0;            // land exactly on the manifold
                Arrival arr{t, s.y, in_left,
                            in_left ? been_right_or_slide : been_left_or_slide};
                rec.add_event(t, EventType::Switch, s);
                if (stop && stop(arr)) {
                    rec.traj.t_end = t;
                    rec.traj.state_end = s;
                    return;
                }
                Mode next = decide_on_manifold(s.y, in_left, true);
                if (rec.traj.truncated) break;
                if (next == Mode::Slide)
                    rec.add_event(t, EventType::SlideStart, s);
                mode = next;
            } else {
                been_right_or_slide = been_left_or_slide = true;
                // Sliding: integrate dy/dt = g_slide(y) with exit events on
                // f_L(0,y) and f_R(0,y).
                auto slide_rhs = [this](double, const Vec2& v) -> Vec2 {
                    const Vec2 vl = left.eval(0.0, v.x, mu);
                    const Vec2 vr = right.eval(0.0, v.x, mu);
                    const double denom = vl.x - vr.x;
                    return {(vl.x * vr.y - vr.x * vl.y) / denom, 0.0};
                };
                std::vector<EventSpec> evs;
                evs.push_back({[this](double, const Vec2& v) {
                                   return left.eval(0.0, v.x, mu).x;
                               },
                               -1, true});
                evs.push_back({[this](double, const Vec2& v) {
                                   return right.eval(0.0, v.x, mu).x;
                               },
                               +1, true});
                IntegrateResult r =
                    integrate(slide_rhs, t, {s.y, 0.0}, t_max, evs, ode_options(policy));
                std::vector<StepRecord> states;
                states.reserve(r.samples.size());
                for (const auto& q : r.samples) states.push_back({q.t, {0.0, q.state.x}});
                rec.add_segment(SegmentKind::Sliding, std::move(states));
                t = r.t_end;
                s = {0.0, r.state_end.x};
                if (!r.event) break;  // t_max while sliding
                // Exit tangentially into the half-plane whose field vanished.
                const bool exit_left = (r.event->index == 0);
                rec.add_event(t, EventType::SlideEnd, s);
                mode = exit_left ? Mode::L : Mode::R;
            }
        }
        rec.traj.t_end = t;
        rec.traj.state_end = s;
    }
};

// ---------------------------------------------------------------------------
// Impact
// ---------------------------------------------------------------------------

void run_impact(const ImpactMech& m, double mu, Vec2 s, double t0, double t_max,
                const SimPolicy& policy, Recorder& rec, const StopPredicate& stop) {
    double t = t0;
    std::size_t resets = 0;
    if (s.x > 0.0) throw ModelError("impact: initial state must satisfy x <= 0");
    while (t < t_max) {
        std::vector<EventSpec> evs;
        evs.push_back({[](double, const Vec2& v) { return v.x; }, +1, true});
        OdeOptions opt = ode_options(policy);
        // Post-impact micro-loops last about 2|y|; keep steps below that so
        // the Zeno cascade cannot jump the wall.
        const double scale = std::hypot(s.x, s.y);
        if (scale > 0.0) opt.h_max = std::max(scale, 1e-13);
        IntegrateResult r = integrate(rhs_of(m.field, mu), t, s, t_max, evs, opt);
        rec.add_segment(SegmentKind::FlowL, std::move(r.samples));
        t = r.t_end;
        s = r.state_end;
        if (!r.event) break;
        s.x = 0.0;
        rec.add_event(t, EventType::Impact, s);
        if (stop && stop(Arrival{t, s.y, true, true})) {
            rec.traj.t_end = t;
            rec.traj.state_end = s;
            return;
        }
        ++resets;
        if (std::fabs(s.y) < policy.zeno_y_tol || resets > policy.zeno_max_resets) {
            rec.add_event(t, EventType::ZenoStop, s,
                          resets > policy.zeno_max_resets ? "reset budget" : "impact velocity underflow");
            rec.traj.truncated = true;
            break;
        }
        const double y_new = m.reset(s.y, mu);
        rec.add_segment(SegmentKind::Reset, {{t, s}, {t, {0.0, y_new}}});
        s = {0.0, y_new};
    }
    rec.traj.t_end = t;
    rec.traj.state_end = s;
}

// ---------------------------------------------------------------------------
// Impulse
// ---------------------------------------------------------------------------

void run_impulse(const ImpulseMech& m, double mu, Vec2 s, double t0, double t_max,
                 const SimPolicy& policy, Recorder& rec, const StopPredicate& stop) {
    double t = t0;
    while (t < t_max) {
        std::vector<EventSpec> evs;
        // Rising crossing of x = 0; accepted only on the positive y-axis.
        evs.push_back({[](double, const Vec2& v) { return v.x; }, +1, true});
        IntegrateResult r =
            integrate(rhs_of(m.field, mu), t, s, t_max, evs, ode_options(policy));
        rec.add_segment(SegmentKind::FlowL, std::move(r.samples));
        t = r.t_end;
        s = r.state_end;
        if (!r.event) break;
        if (s.y <= 0.0) {
            // Crossing below the origin; not an impulse section. Continue.
            s.x = 1e-14 * (1.0 + std::fabs(s.y));
            continue;
        }
        s.x = 0.0;
        rec.add_event(t, EventType::ImpulseApplied, s);
        if (stop && stop(Arrival{t, s.y, true, true})) {
            rec.traj.t_end = t;
            rec.traj.state_end = s;
            return;
        }
        const double rad = m.radius(s.y, mu);
        const double ang = m.angle(s.y, mu);
        const Vec2 mapped{rad * std::cos(ang), rad * std::sin(ang)};
        rec.add_segment(SegmentKind::Impulse, {{t, s}, {t, mapped}});
        s = mapped;
    }
    rec.traj.t_end = t;
    rec.traj.state_end = s;
}

// ---------------------------------------------------------------------------
// Hysteretic
// ---------------------------------------------------------------------------

void run_hysteretic(const HystereticMech& m, double mu, Vec2 s, double t0, double t_max,
                    const SimPolicy& policy, Recorder& rec, const StopPredicate& stop) {
    double t = t0;
    bool active_left;
    if (s.x >= mu)
        active_left = false;
    else if (s.x <= -mu)
        active_left = true;
    else
        active_left = s.x < 0.0;
    while (t < t_max) {
        const SmoothPiece& piece = active_left ? m.left : m.right;
        const double level = active_left ? mu : -mu;
        std::vector<EventSpec> evs;
        evs.push_back({[level](double, const Vec2& v) { return v.x - level; },
                       active_left ? +1 : -1, true});
        IntegrateResult r = integrate(rhs_of(piece, mu), t, s, t_max, evs, ode_options(policy));
        rec.add_segment(active_left ? SegmentKind::FlowL : SegmentKind::FlowR,
                        std::move(r.samples));
        t = r.t_end;
        s = r.state_end;
        if (!r.event) break;
        s.x = level;
        rec.add_event(t, EventType::Switch, s);
        if (stop && stop(Arrival{t, s.y, active_left, true})) {
            rec.traj.t_end = t;
            rec.traj.state_end = s;
            return;
        }
        active_left = !active_left;
    }
    rec.traj.t_end = t;
    rec.traj.state_end = s;
}

// ---------------------------------------------------------------------------
// Delayed (method of steps: zero crossings of x(t) schedule field switches
// one lag later).
// ---------------------------------------------------------------------------

void run_delayed(const DelayedMech& m, double mu, Vec2 s, double t0, double t_max,
                 const SimPolicy& policy, Recorder& rec, const StopPredicate& stop) {
    double t = t0;
    bool field_left = s.x <= 0.0;  // constant history at state0
    struct Pending {
        double time;
        bool to_left;
    };
    std::deque<Pending> pending;
    double last_switch_time = -1e300;

    while (t < t_max) {
        const double t_stop = pending.empty() ? t_max : std::min(t_max, pending.front().time);
        const SmoothPiece& piece = field_left ? m.left : m.right;
        std::vector<EventSpec> evs;
        evs.push_back({[](double, const Vec2& v) { return v.x; }, 0, true});
        IntegrateResult r = integrate(rhs_of(piece, mu), t, s, t_stop, evs, ode_options(policy));
        rec.add_segment(field_left ? SegmentKind::FlowL : SegmentKind::FlowR,
                        std::move(r.samples));
        const double t_prev = t;
        t = r.t_end;
        s = r.state_end;
        if (r.event) {
            // x(t) crossed zero: schedule the field change one lag later.
            const double f_here = piece.eval(s.x, s.y, mu).x;
            const bool to_left = f_here < 0.0;  // sign of x just after the crossing
            pending.push_back({t + mu, to_left});
            // Nudge off the zero set so the event does not refire.
            s.x = (to_left ? -1.0 : 1.0) * 1e-14 * (1.0 + std::fabs(s.y));
            continue;
        }
        (void)t_prev;
        if (!pending.empty() && t >= pending.front().time - 1e-15) {
            const Pending p = pending.front();
            pending.pop_front();
            if (p.to_left != field_left) {
                rec.add_event(t, EventType::Switch, s);
                if (t - last_switch_time < mu * (1.0 - 1e-9)) {
                    rec.add_event(t, EventType::DelayViolation, s,
                                  "switch interval shorter than the lag");
                }
                const bool was_left = field_left;
                field_left = p.to_left;
                last_switch_time = t;
                if (stop && stop(Arrival{t, s.y, was_left, true})) {
                    rec.traj.t_end = t;
                    rec.traj.state_end = s;
                    return;
                }
            }
        } else if (t >= t_max) {
            break;
        }
    }
    rec.traj.t_end = t;
    rec.traj.state_end = s;
}

// ---------------------------------------------------------------------------
// Four-quadrant
// ---------------------------------------------------------------------------

int quadrant_of(const Vec2& s) {
    if (s.x >= 0.0 && s.y > 0.0) return 0;   // Omega_1
    if (s.x > 0.0 && s.y <= 0.0) return 1;   // Omega_2
    if (s.x <= 0.0 && s.y < 0.0) return 2;   // Omega_3
    return 3;                                // Omega_4
}

void run_four_quadrant(const FourQuadrantMech& m, double mu, Vec2 s, double t0, double t_max,
                       const SimPolicy& policy, Recorder& rec, const StopPredicate& stop) {
    double t = t0;
    int q = quadrant_of(s);
    static const SegmentKind kinds[4] = {SegmentKind::FlowQ1, SegmentKind::FlowQ2,
                                         SegmentKind::FlowQ3, SegmentKind::FlowQ4};
    std::size_t events_used = 0;
    while (t < t_max) {
        if (++events_used > policy.max_events) {
            rec.traj.truncated = true;
            break;
        }
        std::vector<EventSpec> evs;
        // Clockwise exits: Q1 -> y=0 falling; Q2 -> x=0 falling; Q3 -> y=0
        // rising; Q4 -> x=0 rising.
        switch (q) {
            case 0: evs.push_back({[](double, const Vec2& v) { return v.y; }, -1, true}); break;
            case 1: evs.push_back({[](double, const Vec2& v) { return v.x; }, -1, true}); break;
            case 2: evs.push_back({[](double, const Vec2& v) { return v.y; }, +1, true}); break;
            case 3: evs.push_back({[](double, const Vec2& v) { return v.x; }, +1, true}); break;
        }
        IntegrateResult r =
            integrate(rhs_of(m.quadrant[q], mu), t, s, t_max, evs, ode_options(policy));
        rec.add_segment(kinds[q], std::move(r.samples));
        t = r.t_end;
        s = r.state_end;
        if (!r.event) break;
        if (q == 1 || q == 3)
            s.x = 0.0;
        else
            s.y = 0.0;
        rec.add_event(t, EventType::Switch, s);
        const int q_next = (q + 1) % 4;
        if (stop && q == 3 && s.y > 0.0 && stop(Arrival{t, s.y, true, true})) {
            rec.traj.t_end = t;
            rec.traj.state_end = s;
            return;
        }
        q = q_next;
    }
    rec.traj.t_end = t;
    rec.traj.state_end = s;
}

// ---------------------------------------------------------------------------
// Square-root continuous field: one smooth-enough flow; segments split at
// x = 0 crossings for labeling and section work.
// ---------------------------------------------------------------------------

void run_sqrt(const SqrtMech& m, double mu, Vec2 s, double t0, double t_max,
              const SimPolicy& policy, Recorder& rec, const StopPredicate& stop) {
    double t = t0;
    auto rhs = [&](double, const Vec2& v) { return m.field.eval(v.x, v.y, mu); };
    std::size_t guard = 0;
    bool been_left = s.x < 0.0, been_right = s.x > 0.0;
    while (t < t_max) {
        if (++guard > policy.max_events) {
            rec.traj.truncated = true;
            break;
        }
        const bool in_left = s.x < 0.0 || (s.x == 0.0 && rhs(t, s).x < 0.0);
        (in_left ? been_left : been_right) = true;
        std::vector<EventSpec> evs;
        evs.push_back({[](double, const Vec2& v) { return v.x; }, in_left ? +1 : -1, true});
        IntegrateResult r = integrate(rhs, t, s, t_max, evs, ode_options(policy));
        rec.add_segment(in_left ? SegmentKind::FlowL : SegmentKind::FlowR,
                        std::move(r.samples));
        t = r.t_end;
        s = r.state_end;
        if (!r.event) break;
        s.x = 0.0;
        // A genuine passage needs the field to carry the orbit across; a
        // located zero of x with the field pointing back is a graze of the
        // square-root layer (orbits ride x ~ y^2, numerically pinned to the
        // manifold while y > 0). Grazes re-enter the same side.
        const double f_here = m.field.eval(0.0, s.y, mu).x;
        const bool passes = in_left ? f_here >= 0.0 : f_here <= 0.0;
        if (!passes) {
            rec.add_event(t, EventType::FoldTangency, s);
            s.x = (in_left ? -1.0 : 1.0) * 1e-14 * (1.0 + std::fabs(s.y));
            continue;
        }
        rec.add_event(t, EventType::Switch, s);
        if (stop && stop(Arrival{t, s.y, in_left, in_left ? been_right : been_left})) {
            rec.traj.t_end = t;
            rec.traj.state_end = s;
            return;
        }
        // Nudge across so the next leg's crossing event starts cleanly.
        s.x = (in_left ? 1.0 : -1.0) * 1e-14 * (1.0 + std::fabs(s.y));
    }
    rec.traj.t_end = t;
    rec.traj.state_end = s;
}

Trajectory simulate_core(const PWSystem& sys, const Vec2& state0, double t_max,
                         const SimPolicy& policy, const StopPredicate& stop) {
    Recorder rec;
    rec.traj.state_end = state0;
    switch (sys.kind()) {
        case MechKind::Filippov: {
            const auto& m = sys.as<FilippovMech>();
            FilippovSim sim{m.left, m.right, sys.mu, policy, rec, stop};
            sim.run(state0, 0.0, t_max);
            break;
        }
        case MechKind::Impact:
            run_impact(sys.as<ImpactMech>(), sys.mu, state0, 0.0, t_max, policy, rec, stop);
            break;
        case MechKind::Impulse:
            run_impulse(sys.as<ImpulseMech>(), sys.mu, state0, 0.0, t_max, policy, rec, stop);
            break;
        case MechKind::Hysteretic:
            run_hysteretic(sys.as<HystereticMech>(), sys.mu, state0, 0.0, t_max, policy, rec,
                           stop);
            break;
        case MechKind::Delayed:
            run_delayed(sys.as<DelayedMech>(), sys.mu, state0, 0.0, t_max, policy, rec, stop);
            break;
        case MechKind::FourQuadrant:
            run_four_quadrant(sys.as<FourQuadrantMech>(), sys.mu, state0, 0.0, t_max, policy,
                              rec, stop);
            break;
        case MechKind::Sqrt:
            run_sqrt(sys.as<SqrtMech>(), sys.mu, state0, 0.0, t_max, policy, rec, stop);
            break;
    }
    return std::move(rec.traj);
}

}  // namespace

IntegrateResult flow_piece(const SmoothPiece& piece, const Vec2& state, double dt,
                           double tol, double mu) {
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    return integrate(rhs_of(piece, mu), 0.0, state, dt, {}, opt);
}

Trajectory simulate(const PWSystem& sys, const Vec2& state0, double t_max,
                    const SimPolicy& policy) {
    return simulate_core(sys, state0, t_max, policy, nullptr);
}

// ---------------------------------------------------------------------------
// Poincare map
// ---------------------------------------------------------------------------

namespace {
void fill_extremes(const Trajectory& tr, PoincareResult& out) {
    Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
    for (const auto& seg : tr.segments)
        for (const auto& q : seg.states) {
            lo.x = std::min(lo.x, q.state.x);
            lo.y = std::min(lo.y, q.state.y);
            hi.x = std::max(hi.x, q.state.x);
            hi.y = std::max(hi.y, q.state.y);
        }
    out.extremes_min = lo;
    out.extremes_max = hi;
}
}  // namespace

PoincareResult poincare_numeric(const PWSystem& sys, SectionKind section, double r,
                                const SimPolicy& policy, std::size_t max_events) {
    PoincareResult out;
    SimPolicy pol = policy;
    pol.max_events = max_events;

    // Full returns pair section points of the same crossing type: a start
    // that enters the right half-plane (or slides) returns at the next
    // arrival from the left, and vice versa.
    bool section_from_left = true;
    if (sys.kind() == MechKind::Filippov) {
        const auto& m = sys.as<FilippovMech>();
        const double fl = m.left.eval(0.0, r, sys.mu).x;
        const double fr = m.right.eval(0.0, r, sys.mu).x;
        if (fl < 0.0 && fr < 0.0) section_from_left = false;
        if (fl < 0.0 && fr > 0.0)  // repelling: follow the exit policy
            section_from_left = pol.repelling_exit == ExitSide::Right;
    } else if (sys.kind() == MechKind::Sqrt) {
        const auto& m = sys.as<SqrtMech>();
        if (m.field.eval(0.0, r, sys.mu).x < 0.0) section_from_left = false;
    }
    auto want_arrival = [&](const Arrival& a) {
        switch (sys.kind()) {
            case MechKind::Filippov:
            case MechKind::Sqrt:
                if (section == SectionKind::RightHalf) return !a.from_left;
                if (section == SectionKind::LeftHalf) return a.from_left;
                return a.from_left == section_from_left && a.visited_other;
            case MechKind::Hysteretic:
                return a.from_left;  // the switch on x = +mu
            default:
                return true;  // mechanism-native sections
        }
    };

    double T_hit = 0.0, P_hit = 0.0;
    bool hit = false;
    StopPredicate stop = [&](const Arrival& a) {
        if (!want_arrival(a)) return false;
        T_hit = a.t;
        P_hit = a.y;
        hit = true;
        return true;
    };

    const double t_budget = pol.t_budget;
    try {
        Vec2 start{0.0, r};
        switch (sys.kind()) {
            case MechKind::Filippov:
            case MechKind::Sqrt:
            case MechKind::FourQuadrant:
                break;
            case MechKind::Impact: {
                if (!(r > 0.0)) {
                    out.reason = "impact section requires r > 0";
                    return out;
                }
                start = {0.0, sys.as<ImpactMech>().reset(r, sys.mu)};
                break;
            }
            case MechKind::Impulse: {
                if (!(r > 0.0)) {
                    out.reason = "impulse section requires r > 0";
                    return out;
                }
                const auto& m = sys.as<ImpulseMech>();
                const double rad = m.radius(r, sys.mu);
                const double ang = m.angle(r, sys.mu);
                start = {rad * std::cos(ang), rad * std::sin(ang)};
                break;
            }
            case MechKind::Hysteretic:
                start = {sys.mu, r};  // just switched to the right branch
                break;
            case MechKind::Delayed:
                out.reason = "delayed systems use attractor measurement";
                return out;
        }
        Trajectory tr = simulate_core(sys, start, t_budget, pol, stop);
        if (!hit) {
            out.reason = tr.truncated ? "event budget exhausted" : "no return to the section";
            return out;
        }
        out.P = P_hit;
        out.T = T_hit;
        out.ok = true;
        fill_extremes(tr, out);
        return out;
    } catch (const std::exception& e) {
        out.reason = e.what();
        return out;
    }
}

}  // namespace pwsb
