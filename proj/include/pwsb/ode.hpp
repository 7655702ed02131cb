#pragma once

// Adaptive Dormand-Prince 5(4) integration for planar fields with dense
// output, plus event location on the dense interpolant (bracketed sign change
// refined by Brent; quadratic grazes detected through the event derivative).

#include <functional>
#include <optional>
#include <vector>

#include "pwsb/model.hpp"
#include "pwsb/num.hpp"

namespace pwsb {

using Rhs = std::function<Vec2(double t, const Vec2&)>;

struct IntegratorError : std::runtime_error {
    explicit IntegratorError(const std::string& what) : std::runtime_error(what) {}
};

// Dense interpolant over one accepted step [t0, t0+h].
struct DenseStep {
    double t0 = 0.0;
    double h = 0.0;
    Vec2 r1, r2, r3, r4, r5;
    Vec2 eval(double t) const;
};

struct OdeOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double h_init = 0.0;        // 0: automatic
    double h_max = 0.0;         // 0: unlimited
    double h_min_factor = 1e-14;  // minimum step as a fraction of the span
    std::size_t max_steps = 2'000'000;
};

// Scalar event g(t, state); a located root is reported when the crossing
// direction matches `direction` (-1 falling, +1 rising, 0 any).
struct EventSpec {
    std::function<double(double t, const Vec2&)> fn;
    int direction = 0;
    bool terminal = true;
};

struct EventHit {
    int index = -1;
    double t = 0.0;
    Vec2 state;
    bool grazing = false;  // tangency flagged, not crossed
};

struct StepRecord {
    double t = 0.0;
    Vec2 state;
};

struct IntegrateResult {
    double t_end = 0.0;
    Vec2 state_end;
    std::optional<EventHit> event;
    std::vector<StepRecord> samples;  // accepted step endpoints (incl. start)
};

// Integrates rhs from (t0, y0) until t1, a terminal event, or step failure.
// When `record` is false the sample list holds only the ends.
IntegrateResult integrate(const Rhs& rhs, double t0, const Vec2& y0, double t1,
                          const std::vector<EventSpec>& events, const OdeOptions& opt,
                          bool record = true);

}  // namespace pwsb
