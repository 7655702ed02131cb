#pragma once

// Empirical amplitude/period scaling exponents near a bifurcation, fitted on
// a geometric mu grid and compared against the tabulated rows.

#include <optional>
#include <string>
#include <vector>

#include "pwsb/hlb.hpp"
#include "pwsb/poincare.hpp"

namespace pwsb {

struct ScalingPoint {
    double mu = 0.0;
    double amp_x = 0.0;
    double amp_y = 0.0;
    double amplitude = 0.0;  // max(amp_x, amp_y)
    double x_max = 0.0;      // signed maximum x on the cycle
    double period = 0.0;
    bool ok = false;
};

struct ScalingFit {
    double exponent_amplitude = 0.0;
    double exponent_period = 0.0;       // raw log-log slope of the period
    double exponent_amp_x = 0.0;
    double exponent_amp_y = 0.0;
    double exponent_x_max = 0.0;  // finer per-theorem statement (e.g. mu^2 penetration)
    // Slope of log(period - period_limit) when a finite limit is predicted.
    std::optional<double> exponent_period_correction;
    double k1 = 0.0, k2 = 0.0;          // fitted prefactors
    double r_squared_amplitude = 0.0;
    double r_squared_period = 0.0;
    std::vector<ScalingPoint> points;
    int dropped = 0;
    bool enough_points = false;  // >= 8 surviving points
};

struct ScalingOptions {
    int n_points = 10;
    CycleSearch search{};
    // Delayed mechanisms measure the attractor instead of a strict map.
    double attractor_transient = 900.0;
    std::optional<double> period_limit;  // subtractive fit when the row has b = 0
    bool parallel = true;
};

// Geometric grid over [mu_min, mu_max] on the cycle side; least-squares
// log-log fits of amplitude and period.
ScalingFit fit_scaling(const PWSystem& family, HLBKind kind, double mu_min, double mu_max,
                       const ScalingOptions& opt = {});

}  // namespace pwsb
