#pragma once

// Fixed points of numerical Poincare maps: limit-cycle detection, stability
// multipliers, amplitude/period measurement, and parameter sweeps.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pwsb/geometry.hpp"
#include "pwsb/hlb.hpp"
#include "pwsb/integrator.hpp"

namespace pwsb {

struct FixedPoint {
    double r_star = 0.0;
    double residual = 0.0;    // |P(r*) - r*|
    double multiplier = 0.0;  // dP/dr at r*
    double period = 0.0;
    Vec2 extremes_min, extremes_max;
    bool stable() const { return std::fabs(multiplier) < 1.0; }
    double amplitude() const {
        return std::max(extremes_max.x - extremes_min.x, extremes_max.y - extremes_min.y);
    }
};

struct CycleSearch {
    double r_lo = 1e-7;
    double r_hi = 1.0;
    int samples = 40;          // geometric scan resolution
    double tol = 1e-10;        // displacement residual target
    bool scale_by_r = false;   // root-find on (P(r)-r)/r (trivial r=0 fixed point)
    std::optional<double> seed;  // expected r*: a tight bracket is tried first
    SimPolicy policy{};
};

// Leading-order fixed-point seed from a classification, where the theorem
// gives one (the slipping/fixed two-fold square-root laws).
std::optional<double> theorem_seed(const HLBReport& report, double mu);

// Root of the displacement P(r) - r inside [r_lo, r_hi]; absent when the
// displacement keeps one sign over the defined part of the bracket.
std::optional<FixedPoint> find_limit_cycle(const PWSystem& sys, double mu,
                                           const CycleSearch& search);

// Attractor-based cycle measurement for mechanisms without a strict scalar
// section (delayed switching): converge, then measure period and extremes
// from switch events; the multiplier is the per-cycle contraction estimate.
std::optional<FixedPoint> measure_attractor_cycle(const PWSystem& sys, double mu,
                                                  const Vec2& seed, double t_transient,
                                                  int cycles, const SimPolicy& policy = {});

struct DiagramBranch {
    double mu = 0.0;
    std::string branch;   // "equilibrium", "pseudo_equilibrium", "cycle_min", ...
    double value = 0.0;   // representative coordinate (x of equilibrium, etc.)
    bool stable = false;
    bool ok = true;
    std::string note;
};

struct SweepOptions {
    CycleSearch search{};
    SearchBox box{};
    double slide_lo = -1.0, slide_hi = 1.0;
    bool parallel = true;
};

// Per-mu classification of stationary solutions plus cycle measurement;
// cycle brackets are warm-started across the grid.
std::vector<DiagramBranch> sweep_diagram(const PWSystem& family,
                                         const std::vector<double>& mu_grid,
                                         const SweepOptions& opt = {});

// Shared helper: evaluate the Poincare displacement D(r) = P(r) - r.
std::optional<double> displacement(const PWSystem& sys, double r, const SimPolicy& policy);

}  // namespace pwsb
