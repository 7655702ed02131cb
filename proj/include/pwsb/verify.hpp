#pragma once

// Numerical verification battery for the analytic return maps: series
// coefficients evaluated exactly, series-vs-simulation slope reconstructions,
// and the implicit affine-map identities.

#include <string>
#include <vector>

namespace pwsb {

struct LemmaCheck {
    std::string name;
    bool passed = false;
    double value = 0.0;
    double expected = 0.0;
    double error = 0.0;  // relative where meaningful
};

// Full battery; every check is deterministic.
std::vector<LemmaCheck> verify_lemmas();

// Individual pieces (reused by the acceptance suite).
LemmaCheck check_focus_series_exact();
LemmaCheck check_focus_slope();       // sqrt(P+r) slope vs sqrt(2 chi)
LemmaCheck check_fold_series_exact();
LemmaCheck check_fold_slope();        // (P+r)^(1/4) slope vs (2 chi / 15)^(1/4)
std::vector<LemmaCheck> check_affine_derivative_identity();
LemmaCheck check_affine_rhat_vs_simulation();
LemmaCheck check_flow_quarter_period();
LemmaCheck check_affine_flow_exact();

// Simulated half-return of the two reference systems (positive x side).
double simulate_focus_return(double r);
double simulate_fold_return(double r);

}  // namespace pwsb
