#pragma once

// Coefficient engine and classifier for the Hopf bifurcation and the twenty
// Hopf-like bifurcations of planar piecewise-smooth systems: verifies each
// theorem's hypotheses numerically, computes (alpha, beta, gamma), predicts
// criticality, Table-1 scaling exponents, and the limiting period.

#include <optional>
#include <string>
#include <vector>

#include "pwsb/model.hpp"
#include "pwsb/num.hpp"
#include "pwsb/returnmaps.hpp"

namespace pwsb {

enum class HLBKind {
    Hopf,
    HLB1, HLB2, HLB3, HLB4, HLB5, HLB6, HLB7, HLB8, HLB9, HLB10,
    HLB11, HLB12, HLB13, HLB14, HLB15, HLB16, HLB17, HLB18, HLB19, HLB20,
    Unclassified,
};

const char* hlb_kind_name(HLBKind k);

enum class Criticality { Supercritical, Subcritical, Degenerate, Unknown };

const char* criticality_name(Criticality c);

struct ChecklistItem {
    std::string condition;
    bool satisfied = false;
    double witness = 0.0;
};

struct ScalingRow {
    Rational amplitude;  // exponent a
    Rational period;     // exponent b
};

// How predicted_period is to be read: a finite limit as mu -> 0, or the
// coefficient k2 of the power law k2 |mu|^b.
enum class PeriodForm { Limit, PowerLawCoefficient, Unavailable };

struct HLBReport {
    HLBKind kind = HLBKind::Unclassified;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
    Criticality criticality = Criticality::Unknown;
    int cycle_side = 0;  // sign of mu - mu0 on which the cycle exists
    bool cycle_stable = false;
    ScalingRow exponents{Rational(0), Rational(0)};
    double predicted_period = 0.0;
    PeriodForm period_form = PeriodForm::Unavailable;
    std::vector<ChecklistItem> checklist;
    EigenData eig_left, eig_right;
    double mu0 = 0.0;
    std::string detail;

    bool classified() const { return kind != HLBKind::Unclassified; }
};

struct ClassifyOptions {
    double eq_tol = 1e-9;      // equality thresholds
    double alpha_tol = 1e-8;   // |alpha| below this (scaled) is degenerate
    double mu_step = 1e-5;     // finite-difference step in mu
    double quad_tol = 1e-10;   // impulsive quadrature tolerance
};

// Hopf non-degeneracy and transversality coefficients from a Taylor table in
// real Jordan form (the mu-derivatives ride along in the table).
struct HopfCoeffs {
    double alpha = 0.0;
    double beta = 0.0;
    double omega = 0.0;
};
HopfCoeffs hopf_coeffs(const TaylorTable& t);

// Classify the family at the candidate bifurcation parameter mu0.
HLBReport classify(const PWSystem& family, double mu0 = 0.0,
                   const ClassifyOptions& opt = {});

// Table-1 scaling exponents for a bifurcation kind.
ScalingRow scaling_row(HLBKind kind);

// Limiting period (PeriodForm::Limit) or leading power-law coefficient
// (PeriodForm::PowerLawCoefficient); implicit two-unknown systems are solved
// by damped Newton seeded from simulation.
double predicted_period(const HLBReport& report, const PWSystem& family);

// Implicit period equation of the impacting bifurcations:
// gamma e^(2 lambda T) = rho(omega T; nu) / rho(omega T; -nu). The flag picks
// the admissible-focus branch (omega T in (pi, 2pi)) or the virtual branch
// (omega T in (0, pi)); `node` switches to the hyperbolic variant.
double impact_period_root(double lambda, double omega, double gamma, bool long_branch,
                          bool node = false);

// Scan helper: locate the zero of a scalar onset functional (for example
// Lambda(mu)) on a mu interval. Heuristic front door used by the CLI.
std::optional<double> scan_onset(const std::function<double(double)>& fn, double mu_lo,
                                 double mu_hi, int samples = 200);

}  // namespace pwsb
