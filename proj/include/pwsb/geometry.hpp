#pragma once

// Switching-manifold point classification, the sliding vector field, and
// location of regular and pseudo-equilibria for Filippov systems.

#include <optional>
#include <string>
#include <vector>

#include "pwsb/model.hpp"

namespace pwsb {

enum class ManifoldTag {
    Crossing,
    AttractingSliding,
    RepellingSliding,
    VisibleFoldL,
    InvisibleFoldL,
    VisibleFoldR,
    InvisibleFoldR,
    TwoFold,
    BoundaryEquilibriumL,
    BoundaryEquilibriumR,
    Degenerate,
};

const char* manifold_tag_name(ManifoldTag t);

struct ManifoldPointClass {
    ManifoldTag tag = ManifoldTag::Crossing;
    double f_left = 0.0;   // witness f_L(0, y)
    double f_right = 0.0;  // witness f_R(0, y)
    bool two_fold_visible_left = false;
    bool two_fold_visible_right = false;
    std::string diagnostic;
};

ManifoldPointClass classify_boundary_point(const PWSystem& sys, double y, double mu,
                                           double tol = 1e-9);

// Sliding vector field (f_L g_R - f_R g_L) / (f_L - f_R) at (0, y).
double sliding_field(const PWSystem& sys, double y, double mu);

// Filippov convex-combination weight s = f_L / (f_L - f_R) at (0, y).
double sliding_weight(const PWSystem& sys, double y, double mu);

enum class EquilibriumKind {
    RegularL,
    RegularR,
    Pseudo,
    TwoFoldStationary,
    Boundary,
};

struct Equilibrium {
    Vec2 location;
    EquilibriumKind kind = EquilibriumKind::Pseudo;
    bool admissible = false;
    bool hyperbolic = true;
    bool stable = false;
    EigenData eigen;         // regular equilibria
    double slide_slope = 0.0;  // pseudo-equilibria: d g_slide / dy
};

// Roots of the sliding field on [y_lo, y_hi] via sign-change bracketing.
std::vector<Equilibrium> find_pseudo_equilibria(const PWSystem& sys, double y_lo,
                                                double y_hi, double mu);

// Newton-refined zeros of each half-field over a search box, seeded from a
// coarse grid; flagged admissible/virtual with eigen data attached.
struct SearchBox {
    double x_lo = -1.0, x_hi = 1.0, y_lo = -1.0, y_hi = 1.0;
    int grid = 24;
};

std::vector<Equilibrium> find_regular_equilibria(const PWSystem& sys, const SearchBox& box,
                                                 double mu);

}  // namespace pwsb
