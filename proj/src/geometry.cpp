#include "pwsb/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "pwsb/num.hpp"

namespace pwsb {

namespace {

std::pair<const SmoothPiece*, const SmoothPiece*> filippov_pieces(const PWSystem& sys) {
    switch (sys.kind()) {
        case MechKind::Filippov: {
            const auto& m = sys.as<FilippovMech>();
            return {&m.left, &m.right};
        }
        case MechKind::Hysteretic: {
            const auto& m = sys.as<HystereticMech>();
            return {&m.left, &m.right};
        }
        case MechKind::Delayed: {
            const auto& m = sys.as<DelayedMech>();
            return {&m.left, &m.right};
        }
        default:
            throw ModelError("geometry: mechanism has no left/right Filippov pieces");
    }
}

double dfdy(const SmoothPiece& p, double y, double mu) {
    const double h = 1e-6 * (1.0 + std::fabs(y));
    return (p.eval(0.0, y + h, mu).x - p.eval(0.0, y - h, mu).x) / (2.0 * h);
}

}  // namespace

const char* manifold_tag_name(ManifoldTag t) {
    switch (t) {
        case ManifoldTag::Crossing: return "crossing";
        case ManifoldTag::AttractingSliding: return "attracting_sliding";
        case ManifoldTag::RepellingSliding: return "repelling_sliding";
        case ManifoldTag::VisibleFoldL: return "visible_fold_L";
        case ManifoldTag::InvisibleFoldL: return "invisible_fold_L";
        case ManifoldTag::VisibleFoldR: return "visible_fold_R";
        case ManifoldTag::InvisibleFoldR: return "invisible_fold_R";
        case ManifoldTag::TwoFold: return "two_fold";
        case ManifoldTag::BoundaryEquilibriumL: return "boundary_equilibrium_L";
        case ManifoldTag::BoundaryEquilibriumR: return "boundary_equilibrium_R";
        case ManifoldTag::Degenerate: return "degenerate";
    }
    return "unknown";
}

ManifoldPointClass classify_boundary_point(const PWSystem& sys, double y, double mu,
                                           double tol) {
    auto [left, right] = filippov_pieces(sys);
    ManifoldPointClass out;
    const Vec2 vl = left->eval(0.0, y, mu);
    const Vec2 vr = right->eval(0.0, y, mu);
    out.f_left = vl.x;
    out.f_right = vr.x;

    const double dfl = dfdy(*left, y, mu);
    const double dfr = dfdy(*right, y, mu);
    // Scale-aware tangency thresholds.
    const double tl = tol * (1.0 + std::fabs(dfl));
    const double tr = tol * (1.0 + std::fabs(dfr));
    const bool fl0 = std::fabs(vl.x) < tl;
    const bool fr0 = std::fabs(vr.x) < tr;

    if (fl0 && fr0) {
        if (std::fabs(vl.y) < tl && std::fabs(vr.y) < tr) {
            out.tag = ManifoldTag::Degenerate;
            out.diagnostic = "both tangencies degenerate (f and g vanish)";
            return out;
        }
        if (std::fabs(dfl) < tl || std::fabs(dfr) < tr || std::fabs(vl.y) < tl ||
            std::fabs(vr.y) < tr) {
            out.tag = ManifoldTag::Degenerate;
            out.diagnostic = "non-quadratic tangency at a two-fold candidate";
            return out;
        }
        out.tag = ManifoldTag::TwoFold;
        out.two_fold_visible_left = dfl * vl.y < 0.0;
        out.two_fold_visible_right = dfr * vr.y > 0.0;
        return out;
    }
    if (fl0) {
        if (std::fabs(vl.y) < tl) {
            out.tag = ManifoldTag::BoundaryEquilibriumL;
            return out;
        }
        if (std::fabs(dfl) < tl) {
            out.tag = ManifoldTag::Degenerate;
            out.diagnostic = "degenerate tangency of the left field";
            return out;
        }
        out.tag = (dfl * vl.y < 0.0) ? ManifoldTag::VisibleFoldL : ManifoldTag::InvisibleFoldL;
        return out;
    }
    if (fr0) {
        if (std::fabs(vr.y) < tr) {
            out.tag = ManifoldTag::BoundaryEquilibriumR;
            return out;
        }
        if (std::fabs(dfr) < tr) {
            out.tag = ManifoldTag::Degenerate;
            out.diagnostic = "degenerate tangency of the right field";
            return out;
        }
        out.tag = (dfr * vr.y > 0.0) ? ManifoldTag::VisibleFoldR : ManifoldTag::InvisibleFoldR;
        return out;
    }
    if (vl.x > 0.0 && vr.x < 0.0)
        out.tag = ManifoldTag::AttractingSliding;
    else if (vl.x < 0.0 && vr.x > 0.0)
        out.tag = ManifoldTag::RepellingSliding;
    else
        out.tag = ManifoldTag::Crossing;
    return out;
}

double sliding_field(const PWSystem& sys, double y, double mu) {
    auto [left, right] = filippov_pieces(sys);
    const Vec2 vl = left->eval(0.0, y, mu);
    const Vec2 vr = right->eval(0.0, y, mu);
    const double denom = vl.x - vr.x;
    if (denom == 0.0) throw ModelError("sliding_field: f_L = f_R (degenerate)");
    return (vl.x * vr.y - vr.x * vl.y) / denom;
}

double sliding_weight(const PWSystem& sys, double y, double mu) {
    auto [left, right] = filippov_pieces(sys);
    const double fl = left->eval(0.0, y, mu).x;
    const double fr = right->eval(0.0, y, mu).x;
    return fl / (fl - fr);
}

std::vector<Equilibrium> find_pseudo_equilibria(const PWSystem& sys, double y_lo,
                                                double y_hi, double mu) {
    std::vector<Equilibrium> out;
    auto g = [&](double y) { return sliding_field(sys, y, mu); };
    const int n = 400;
    double prev_y = y_lo, prev_g = g(y_lo);
    for (int i = 1; i <= n; ++i) {
        const double y = y_lo + (y_hi - y_lo) * static_cast<double>(i) / n;
        const double gy = g(y);
        if (std::isfinite(prev_g) && std::isfinite(gy) && prev_g != gy &&
            ((prev_g > 0.0) != (gy > 0.0) || gy == 0.0)) {
            BrentResult res = brent(g, prev_y, y, prev_g, gy, 0.0, 0.0, 200);
            if (res.converged && std::fabs(g(res.root)) < 1e-10) {
                Equilibrium eq;
                eq.kind = EquilibriumKind::Pseudo;
                eq.location = {0.0, res.root};
                auto [left, right] = filippov_pieces(sys);
                const double fl = left->eval(0.0, res.root, mu).x;
                const double fr = right->eval(0.0, res.root, mu).x;
                eq.admissible = fl * fr < 0.0;
                const double h = 1e-6 * (1.0 + std::fabs(res.root));
                eq.slide_slope = (g(res.root + h) - g(res.root - h)) / (2.0 * h);
                eq.stable = eq.slide_slope < 0.0;
                out.push_back(eq);
            }
        }
        prev_y = y;
        prev_g = gy;
    }
    return out;
}

namespace {

std::optional<Vec2> newton2(const SmoothPiece& piece, double mu, Vec2 guess) {
    Vec2 p = guess;
    for (int it = 0; it < 60; ++it) {
        const Vec2 v = piece.eval(p.x, p.y, mu);
        const double res = std::hypot(v.x, v.y);
        if (res < 1e-13 * (1.0 + std::hypot(p.x, p.y))) return p;
        const double h = 1e-7 * (1.0 + std::hypot(p.x, p.y));
        const Vec2 vx = piece.eval(p.x + h, p.y, mu);
        const Vec2 vy = piece.eval(p.x, p.y + h, mu);
        const double j11 = (vx.x - v.x) / h, j12 = (vy.x - v.x) / h;
        const double j21 = (vx.y - v.y) / h, j22 = (vy.y - v.y) / h;
        const double det = j11 * j22 - j12 * j21;
        if (std::fabs(det) < 1e-300) return std::nullopt;
        p.x -= (j22 * v.x - j12 * v.y) / det;
        p.y -= (-j21 * v.x + j11 * v.y) / det;
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Equilibrium> find_regular_equilibria(const PWSystem& sys, const SearchBox& box,
                                                 double mu) {
    std::vector<Equilibrium> out;
    auto scan_piece = [&](const SmoothPiece& piece, bool is_left) {
        std::vector<Vec2> found;
        for (int ix = 0; ix <= box.grid; ++ix) {
            for (int iy = 0; iy <= box.grid; ++iy) {
                Vec2 guess{box.x_lo + (box.x_hi - box.x_lo) * ix / double(box.grid),
                           box.y_lo + (box.y_hi - box.y_lo) * iy / double(box.grid)};
                auto root = newton2(piece, mu, guess);
                if (!root) continue;
                if (root->x < box.x_lo - 1e-9 || root->x > box.x_hi + 1e-9 ||
                    root->y < box.y_lo - 1e-9 || root->y > box.y_hi + 1e-9)
                    continue;
                bool dup = false;
                for (const Vec2& q : found)
                    if (std::hypot(q.x - root->x, q.y - root->y) <
                        1e-7 * (1.0 + std::hypot(q.x, q.y)))
                        dup = true;
                if (dup) continue;
                found.push_back(*root);

                Equilibrium eq;
                eq.location = *root;
                eq.kind = is_left ? EquilibriumKind::RegularL : EquilibriumKind::RegularR;
                const double tol = 1e-9 * (1.0 + std::fabs(root->x));
                if (std::fabs(root->x) < tol)
                    eq.kind = EquilibriumKind::Boundary;
                eq.admissible = is_left ? (root->x < 0.0) : (root->x > 0.0);
                // Eigen data from a local Taylor table about the root.
                SmoothPiece shifted = SmoothPiece::callable(
                    [piece, root](double x, double y, double m) {
                        return piece.eval(x + root->x, y + root->y, m);
                    });
                const TaylorTable t = shifted.taylor(mu, 1);
                eq.eigen = eigen_data(t);
                eq.hyperbolic = std::fabs(eq.eigen.lambda) > 1e-9 ||
                                (!eq.eigen.complex_pair && eq.eigen.eta > 1e-9 &&
                                 std::fabs(eq.eigen.lambda) > 1e-9);
                if (!eq.eigen.complex_pair &&
                    std::fabs(std::fabs(eq.eigen.lambda) - eq.eigen.eta) < 1e-9)
                    eq.hyperbolic = false;  // singular Jacobian (zero eigenvalue)
                eq.stable = eq.eigen.complex_pair
                                ? eq.eigen.lambda < 0.0
                                : (eq.eigen.lambda + eq.eigen.eta < 0.0);
                out.push_back(eq);
            }
        }
    };
    auto [left, right] = filippov_pieces(sys);
    scan_piece(*left, true);
    scan_piece(*right, false);
    return out;
}

}  // namespace pwsb
