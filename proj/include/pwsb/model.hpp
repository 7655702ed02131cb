#pragma once

// Parametric piecewise-smooth planar systems. Internal coordinates put the
// switching set at x = 0 (Filippov, impact, hysteretic, delayed), the positive
// y-axis (impulse), or both coordinate axes (four-quadrant).

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pwsb/taylor.hpp"

namespace pwsb {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
};

struct ModelError : std::runtime_error {
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Polynomials in (x, y, z) with coefficients affine in mu: c + c_mu * mu.
// The z slot is used only by square-root continuous fields, where z = S(x).
// ---------------------------------------------------------------------------

struct Monomial {
    int i = 0;  // power of x
    int j = 0;  // power of y
    int k = 0;  // power of z
    double c = 0.0;
    double c_mu = 0.0;
};

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Monomial> terms) : terms_(std::move(terms)) {}

    Poly& add(int i, int j, double c, double c_mu = 0.0) {
        terms_.push_back({i, j, 0, c, c_mu});
        return *this;
    }
    Poly& add_z(int i, int j, int k, double c, double c_mu = 0.0) {
        terms_.push_back({i, j, k, c, c_mu});
        return *this;
    }

    double eval(double x, double y, double mu, double z = 0.0) const;
    // Raw partial d^(dx+dy+dz) / dx^dx dy^dy dz^dz at (0,0,0), optional d/dmu.
    double deriv_origin(double mu, int dx, int dy, int dz = 0, bool wrt_mu = false) const;
    int degree_xy() const;
    const std::vector<Monomial>& terms() const { return terms_; }

  private:
    std::vector<Monomial> terms_;
};

// ---------------------------------------------------------------------------
// One smooth vector-field piece: polynomial (exact Taylor data) or callable
// (finite-difference Taylor data).
// ---------------------------------------------------------------------------

using FieldFn = std::function<Vec2(double x, double y, double mu)>;

struct FdOptions {
    double length_scale = 1.0;  // stencil scale; steps are eps^(1/(k+2)) * scale
};

class SmoothPiece {
  public:
    SmoothPiece() = default;
    static SmoothPiece polynomial(Poly f, Poly g);
    static SmoothPiece callable(FieldFn fn, FdOptions fd = {});

    Vec2 eval(double x, double y, double mu) const;
    TaylorTable taylor(double mu, int order = kTaylorOrder) const;
    bool is_polynomial() const { return poly_.has_value(); }
    int degree() const;
    const FdOptions& fd_options() const { return fd_; }

  private:
    std::optional<std::pair<Poly, Poly>> poly_;
    FieldFn fn_;
    FdOptions fd_;
};

// Finite-difference extraction for an arbitrary callable; central differences
// with one Richardson step, per-order step sizes.
TaylorTable extract_taylor(const SmoothPiece& piece, double mu, int order = kTaylorOrder);

// ---------------------------------------------------------------------------
// Scalar maps y -> value, parametric in mu (resets and impulse laws).
// ---------------------------------------------------------------------------

class ScalarMap {
  public:
    ScalarMap() = default;
    explicit ScalarMap(std::function<double(double y, double mu)> fn) : fn_(std::move(fn)) {}
    double operator()(double y, double mu) const { return fn_(y, mu); }
    double deriv_y(double y, double mu, int order = 1) const;  // central FD
    bool valid() const { return static_cast<bool>(fn_); }

  private:
    std::function<double(double, double)> fn_;
};

// ---------------------------------------------------------------------------
// Square-root continuous field F(x, y, S(x); mu), S(x) = sqrt(max(x,0)).
// ---------------------------------------------------------------------------

struct SqrtField {
    Poly f, g;  // polynomials in (x, y, z)
    Vec2 eval(double x, double y, double mu) const;
    // Left half-system (z = 0) as a smooth piece.
    SmoothPiece left_piece() const;
    // Coefficients of the linearization f = a1 x + a2 y + a3 mu + a4 z + ...
    double a(int idx) const;  // idx in 1..4
    double b(int idx) const;
};

// ---------------------------------------------------------------------------
// Switching mechanisms.
// ---------------------------------------------------------------------------

struct FilippovMech {
    SmoothPiece left, right;
};

struct ImpactMech {
    SmoothPiece field;   // governs x < 0
    ScalarMap reset;     // y -> reset(y; mu) applied at x = 0
};

struct ImpulseMech {
    SmoothPiece field;   // governs the plane away from the positive y-axis
    ScalarMap radius;    // R(y; mu), new polar radius
    ScalarMap angle;     // Theta(y; mu), new polar angle in (-3pi/2, pi/2)
};

struct HystereticMech {
    SmoothPiece left, right;  // F_L until x = +mu, F_R until x = -mu
};

struct DelayedMech {
    SmoothPiece left, right;  // F_L when x(t - mu) < 0, F_R when x(t - mu) > 0
};

struct FourQuadrantMech {
    std::array<SmoothPiece, 4> quadrant;  // Omega_1..Omega_4 (counted clockwise from x,y>0)
};

struct SqrtMech {
    SqrtField field;
};

using Mechanism = std::variant<FilippovMech, ImpactMech, ImpulseMech, HystereticMech,
                               DelayedMech, FourQuadrantMech, SqrtMech>;

enum class MechKind { Filippov, Impact, Impulse, Hysteretic, Delayed, FourQuadrant, Sqrt };

struct PWSystem {
    std::string name;
    Mechanism mech;
    double mu = 0.0;
    std::string notes;

    MechKind kind() const { return static_cast<MechKind>(mech.index()); }
    template <class M>
    const M& as() const {
        const M* p = std::get_if<M>(&mech);
        if (!p) throw ModelError("PWSystem: mechanism mismatch for " + name);
        return *p;
    }
    PWSystem with_mu(double m) const {
        PWSystem s = *this;
        s.mu = m;
        return s;
    }
};

// Mechanism-specific well-posedness diagnostics (empty list when fine).
std::vector<std::string> well_posedness_issues(const PWSystem& sys);

const char* mech_name(MechKind k);

}  // namespace pwsb
