#pragma once

// Small numeric utilities shared across the toolkit: bracketed root finding,
// damped Newton for small systems, adaptive quadrature, least-squares lines,
// and an exact rational type for coefficient formulas that must be evaluated
// without rounding.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwsb {

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Brent root finding on a bracketing interval.
// ---------------------------------------------------------------------------

struct BrentResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Requires fa = f(a), fb = f(b) with opposite signs (or one of them zero).
BrentResult brent(const std::function<double(double)>& f, double a, double b,
                  double fa, double fb, double xtol = 0.0, double ftol = 0.0,
                  int max_iter = 200);

inline BrentResult brent(const std::function<double(double)>& f, double a, double b,
                         double xtol = 0.0, double ftol = 0.0, int max_iter = 200) {
    return brent(f, a, b, f(a), f(b), xtol, ftol, max_iter);
}

// Scans [a,b] on a uniform grid for a sign change of f, then polishes with
// Brent. Returns nullopt when f keeps one sign on every sample.
std::optional<double> bracketed_root(const std::function<double(double)>& f, double a,
                                     double b, int samples = 64, double xtol = 0.0,
                                     double ftol = 0.0);

// ---------------------------------------------------------------------------
// Damped Newton for n<=4 systems, numerical Jacobian.
// ---------------------------------------------------------------------------

struct NewtonOptions {
    int max_iter = 100;
    double residual_tol = 1e-10;
    double fd_step = 1e-7;
};

struct NewtonResult {
    std::vector<double> x;
    double residual = 0.0;
    bool converged = false;
};

NewtonResult newton_damped(const std::function<std::vector<double>(const std::vector<double>&)>& f,
                           std::vector<double> x0, const NewtonOptions& opt = {});

// ---------------------------------------------------------------------------
// Adaptive Simpson quadrature.
// ---------------------------------------------------------------------------

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-12, int max_depth = 40);

// ---------------------------------------------------------------------------
// Least squares line fit y = c0 + c1 x; returns {c0, c1, r_squared}.
// ---------------------------------------------------------------------------

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Slope of the best line through the origin.
double fit_slope_through_origin(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Exact rational arithmetic (int64 numerator/denominator, 128-bit products).
// Used by the coefficient formulas when exact values are requested.
// ---------------------------------------------------------------------------

class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const;

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace pwsb
