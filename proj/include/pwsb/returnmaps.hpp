#pragma once

// Analytic return maps on x = 0 and their auxiliary functions: the half-return
// series about a focus and about an invisible fold, and the exact implicit
// return map of an affine system with complex eigenvalues.

#include <optional>

#include "pwsb/num.hpp"
#include "pwsb/taylor.hpp"

namespace pwsb {

// rho(s; nu) = 1 - e^(nu s) (cos s - nu sin s). Double zero at s = 0; for
// nu > 0 its unique root in (pi, 2pi) is shat(nu).
double aux_rho(double s, double nu);

// Hyperbolic variant 1 - e^(nu s) (cosh s - nu sinh s), used when a node
// replaces a focus (imaginary omega).
double aux_rho_node(double s, double nu);

// Root shat(nu) in (pi, 2pi) of rho(.; nu), nu > 0. |rho(shat)| < 1e-12.
double aux_shat(double nu);

// G(s; nu) = e^(-nu s) rho(s; nu) / sin(s); pole at integer multiples of pi.
double g_func(double s, double nu);
// Hyperbolic counterpart e^(-nu s) rho_node(s; nu) / sinh(s).
double g_func_node(double s, double nu);

// ---------------------------------------------------------------------------
// Second-order focus return-map coefficient. Requires complex eigenvalues and
// a2 != 0. Templated so it can be evaluated in exact rational arithmetic.
// ---------------------------------------------------------------------------

template <class T>
T chi_focus_t(const BasicTaylorTable<T>& t) {
    const T a1 = t.a1(), a2 = t.a2(), b1 = t.b1(), b2 = t.b2();
    if (a2 == T(0)) throw std::domain_error("chi_focus: a2 = 0");
    const T det = a1 * b2 - a2 * b1;
    const T k1 = -a2 * (T(2) * a1 * b2 - T(3) * a2 * b1 - b2 * b2);
    const T k2 = -a2 * b1 * (T(4) * a1 + b2) + a1 * b2 * (T(2) * a1 - b2);
    const T k3 = b1 * (T(2) * a1 * a1 + T(7) * a1 * b2 - T(3) * a2 * b1) / T(2) -
                 b2 * b2 * (T(2) * a1 * a1 - a1 * b2 + a2 * b1) / (T(2) * a2);
    const T l1 = -a2 * a2 * (a1 + b2);
    const T l2 = a2 * (T(2) * a1 * a1 - a1 * b2 + T(3) * a2 * b1);
    const T l3 = -a1 * (T(2) * a1 * a1 - T(3) * a1 * b2 + b2 * b2) / T(2) -
                 a2 * b1 * (T(5) * a1 - b2) / T(2);
    // (lambda^2 + omega^2)(lambda^2 + 9 omega^2) = det (9 det - 2 (a1+b2)^2)
    const T denom = det * (T(9) * det - T(2) * (a1 + b2) * (a1 + b2));
    const T num = k1 * t.deriv[0][2][0] + k2 * t.deriv[0][1][1] + k3 * t.deriv[0][0][2] +
                  l1 * t.deriv[1][2][0] + l2 * t.deriv[1][1][1] + l3 * t.deriv[1][0][2];
    return num / denom;
}

double chi_focus(const TaylorTable& t);  // validates the focus conditions
Rational chi_focus_exact(const BasicTaylorTable<Rational>& t);

// ---------------------------------------------------------------------------
// Fold return-map coefficients in the frame a2 > 0, b0 < 0.
// ---------------------------------------------------------------------------

template <class T>
T sigma_fold_t(const BasicTaylorTable<T>& t) {
    return t.a1() / t.b0() + t.b2() / t.b0() - t.a5() / t.a2();
}

template <class T>
T chi_fold_t(const BasicTaylorTable<T>& t) {
    const T a1 = t.a1(), a2 = t.a2(), a5 = t.a5(), b0 = t.b0(), b2 = t.b2();
    const T sig = sigma_fold_t(t);
    T v = -a1 * (a1 + b2) * (a1 + T(2) * b2) / (b0 * b0 * b0) +
          (a1 + b2) * (T(4) * a1 + T(3) * b2) / (b0 * b0) * sig -
          T(5) * (a1 + b2) / b0 * sig * sig + T(40) / T(9) * sig * sig * sig;
    v += (T(1) / b0) * (a1 / b0 - a5 / a2) * t.deriv[0][1][1];
    v -= (T(1) / (T(6) * a2)) * (T(2) * a1 / b0 + T(2) * b2 / b0 - T(5) * a5 / a2) *
         t.deriv[0][0][3];
    v += (a2 / (b0 * b0)) * (a1 / b0 + b2 / b0) * t.deriv[1][1][0];
    v += (T(1) / (T(2) * b0)) * (a1 / b0 - b2 / b0 - T(2) * a5 / a2) * t.deriv[1][0][2];
    v -= (a2 / (b0 * b0)) * t.deriv[0][2][0];
    v += (T(1) / (T(2) * b0)) * t.deriv[0][1][2];
    v -= (T(1) / (T(8) * a2)) * t.deriv[0][0][4];
    v -= (a2 / (b0 * b0)) * t.deriv[1][1][1];
    v += (T(1) / (T(2) * b0)) * t.deriv[1][0][3];
    return v;
}

double sigma_fold(const TaylorTable& t);  // validates a2 > 0, b0 < 0
double chi_fold(const TaylorTable& t);
Rational sigma_fold_exact(const BasicTaylorTable<Rational>& t);
Rational chi_fold_exact(const BasicTaylorTable<Rational>& t);

// ---------------------------------------------------------------------------
// Truncated half-return series: focus through r^2, fold through r^4; times to
// the stated leading orders.
// ---------------------------------------------------------------------------

struct ReturnValue {
    double P = 0.0;
    double T = 0.0;
};

ReturnValue p_focus_series(const TaylorTable& t, double r);
ReturnValue p_fold_series(const TaylorTable& t, double r);

// ---------------------------------------------------------------------------
// Exact affine return map (Lemma-style implicit solution).
// ---------------------------------------------------------------------------

enum class AffineType { I, II, III };

struct AffineReturnResult {
    double P = 0.0;
    double T = 0.0;
    AffineType type = AffineType::I;
    std::optional<double> r_hat;  // Type II cutoff radius
};

// lambda, omega > 0, b0 != 0, r > 0. Type II refuses r < r_hat.
AffineReturnResult affine_return(double lambda, double omega, double b0, double r);

// Type of the affine map for given (lambda, b0).
AffineType affine_type(double lambda, double b0);
// Type II cutoff radius (b0 > 0, lambda < 0).
double affine_r_hat(double lambda, double omega, double b0);

}  // namespace pwsb
