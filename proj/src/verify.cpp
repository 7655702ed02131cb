#include "pwsb/verify.hpp"

#include <cmath>

#include "pwsb/integrator.hpp"
#include "pwsb/model.hpp"
#include "pwsb/num.hpp"
#include "pwsb/returnmaps.hpp"
#include "pwsb/zoo.hpp"

namespace pwsb {

namespace {

SimPolicy tight_policy() {
    SimPolicy p;
    p.abs_tol = 1e-14;
    p.rel_tol = 1e-12;
    return p;
}

PWSystem focus_reference() {
    // xdot = y - y^2, ydot = -x
    Poly f, g;
    f.add(0, 1, 1.0);
    f.add(0, 2, -1.0);
    g.add(1, 0, -1.0);
    auto piece = SmoothPiece::polynomial(f, g);
    PWSystem s;
    s.name = "focus_reference";
    s.mech = FilippovMech{piece, piece};
    return s;
}

PWSystem fold_reference() {
    // xdot = y - y^4, ydot = -1
    Poly f, g;
    f.add(0, 1, 1.0);
    f.add(0, 4, -1.0);
    g.add(0, 0, -1.0);
    auto piece = SmoothPiece::polynomial(f, g);
    PWSystem s;
    s.name = "fold_reference";
    s.mech = FilippovMech{piece, piece};
    return s;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double ratio = std::pow(hi / lo, 1.0 / (n - 1));
    double v = lo;
    for (int i = 0; i < n; ++i, v *= ratio) g[i] = v;
    return g;
}

}  // namespace

double simulate_focus_return(double r) {
    PWSystem s = focus_reference();
    PoincareResult res = poincare_numeric(s, SectionKind::RightHalf, r, tight_policy());
    if (!res.ok) throw IntegratorError("focus reference return failed: " + res.reason);
    return res.P;
}

double simulate_fold_return(double r) {
    PWSystem s = fold_reference();
    PoincareResult res = poincare_numeric(s, SectionKind::RightHalf, r, tight_policy());
    if (!res.ok) throw IntegratorError("fold reference return failed: " + res.reason);
    return res.P;
}

LemmaCheck check_focus_series_exact() {
    BasicTaylorTable<Rational> t;
    t.deriv[0][0][1] = Rational(1);    // f_y = 1
    t.deriv[0][0][2] = Rational(-2);   // f_yy = -2
    t.deriv[1][1][0] = Rational(-1);   // g_x = -1
    const Rational chi = chi_focus_exact(t);
    LemmaCheck c;
    c.name = "focus series coefficient chi = 1/3 (exact rational)";
    c.value = chi.to_double();
    c.expected = 1.0 / 3.0;
    c.passed = (chi == Rational(1, 3));
    c.error = c.passed ? 0.0 : 1.0;
    return c;
}

LemmaCheck check_focus_slope() {
    const double chi = 1.0 / 3.0;
    // sqrt(P + r) = sqrt(2 chi) r (1 + O(r)): the secants v/r carry an O(r)
    // bias, so the slope at r = 0 is read off as the intercept of v/r vs r.
    std::vector<double> rs = geometric_grid(1e-3, 1e-1, 9), secants;
    for (double r : rs) {
        const double P = simulate_focus_return(r);
        secants.push_back(std::sqrt(std::max(P + r, 0.0)) / r);
    }
    const double slope = fit_line(rs, secants).intercept;
    LemmaCheck c;
    c.name = "sqrt(P_focus(r) + r) slope equals sqrt(2 chi)";
    c.value = slope;
    c.expected = std::sqrt(2.0 * chi);
    c.error = std::fabs(slope - c.expected) / c.expected;
    c.passed = c.error < 0.01;
    return c;
}

LemmaCheck check_fold_series_exact() {
    BasicTaylorTable<Rational> t;
    t.deriv[0][0][1] = Rational(1);     // f_y = 1
    t.deriv[0][0][4] = Rational(-24);   // f_yyyy = -24
    t.deriv[1][0][0] = Rational(-1);    // g = -1
    const Rational sig = sigma_fold_exact(t);
    const Rational chi = chi_fold_exact(t);
    LemmaCheck c;
    c.name = "fold series coefficients sigma = 0, chi = 3 (exact rational)";
    c.value = chi.to_double();
    c.expected = 3.0;
    c.passed = (sig == Rational(0)) && (chi == Rational(3));
    c.error = c.passed ? 0.0 : 1.0;
    return c;
}

LemmaCheck check_fold_slope() {
    const double chi = 3.0;
    std::vector<double> rs = geometric_grid(1e-3, 1e-1, 9), vals;
    for (double r : rs) {
        const double P = simulate_fold_return(r);
        vals.push_back(std::pow(std::max(P + r, 0.0), 0.25));
    }
    const double slope = fit_slope_through_origin(rs, vals);
    LemmaCheck c;
    c.name = "(P_fold(r) + r)^(1/4) slope equals (2 chi / 15)^(1/4)";
    c.value = slope;
    c.expected = std::pow(2.0 * chi / 15.0, 0.25);
    c.error = std::fabs(slope - c.expected) / c.expected;
    c.passed = c.error < 0.01;
    return c;
}

std::vector<LemmaCheck> check_affine_derivative_identity() {
    struct Sample {
        double lambda, omega, b0, r;  // r < 0 marks "multiple of r_hat"
    };
    const Sample samples[20] = {
        {-0.4, 1.0, -1.0, 0.5},  {-0.1, 1.3, -1.0, 1.0}, {0.3, 0.8, -1.0, 2.0},
        {0.6, 1.0, -1.0, 0.25},  {1.0, 2.0, -1.0, 1.5},  {0.0, 1.0, -1.0, 1.0},
        {-1.5, 1.0, -1.0, 0.7},  {2.0, 3.0, -1.0, 1.0},  {0.05, 1.0, -1.0, 3.0},
        {-0.05, 0.5, -1.0, 0.6}, {0.3, 1.0, 1.0, 0.5},   {0.6, 1.2, 1.0, 1.0},
        {1.0, 0.9, 1.0, 2.0},    {0.2, 2.0, 1.0, 0.8},   {0.5, 1.0, 1.0, 0.01},
        {-0.2, 1.0, 1.0, -1.5},  {-0.2, 1.0, 1.0, -3.0}, {-0.5, 1.5, 1.0, -2.0},
        {-0.8, 1.0, 1.0, -1.2},  {-0.3, 2.0, 1.0, -2.5},
    };
    std::vector<LemmaCheck> out;
    int idx = 0;
    for (const Sample& s : samples) {
        ++idx;
        double r = s.r;
        if (r < 0.0) r = -r * affine_r_hat(s.lambda, s.omega, s.b0);
        const double h = 1e-6 * r;
        const auto mid = affine_return(s.lambda, s.omega, s.b0, r);
        const auto hi = affine_return(s.lambda, s.omega, s.b0, r + h);
        const auto lo = affine_return(s.lambda, s.omega, s.b0, r - h);
        const double fd = (hi.P - lo.P) / (2.0 * h);
        const double formula = (r / mid.P) * std::exp(2.0 * s.lambda * mid.T);
        LemmaCheck c;
        c.name = "affine identity dP/dr = (r/P) e^(2 lambda T), sample " + std::to_string(idx);
        c.value = fd;
        c.expected = formula;
        c.error = std::fabs(fd - formula) / std::fabs(formula);
        c.passed = c.error < 1e-6;
        out.push_back(c);
    }
    return out;
}

LemmaCheck check_affine_rhat_vs_simulation() {
    const double lambda = -0.3, omega = 1.0, b0 = 1.0;
    const double rhat = affine_r_hat(lambda, omega, b0);

    Poly f, g;
    f.add(1, 0, lambda);
    f.add(0, 1, omega);
    g.add(0, 0, b0);
    g.add(1, 0, -omega);
    g.add(0, 1, lambda);
    auto piece = SmoothPiece::polynomial(f, g);
    PWSystem sys;
    sys.name = "affine_type2";
    sys.mech = FilippovMech{piece, piece};

    auto returns = [&](double r) {
        SimPolicy pol = tight_policy();
        pol.t_budget = 80.0;  // several contraction turns around the focus
        PoincareResult res = poincare_numeric(sys, SectionKind::RightHalf, r, pol, 4);
        return res.ok;
    };
    double lo = 1e-4, hi = 2.0 * (rhat + 1.0);
    if (returns(lo)) lo = 1e-6;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (returns(mid))
            hi = mid;
        else
            lo = mid;
    }
    const double r_sim = 0.5 * (lo + hi);
    LemmaCheck c;
    c.name = "Type II cutoff r_hat matches the first returning radius";
    c.value = r_sim;
    c.expected = rhat;
    c.error = std::fabs(r_sim - rhat) / rhat;
    c.passed = c.error < 1e-6;
    return c;
}

LemmaCheck check_flow_quarter_period() {
    Poly f, g;
    f.add(0, 1, 1.0);
    g.add(1, 0, -1.0);
    auto piece = SmoothPiece::polynomial(f, g);
    auto rhs = [&piece](double, const Vec2& s) { return piece.eval(s.x, s.y, 0.0); };
    OdeOptions opt;
    opt.abs_tol = 1e-14;
    opt.rel_tol = 1e-12;
    IntegrateResult res = integrate(rhs, 0.0, {1.0, 0.0}, 0.5 * kPi, {}, opt, false);
    LemmaCheck c;
    c.name = "harmonic oscillator quarter period maps (1,0) to (0,-1)";
    c.value = std::hypot(res.state_end.x - 0.0, res.state_end.y + 1.0);
    c.expected = 0.0;
    c.error = c.value;
    c.passed = c.value < 1e-9;
    return c;
}

LemmaCheck check_affine_flow_exact() {
    // xdot = a1 x + a2 y, ydot = b0 + b1 x + b2 y against the closed-form
    // rotation-dilation solution about the equilibrium.
    const double a1 = 0.3, a2 = 1.1, b1 = -0.9, b2 = -0.1, b0 = 0.7;
    const double lambda = 0.5 * (a1 + b2);
    const double omega = std::sqrt(-a2 * b1 - 0.25 * (a1 - b2) * (a1 - b2));
    const double kappa = b0 * omega / (lambda * lambda + omega * omega);
    const double xs = kappa * a2 / omega, ys = -kappa * a1 / omega;
    Poly f, g;
    f.add(1, 0, a1);
    f.add(0, 1, a2);
    g.add(0, 0, b0);
    g.add(1, 0, b1);
    g.add(0, 1, b2);
    auto piece = SmoothPiece::polynomial(f, g);
    auto rhs = [&piece](double, const Vec2& s) { return piece.eval(s.x, s.y, 0.0); };
    OdeOptions opt;
    opt.abs_tol = 1e-14;
    opt.rel_tol = 1e-12;
    const Vec2 s0{0.4, -0.2};
    const double T = 1.7;
    IntegrateResult res = integrate(rhs, 0.0, s0, T, {}, opt, false);
    // exp(T A) (s0 - eq) + eq
    const double ct = std::cos(omega * T), st = std::sin(omega * T);
    const double e = std::exp(lambda * T);
    const double m11 = e * (ct + (a1 - b2) / (2.0 * omega) * st);
    const double m12 = e * (a2 / omega) * st;
    const double m21 = e * (b1 / omega) * st;
    const double m22 = e * (ct - (a1 - b2) / (2.0 * omega) * st);
    const double dx = s0.x - xs, dy = s0.y - ys;
    const Vec2 expect{m11 * dx + m12 * dy + xs, m21 * dx + m22 * dy + ys};
    LemmaCheck c;
    c.name = "affine flow matches the matrix-exponential solution";
    c.value = std::hypot(res.state_end.x - expect.x, res.state_end.y - expect.y);
    c.expected = 0.0;
    c.error = c.value;
    c.passed = c.value < 1e-9;
    return c;
}

std::vector<LemmaCheck> verify_lemmas() {
    std::vector<LemmaCheck> out;
    out.push_back(check_flow_quarter_period());
    out.push_back(check_affine_flow_exact());
    out.push_back(check_focus_series_exact());
    out.push_back(check_focus_slope());
    out.push_back(check_fold_series_exact());
    out.push_back(check_fold_slope());
    for (auto& c : check_affine_derivative_identity()) out.push_back(std::move(c));
    out.push_back(check_affine_rhat_vs_simulation());
    return out;
}

}  // namespace pwsb
