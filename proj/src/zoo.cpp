#include "pwsb/zoo.hpp"

#include <cmath>

#include "pwsb/num.hpp"

namespace pwsb {

namespace {

double param(const std::map<std::string, double>& p, const std::string& key, double dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

void reject_unknown(const std::map<std::string, double>& p, const ZooEntry& e) {
    for (const auto& [k, v] : p) {
        (void)v;
        bool ok = false;
        for (const auto& name : e.params) ok = ok || name == k;
        if (!ok) throw ModelError("zoo: unknown parameter '" + k + "' for " + e.name);
    }
}

// --- van der Pol oscillator (smooth Hopf reference) -------------------------

PWSystem build_vdp(const std::map<std::string, double>& p) {
    const double k2 = param(p, "k2", 1.0);
    Poly f, g;
    f.add(0, 1, 1.0);
    g.add(1, 0, -1.0);
    g.add(0, 1, 0.0, 1.0);  // k1 y, k1 = mu
    g.add(0, 3, -k2);
    SmoothPiece piece = SmoothPiece::polynomial(f, g);
    PWSystem s;
    s.name = "vdp";
    s.mech = FilippovMech{piece, piece};
    s.mu = param(p, "k1", 0.0);
    s.notes = "(x,y;mu) = (v,i;k1)";
    return s;
}

// --- McKean neuron model ----------------------------------------------------

PWSystem build_mckean(const std::map<std::string, double>& p) {
    const double a = param(p, "a", 0.25);
    const double b = param(p, "b", 0.5);
    const double c = param(p, "c", 0.5);
    const double I_star = a / (2.0 * c) + a / 2.0;
    const double I = param(p, "I", I_star);

    // Canonical frame: x = a/2 - v, y = w_bar - w, mu = I - I_star. The left
    // piece carries both the middle and outer branches of the caricature
    // nonlinearity; the second manifold v = (a+1)/2 sits at x = a/2 - (a+1)/2.
    const double x_knee = a / 2.0 - (a + 1.0) / 2.0;
    auto left = SmoothPiece::callable([a, b, c, x_knee](double x, double y, double mu) {
        (void)a;
        // middle branch of the caricature for x > x_knee, outer branch beyond
        const double fx = (x > x_knee) ? x - y - mu : -x - y - mu - 1.0;
        return Vec2{fx, b * x - b * c * y};
    });
    Poly fr, gr;
    fr.add(1, 0, -1.0);
    fr.add(0, 1, -1.0);
    fr.add(0, 0, 0.0, -1.0);  // -mu
    gr.add(1, 0, b);
    gr.add(0, 1, -b * c);
    auto right = SmoothPiece::polynomial(fr, gr);

    PWSystem s;
    s.name = "mckean";
    s.mech = FilippovMech{left, right};
    s.mu = I - I_star;
    s.notes = "x = a/2 - v, y = a/(2c) - w, mu = I - " + std::to_string(I_star);
    return s;
}

// --- Ocean circulation model ------------------------------------------------

PWSystem build_ocean(const std::map<std::string, double>& p) {
    const double A = param(p, "A", 1.1);
    const double d0 = param(p, "delta0", 0.01);
    const double lambda = param(p, "lambda", 1.0);
    // x = ybar - 1, y = mubar - 1, mu = 1 - lambda.
    Poly fl, gl, fr, gr;
    fl.add(1, 0, A - 1.0);
    fl.add(0, 1, 1.0);
    fl.add(2, 0, A);
    gl.add(1, 0, -d0);
    gl.add(0, 0, 0.0, -d0);
    fr.add(1, 0, -(1.0 + A));
    fr.add(0, 1, 1.0);
    fr.add(2, 0, -A);
    gr = gl;
    PWSystem s;
    s.name = "ocean";
    s.mech = FilippovMech{SmoothPiece::polynomial(fl, gl), SmoothPiece::polynomial(fr, gr)};
    s.mu = 1.0 - lambda;
    s.notes = "x = ybar - 1, y = mubar - 1, mu = 1 - lambda";
    return s;
}

// --- Gause predator-prey model ----------------------------------------------

PWSystem build_gause(const std::map<std::string, double>& p) {
    const double Rc = param(p, "Rc", 16.0);
    const double r = param(p, "r", 1.0);
    const double h = param(p, "h", 1.0);
    const double k = param(p, "k", 0.45);
    const double del = param(p, "delta", 0.36);
    const double K = param(p, "K", 50.0);
    const double qbar = del / k;
    const double b_star = qbar / (Rc * (1.0 - qbar * h));
    const double b = param(p, "b", b_star);
    const double ybar = r * Rc * (1.0 - Rc / K) / qbar;

    // Canonical frame: x_c = Rc - x, y_c = ybar - y, mu = b_star - b.
    auto left = SmoothPiece::callable(
        [=](double xc, double yc, double mu) {
            const double X = Rc - xc;
            const double Y = ybar - yc;
            const double bb = b_star - mu;
            const double q = bb * X / (1.0 + bb * h * X);
            const double fx = -(r * X * (1.0 - X / K) - q * Y);
            const double gy = -((k * q - del) * Y);
            return Vec2{fx, gy};
        },
        FdOptions{1e-2});
    auto right = SmoothPiece::callable(
        [=](double xc, double yc, double mu) {
            (void)mu;
            const double X = Rc - xc;
            const double Y = ybar - yc;
            return Vec2{-(r * X * (1.0 - X / K)), del * Y};
        },
        FdOptions{1e-2});
    PWSystem s;
    s.name = "gause";
    s.mech = FilippovMech{left, right};
    s.mu = b_star - b;
    s.notes = "x = Rc - prey, y = ybar - predator, mu = b* - b";
    return s;
}

// --- Valve generator --------------------------------------------------------

PWSystem build_valve(const std::map<std::string, double>& p) {
    const double h1 = param(p, "h1", 0.6);
    const double h2 = param(p, "h2", 0.3);
    // Canonical frame: x_c = a - x, y_c = -y, mu = -a. The unstable piece
    // (damping -2 h2) sits in the left half-plane.
    Poly fl, gl, fr, gr;
    fl.add(0, 1, 1.0);
    gl.add(1, 0, -1.0);
    gl.add(0, 1, 2.0 * h2);
    gl.add(0, 0, 0.0, -1.0);
    fr.add(0, 1, 1.0);
    gr.add(1, 0, -1.0);
    gr.add(0, 1, -2.0 * h1);
    gr.add(0, 0, 0.0, -1.0);
    PWSystem s;
    s.name = "valve";
    s.mech = FilippovMech{SmoothPiece::polynomial(fl, gl), SmoothPiece::polynomial(fr, gr)};
    s.mu = -param(p, "a", 0.0);
    s.notes = "x_c = a - x, y_c = -y, mu = -a";
    return s;
}

// --- Slipping boundary foci -------------------------------------------------

PWSystem build_slip_focus_focus(const std::map<std::string, double>& p) {
    const double lamL = param(p, "lambda_L", 0.1);
    const double lamR = param(p, "lambda_R", -0.5);
    Poly fl, gl, fr, gr;
    fl.add(1, 0, lamL);
    fl.add(0, 1, 1.0);
    gl.add(1, 0, -1.0);
    gl.add(0, 1, lamL);
    fr.add(1, 0, lamR);
    fr.add(0, 1, 1.0);
    fr.add(0, 0, 0.0, 1.0);
    gr.add(1, 0, -1.0);
    gr.add(0, 1, lamR);
    gr.add(0, 0, 0.0, lamR);
    PWSystem s;
    s.name = "slip_focus_focus";
    s.mech = FilippovMech{SmoothPiece::polynomial(fl, gl), SmoothPiece::polynomial(fr, gr)};
    s.mu = param(p, "mu", 0.0);
    return s;
}

PWSystem build_slip_focus_fold(const std::map<std::string, double>& p) {
    const double lamL = param(p, "lambda_L", 1.0);
    Poly fl, gl, fr, gr;
    fl.add(1, 0, lamL);
    fl.add(0, 1, 1.0);
    gl.add(1, 0, -1.0);
    gl.add(0, 1, lamL);
    fr.add(0, 1, 1.0);
    fr.add(0, 0, 0.0, 1.0);
    gr.add(0, 0, -1.0);
    PWSystem s;
    s.name = "slip_focus_fold";
    s.mech = FilippovMech{SmoothPiece::polynomial(fl, gl), SmoothPiece::polynomial(fr, gr)};
    s.mu = param(p, "mu", 0.0);
    return s;
}

// --- Controlled inverted pendulum -------------------------------------------

PWSystem build_pendulum(const std::map<std::string, double>& p) {
    const double a = param(p, "a", 0.5);
    const double Kp = param(p, "Kp", 1.0);
    const double Kd = param(p, "Kd", 1.0);
    const double th = param(p, "theta_star", 1.0);
    // x = theta - (theta* + b thetadot), y = thetadot, mu = b.
    auto left = SmoothPiece::callable([=](double x, double y, double mu) {
        const double acc = a * (x + th + mu * y);
        return Vec2{y - mu * acc, acc};
    });
    auto right = SmoothPiece::callable([=](double x, double y, double mu) {
        const double acc = (a - Kp) * (x + th + mu * y) - Kd * y;
        return Vec2{y - mu * acc, acc};
    });
    PWSystem s;
    s.name = "pendulum";
    s.mech = FilippovMech{left, right};
    s.mu = param(p, "b", 0.0);
    s.notes = "x = theta - (theta* + b thetadot), y = thetadot, mu = b";
    return s;
}

// --- Bilinear oscillator ----------------------------------------------------

PWSystem build_bilinear(const std::map<std::string, double>& p) {
    const double b = param(p, "b", 0.5);
    const double nu2 = param(p, "nu2", 1.0);
    const double xhat = param(p, "xhat", 0.0);
    const double kL = 1.0, kR = 3.0;
    const double nu1_star = (xhat > 0.0) ? b : 4.0 * b / 3.0;
    const double nu1 = param(p, "nu1", nu1_star);
    Poly fl, gl, fr, gr;
    fl.add(0, 1, 1.0);
    gl.add(1, 0, -kL);
    gl.add(0, 1, nu1_star - b, 1.0);
    gl.add(0, 2, nu2);
    fr.add(0, 1, 1.0);
    gr.add(0, 0, -kR * xhat);
    gr.add(1, 0, -kL - kR);
    gr.add(0, 1, nu1_star - 2.0 * b, 1.0);
    gr.add(0, 2, nu2);
    PWSystem s;
    s.name = "bilinear";
    s.mech = FilippovMech{SmoothPiece::polynomial(fl, gl), SmoothPiece::polynomial(fr, gr)};
    s.mu = nu1 - nu1_star;
    s.notes = "mu = nu1 - nu1*, nu1* = " + std::to_string(nu1_star);
    return s;
}

// --- Fixed invisible two-fold -----------------------------------------------

PWSystem build_fixed_two_fold(const std::map<std::string, double>& p) {
    const double eta1 = param(p, "eta1", 1.0);
    Poly fl, gl, fr, gr;
    fl.add(1, 0, 1.0);
    fl.add(0, 1, 1.0);
    gl.add(0, 0, 1.0);
    fr.add(0, 1, 1.0);
    gr.add(0, 0, -1.0);
    gr.add(1, 0, eta1);
    gr.add(0, 1, -1.0, 1.0);  // eta2 = -1 + mu
    PWSystem s;
    s.name = "fixed_two_fold";
    s.mech = FilippovMech{SmoothPiece::polynomial(fl, gl), SmoothPiece::polynomial(fr, gr)};
    s.mu = param(p, "mu", 0.0);
    s.notes = "mu = eta2 + 1";
    return s;
}

// --- Linear impact oscillator -----------------------------------------------

PWSystem build_impact_osc(const std::map<std::string, double>& p) {
    const double tau = param(p, "tau", 0.2);
    const double del = param(p, "delta", 1.0);
    const double rc = param(p, "r", 0.5);
    Poly f, g;
    f.add(0, 1, 1.0);
    g.add(1, 0, -del);
    g.add(0, 1, tau);
    g.add(0, 0, 0.0, -del);  // -delta * xi
    ImpactMech mech;
    mech.field = SmoothPiece::polynomial(f, g);
    mech.reset = ScalarMap([rc](double y, double) { return -rc * y; });
    PWSystem s;
    s.name = "impact_osc";
    s.mech = std::move(mech);
    s.mu = param(p, "xi", 0.0);
    s.notes = "x = u - xi, y = v, mu = xi";
    return s;
}

// --- Impulsive Lotka-Volterra -----------------------------------------------

PWSystem build_lv_impulse(const std::map<std::string, double>& p) {
    const double nu = param(p, "nu", 2.0);
    Poly f, g;
    f.add(0, 1, 1.0);
    f.add(2, 0, 0.5);
    f.add(0, 2, -0.5);
    g.add(1, 0, -1.0);
    ImpulseMech mech;
    mech.field = SmoothPiece::polynomial(f, g);
    mech.radius = ScalarMap([](double y, double mu) {
        const double n = 2.0 + mu;
        return y * std::sqrt(1.0 - n + n * n / 2.0);
    });
    mech.angle = ScalarMap([](double, double mu) {
        const double n = 2.0 + mu;
        return std::atan2(1.0 - n / 2.0, n / 2.0);
    });
    PWSystem s;
    s.name = "lv_impulse";
    s.mech = std::move(mech);
    s.mu = nu - 2.0;
    s.notes = "x = X - Y, y = -X - Y + 2, mu = nu - 2";
    return s;
}

// --- Relay observer canonical form ------------------------------------------

PWSystem build_relay_observer(const std::map<std::string, double>& p,
                              const std::string& mechanism) {
    const double tau = param(p, "tau", -0.5);
    const double del = param(p, "delta", 1.0);
    const double b1 = param(p, "b1", 1.0);
    const double b2 = param(p, "b2", 1.0);
    Poly fl, gl, fr, gr;
    fl.add(1, 0, tau);
    fl.add(0, 1, 1.0);
    fl.add(0, 0, b1);
    gl.add(1, 0, -del);
    gl.add(0, 0, b2);
    fr.add(1, 0, tau);
    fr.add(0, 1, 1.0);
    fr.add(0, 0, -b1);
    gr.add(1, 0, -del);
    gr.add(0, 0, -b2);
    auto left = SmoothPiece::polynomial(fl, gl);
    auto right = SmoothPiece::polynomial(fr, gr);
    PWSystem s;
    s.name = "relay_observer";
    if (mechanism == "filippov")
        s.mech = FilippovMech{left, right};
    else if (mechanism == "delayed")
        s.mech = DelayedMech{left, right};
    else if (mechanism == "hysteretic")
        s.mech = HystereticMech{left, right};
    else
        throw ModelError("relay_observer: unsupported mechanism " + mechanism);
    s.mu = param(p, "mu", 0.0);
    return s;
}

// --- Forced oscillator with discontinuous forcing ---------------------------

PWSystem build_forced_osc(const std::map<std::string, double>& p,
                          const std::string& mechanism) {
    const double m = param(p, "m", 1.0);
    const double b = param(p, "b", 0.5);
    const double k = param(p, "k", 1.0);
    const double F = param(p, "F", 1.0);
    Poly fl, gl, fr, gr;
    fl.add(0, 1, 1.0);
    gl.add(1, 0, -k / m);
    gl.add(0, 1, -b / m);
    gl.add(0, 0, F / m);
    fr.add(0, 1, 1.0);
    gr.add(1, 0, -k / m);
    gr.add(0, 1, -b / m);
    gr.add(0, 0, -F / m);
    auto left = SmoothPiece::polynomial(fl, gl);
    auto right = SmoothPiece::polynomial(fr, gr);
    PWSystem s;
    s.name = "forced_osc";
    if (mechanism == "filippov")
        s.mech = FilippovMech{left, right};
    else if (mechanism == "delayed")
        s.mech = DelayedMech{left, right};
    else if (mechanism == "hysteretic")
        s.mech = HystereticMech{left, right};
    else
        throw ModelError("forced_osc: unsupported mechanism " + mechanism);
    s.mu = param(p, "mu", 0.0);
    return s;
}

// --- Wilson-Cowan model (transformed) ---------------------------------------

std::array<SmoothPiece, 4> wilson_cowan_pieces(double a, double b, double c, double d,
                                               double tau0) {
    // F3 coefficients are affine in tau = tau0 + mu.
    auto mk = [&](int j) {
        // d/dtau parts
        Poly f, g;
        // F3 core
        f.add(1, 0, -(a * tau0 - c), -a);
        f.add(0, 1, -c * (1.0 - tau0), c);
        f.add(0, 0, -(c * (b - d) + (a * d - b * c) * tau0), -(a * d - b * c));
        g.add(1, 0, a * (1.0 - tau0), -a);
        g.add(0, 1, -(a - c * tau0), c);
        g.add(0, 0, -(a * (b - d) + (a * d - b * c) * tau0), -(a * d - b * c));
        const double ac = a - c;
        switch (j) {
            case 1:
                f.add(0, 0, ac * (tau0 - c), ac);
                g.add(0, 0, ac * (tau0 - a), ac);
                break;
            case 2:
                f.add(0, 0, -ac * c);
                g.add(0, 0, -ac * a);
                break;
            case 3:
                break;
            case 4:
                f.add(0, 0, ac * tau0, ac);
                g.add(0, 0, ac * tau0, ac);
                break;
        }
        return SmoothPiece::polynomial(f, g);
    };
    return {mk(1), mk(2), mk(3), mk(4)};
}

double wilson_cowan_tau_hb(double a, double b, double c, double d) {
    auto lambda_minus_1 = [&](double tau) {
        auto q = wilson_cowan_pieces(a, b, c, d, tau);
        double num = 1.0, den = 1.0;
        for (int j = 0; j < 4; ++j) {
            const Vec2 v = q[j].eval(0.0, 0.0, 0.0);
            const double m = v.y / v.x;
            if (j == 1 || j == 3)
                num *= m;
            else
                den *= m;
        }
        return num / den - 1.0;
    };
    auto root = bracketed_root(lambda_minus_1, 0.35, 0.75, 400, 1e-14, 0.0);
    if (!root) throw ModelError("wilson_cowan: onset root not found");
    return *root;
}

PWSystem build_wilson_cowan(const std::map<std::string, double>& p) {
    const double a = param(p, "a", 2.0);
    const double b = param(p, "b", 0.05);
    const double c = param(p, "c", 0.25);
    const double d = param(p, "d", 0.3);
    const double tau_hb = wilson_cowan_tau_hb(a, b, c, d);
    const double tau = param(p, "tau", tau_hb);
    FourQuadrantMech mech;
    mech.quadrant = wilson_cowan_pieces(a, b, c, d, tau_hb);
    PWSystem s;
    s.name = "wilson_cowan";
    s.mech = std::move(mech);
    s.mu = tau - tau_hb;
    s.notes = "x = u - cv - d, y = u - av - b, time scaled by (a-c) tau; mu = tau - " +
              std::to_string(tau_hb);
    return s;
}

// --- Square-root singular BEB -----------------------------------------------

PWSystem build_sqrt_example(const std::map<std::string, double>& p) {
    const double lam = param(p, "lambda", 0.5);
    const double eta = param(p, "eta", -1.0);
    const double nu = param(p, "nu", -1.0);
    SqrtField field;
    field.f.add(1, 0, lam);
    field.f.add(0, 1, 1.0);
    field.f.add_z(0, 0, 1, eta);
    field.g.add(1, 0, -1.0);
    field.g.add(0, 1, lam);
    field.g.add(0, 0, 0.0, -1.0);
    field.g.add_z(0, 0, 1, nu);
    PWSystem s;
    s.name = "sqrt_example";
    s.mech = SqrtMech{std::move(field)};
    s.mu = param(p, "mu", 0.0);
    return s;
}

std::vector<ZooEntry> make_catalogue() {
    std::vector<ZooEntry> v;
    auto add = [&](ZooEntry e) { v.push_back(std::move(e)); };
    add({"vdp", "van der Pol oscillator (smooth Hopf reference)", {"k1", "k2"},
         {{"k2", 1.0}}, HLBKind::Hopf, -6.0, 1.0, 0.0, "(x,y;mu)=(v,i;k1)"});
    add({"mckean", "McKean piecewise-linear neuron model", {"a", "b", "c", "I"},
         {{"a", 0.25}, {"b", 0.5}, {"c", 0.5}}, HLBKind::HLB1, 0.0913, 0.25, 0.375,
         "first manifold v = a/2"});
    add({"ocean", "reduced ocean circulation box model", {"A", "delta0", "lambda"},
         {{"A", 1.1}, {"delta0", 0.01}}, HLBKind::HLB2, std::nullopt, 0.01, 1.0,
         "manifold ybar = 1"});
    add({"gause", "Gause predator-prey model with refuge", {"Rc", "r", "h", "k", "delta", "K", "b"},
         {{"b", 0.25}}, HLBKind::HLB3, std::nullopt, std::nullopt, 0.25, "manifold x = Rc"});
    add({"valve", "valve generator circuit", {"h1", "h2", "a"},
         {{"h1", 0.6}, {"h2", 0.3}}, HLBKind::HLB4, -0.4355115996, 1.0, 0.0,
         "manifold x = a"});
    add({"slip_focus_focus", "slipping boundary foci", {"lambda_L", "lambda_R", "mu"},
         {{"lambda_L", 0.1}, {"lambda_R", -0.5}}, HLBKind::HLB5, -0.4, 1.0, 0.0, ""});
    add({"slip_focus_fold", "slipping boundary focus and invisible fold",
         {"lambda_L", "mu"}, {{"lambda_L", 1.0}}, HLBKind::HLB6, 1.0, 1.0, 0.0, ""});
    add({"pendulum", "inverted pendulum with on/off PD control",
         {"a", "Kp", "Kd", "theta_star", "b"}, {{"a", 0.5}}, HLBKind::HLB7, -2.0, 1.0, 0.0,
         "manifold theta = theta* + b thetadot"});
    add({"bilinear", "bilinear (compliant-impact) oscillator", {"b", "nu2", "xhat", "nu1"},
         {{"b", 0.5}, {"nu2", 1.0}, {"xhat", 0.0}}, HLBKind::HLB8, -0.02795031056, 0.7579365,
         std::nullopt, "HLB8 at xhat=0, HLB9 for xhat>0"});
    add({"fixed_two_fold", "fixed invisible-invisible two-fold", {"eta1", "mu"},
         {{"eta1", 1.0}}, HLBKind::HLB10, -1.0, 1.0, -1.0, "mu = eta2 + 1"});
    add({"impact_osc", "linear impact oscillator", {"tau", "delta", "r", "xi"},
         {{"tau", 0.2}, {"delta", 1.0}, {"r", 0.5}}, HLBKind::HLB11, -0.3774399,
         1.0, 0.0, "x = u - xi"});
    add({"lv_impulse", "Lotka-Volterra with prey impulse", {"nu"}, {{"nu", 2.0}},
         HLBKind::HLB14, -1.0 / 6.0, 0.5, 2.0, "x = X - Y, y = 2 - X - Y"});
    add({"relay_observer", "relay control observer canonical form",
         {"tau", "delta", "b1", "b2", "mu"}, {{"b1", 1.0}, {"b2", 1.0}}, HLBKind::HLB15,
         -2.0, std::nullopt, 0.0, "hysteretic by default; also filippov/delayed"});
    add({"forced_osc", "linear oscillator with discontinuous forcing",
         {"m", "b", "k", "F", "mu"}, {{"b", 0.5}}, HLBKind::HLB17, -1.0, std::nullopt, 0.0,
         "hysteretic by default; also filippov/delayed"});
    add({"wilson_cowan", "Wilson-Cowan model, transformed coordinates",
         {"a", "b", "c", "d", "tau"}, {{"a", 2.0}, {"b", 0.05}, {"c", 0.25}, {"d", 0.3}},
         HLBKind::HLB19, -8.47, 9.53, 0.5240, "x = u - cv - d, y = u - av - b"});
    add({"sqrt_example", "square-root singular continuous BEB",
         {"lambda", "eta", "nu", "mu"}, {{"lambda", 0.5}, {"eta", -1.0}, {"nu", -1.0}},
         HLBKind::HLB20, std::nullopt, 1.0, 0.0, ""});
    return v;
}

const std::vector<ZooEntry>& catalogue() {
    static const std::vector<ZooEntry> c = make_catalogue();
    return c;
}

}  // namespace

std::vector<std::string> zoo_list() {
    std::vector<std::string> names;
    for (const auto& e : catalogue()) names.push_back(e.name);
    return names;
}

const ZooEntry& zoo_entry(const std::string& name) {
    for (const auto& e : catalogue())
        if (e.name == name) return e;
    throw ModelError("zoo: unknown model '" + name + "'");
}

PWSystem zoo_build_mech(const std::string& name, const std::string& mechanism,
                        const std::map<std::string, double>& params) {
    const ZooEntry& e = zoo_entry(name);
    reject_unknown(params, e);
    if (name == "vdp") return build_vdp(params);
    if (name == "mckean") return build_mckean(params);
    if (name == "ocean") return build_ocean(params);
    if (name == "gause") return build_gause(params);
    if (name == "valve") return build_valve(params);
    if (name == "slip_focus_focus") return build_slip_focus_focus(params);
    if (name == "slip_focus_fold") return build_slip_focus_fold(params);
    if (name == "pendulum") return build_pendulum(params);
    if (name == "bilinear") return build_bilinear(params);
    if (name == "fixed_two_fold") return build_fixed_two_fold(params);
    if (name == "impact_osc") return build_impact_osc(params);
    if (name == "lv_impulse") return build_lv_impulse(params);
    if (name == "relay_observer")
        return build_relay_observer(params, mechanism.empty() ? "hysteretic" : mechanism);
    if (name == "forced_osc")
        return build_forced_osc(params, mechanism.empty() ? "hysteretic" : mechanism);
    if (name == "wilson_cowan") return build_wilson_cowan(params);
    if (name == "sqrt_example") return build_sqrt_example(params);
    throw ModelError("zoo: unknown model '" + name + "'");
}

PWSystem zoo_build(const std::string& name, const std::map<std::string, double>& params) {
    return zoo_build_mech(name, "", params);
}

}  // namespace pwsb
