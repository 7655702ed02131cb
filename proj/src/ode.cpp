#include "pwsb/ode.hpp"

#include <algorithm>
#include <cmath>

namespace pwsb {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace

Vec2 DenseStep::eval(double t) const {
    const double th = (t - t0) / h;
    const double th1 = 1.0 - th;
    return r1 + (r2 + (r3 + (r4 + r5 * th1) * th) * th1) * th;
}

IntegrateResult integrate(const Rhs& rhs, double t0, const Vec2& y0, double t1,
                          const std::vector<EventSpec>& events, const OdeOptions& opt,
                          bool record) {
    IntegrateResult out;
    out.samples.push_back({t0, y0});

    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double span = std::fabs(t1 - t0);
    if (span == 0.0) {
        out.t_end = t0;
        out.state_end = y0;
        return out;
    }

    double t = t0;
    Vec2 y = y0;
    Vec2 k1 = rhs(t, y);
    std::vector<double> ev_prev(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) ev_prev[i] = events[i].fn(t, y);

    auto err_norm = [&](const Vec2& e, const Vec2& y_old, const Vec2& y_new) {
        const double sx = opt.abs_tol + opt.rel_tol * std::max(std::fabs(y_old.x), std::fabs(y_new.x));
        const double sy = opt.abs_tol + opt.rel_tol * std::max(std::fabs(y_old.y), std::fabs(y_new.y));
        const double ex = e.x / sx, ey = e.y / sy;
        return std::sqrt(0.5 * (ex * ex + ey * ey));
    };

    double h = opt.h_init;
    if (h == 0.0) {
        const double n1 = std::hypot(k1.x, k1.y);
        h = (n1 > 1e-12) ? 0.01 * std::hypot(y.x, y.y) / n1 + 1e-6 : 1e-4 * span;
        h = std::min(h, 0.1 * span);
        if (h <= 0.0) h = 1e-8 * span;
    }
    if (opt.h_max > 0.0) h = std::min(h, opt.h_max);
    const double h_min = span * opt.h_min_factor;

    for (std::size_t step = 0; step < opt.max_steps; ++step) {
        if (dir * (t1 - t) <= 0.0) break;
        h = std::min(h, std::fabs(t1 - t));
        if (opt.h_max > 0.0) h = std::min(h, opt.h_max);
        const double hd = dir * h;

        const Vec2 k2 = rhs(t + c2 * hd, y + k1 * (a21 * hd));
        const Vec2 k3 = rhs(t + c3 * hd, y + (k1 * a31 + k2 * a32) * hd);
        const Vec2 k4 = rhs(t + c4 * hd, y + (k1 * a41 + k2 * a42 + k3 * a43) * hd);
        const Vec2 k5 = rhs(t + c5 * hd, y + (k1 * a51 + k2 * a52 + k3 * a53 + k4 * a54) * hd);
        const Vec2 k6 =
            rhs(t + hd, y + (k1 * a61 + k2 * a62 + k3 * a63 + k4 * a64 + k5 * a65) * hd);
        const Vec2 ynew =
            y + (k1 * a71 + k3 * a73 + k4 * a74 + k5 * a75 + k6 * a76) * hd;
        const Vec2 k7 = rhs(t + hd, ynew);
        const Vec2 errv =
            (k1 * e1 + k3 * e3 + k4 * e4 + k5 * e5 + k6 * e6 + k7 * e7) * hd;
        const double err = err_norm(errv, y, ynew);

        if (!std::isfinite(ynew.x) || !std::isfinite(ynew.y) || !std::isfinite(err)) {
            h *= 0.25;
            if (h < h_min) throw IntegratorError("integrate: non-finite state");
            continue;
        }
        if (err > 1.0) {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.25));
            if (h < h_min) throw IntegratorError("integrate: step-size collapse");
            continue;
        }

        // Accepted. Build the dense interpolant.
        DenseStep ds;
        ds.t0 = t;
        ds.h = hd;
        ds.r1 = y;
        ds.r2 = ynew - y;
        ds.r3 = k1 * hd - ds.r2;
        ds.r4 = ds.r2 - k7 * hd - ds.r3;
        ds.r5 = (k1 * d1 + k3 * d3 + k4 * d4 + k5 * d5 + k6 * d6 + k7 * d7) * hd;

        // Event scan over the accepted step.
        std::optional<EventHit> best;
        for (std::size_t i = 0; i < events.size(); ++i) {
            const auto& ev = events[i];
            const double g0 = ev_prev[i];
            const double g1 = ev.fn(t + hd, ynew);
            auto gfn = [&](double tt) { return ev.fn(tt, ds.eval(tt)); };

            auto crossing_ok = [&](double ga, double gb) {
                if (ev.direction > 0) return ga < 0.0 && gb >= 0.0;
                if (ev.direction < 0) return ga > 0.0 && gb <= 0.0;
                return (ga > 0.0) != (gb > 0.0);
            };

            std::optional<double> t_root;
            if (g0 != 0.0 && crossing_ok(g0, g1)) {
                BrentResult res = brent(gfn, t, t + hd, g0, g1, 0.0, 0.0, 200);
                t_root = res.root;
            } else {
                // Interior subsample scan: catches dips that cross and return
                // within one step (earliest root wins).
                const int n = 8;
                double prev_t = t, prev_g = g0;
                for (int m = 1; m <= n && !t_root; ++m) {
                    const double tt = t + hd * static_cast<double>(m) / n;
                    const double gg = (m == n) ? g1 : gfn(tt);
                    if (prev_g != 0.0 && crossing_ok(prev_g, gg)) {
                        BrentResult res = brent(gfn, prev_t, tt, prev_g, gg, 0.0, 0.0, 200);
                        t_root = res.root;
                    }
                    prev_t = tt;
                    prev_g = gg;
                }
            }
            if (t_root) {
                if (!best || dir * (*t_root - best->t) < 0.0) {
                    EventHit hit;
                    hit.index = static_cast<int>(i);
                    hit.t = *t_root;
                    hit.state = ds.eval(*t_root);
                    best = hit;
                }
            }
            ev_prev[i] = g1;
        }

        if (best && events[best->index].terminal) {
            out.event = best;
            out.t_end = best->t;
            out.state_end = best->state;
            if (record) out.samples.push_back({best->t, best->state});
            return out;
        }

        t += hd;
        y = ynew;
        k1 = k7;
        if (record) out.samples.push_back({t, y});

        const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(fac, 0.2, 5.0);
    }

    if (dir * (t1 - t) > 0.0) throw IntegratorError("integrate: exceeded max step budget");
    out.t_end = t;
    out.state_end = y;
    if (!record) out.samples.push_back({t, y});
    return out;
}

}  // namespace pwsb
