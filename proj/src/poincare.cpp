#include "pwsb/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "pwsb/geometry.hpp"

namespace pwsb {

std::optional<double> displacement(const PWSystem& sys, double r, const SimPolicy& policy) {
    PoincareResult res = poincare_numeric(sys, SectionKind::Full, r, policy);
    if (!res.ok) return std::nullopt;
    return res.P - r;
}

std::optional<double> theorem_seed(const HLBReport& report, double mu) {
    if (!report.alpha || !report.beta) return std::nullopt;
    const double a = *report.alpha, b = *report.beta;
    if (a == 0.0) return std::nullopt;
    const double dmu = mu - report.mu0;
    switch (report.kind) {
        case HLBKind::HLB7:
            // r* = sqrt(-3 beta mu / alpha) to leading order
            if (-3.0 * b * dmu / a <= 0.0) return std::nullopt;
            return std::sqrt(-3.0 * b * dmu / a);
        case HLBKind::HLB10:
            if (-5.0 * b * dmu / a <= 0.0) return std::nullopt;
            return std::sqrt(-5.0 * b * dmu / a);
        default:
            return std::nullopt;
    }
}

std::optional<FixedPoint> find_limit_cycle(const PWSystem& sys, double mu,
                                           const CycleSearch& search) {
    PWSystem s = sys.with_mu(mu);
    auto D = [&](double r) -> std::optional<double> {
        auto d = displacement(s, r, search.policy);
        if (!d) return std::nullopt;
        return search.scale_by_r ? *d / r : *d;
    };

    // Geometric scan for a sign change among defined samples; cycles whose
    // section ordinate is negative (e.g. sliding cycles entering below the
    // origin) are caught by rescanning the mirrored bracket.
    const double ratio = std::pow(search.r_hi / search.r_lo, 1.0 / search.samples);
    double lo = 0.0, hi = 0.0, dlo = 0.0, dhi = 0.0;
    bool bracketed = false;
    if (search.seed && *search.seed != 0.0) {
        // Tight bracket around the predicted fixed point first.
        const double s0 = *search.seed;
        double prev_r = 0.0;
        std::optional<double> prev_d;
        for (int i = -4; i <= 4; ++i) {
            const double r = s0 * std::pow(1.7, static_cast<double>(i));
            auto d = D(r);
            if (d && prev_d && (*prev_d > 0.0) != (*d > 0.0)) {
                lo = prev_r;
                hi = r;
                dlo = *prev_d;
                dhi = *d;
                bracketed = true;
                break;
            }
            if (d) {
                prev_r = r;
                prev_d = d;
            }
        }
    }
    for (double sign : {1.0, -1.0}) {
        if (bracketed) break;
        double prev_r = 0.0;
        std::optional<double> prev_d;
        double r = search.r_lo;
        for (int i = 0; i <= search.samples; ++i, r *= ratio) {
            auto d = D(sign * r);
            if (d && prev_d && (*prev_d > 0.0) != (*d > 0.0)) {
                lo = prev_r;
                hi = sign * r;
                dlo = *prev_d;
                dhi = *d;
                bracketed = true;
                break;
            }
            if (d) {
                prev_r = sign * r;
                prev_d = d;
            }
        }
        if (bracketed) break;
    }
    if (!bracketed) return std::nullopt;

    auto Dval = [&](double rr) {
        auto d = D(rr);
        if (!d) throw IntegratorError("find_limit_cycle: map undefined inside bracket");
        return *d;
    };
    BrentResult res = brent(Dval, lo, hi, dlo, dhi, 0.0, search.tol, 200);
    const double r_star = res.root;

    FixedPoint fp;
    fp.r_star = r_star;
    PoincareResult ret = poincare_numeric(s, SectionKind::Full, r_star, search.policy);
    if (!ret.ok) return std::nullopt;
    fp.residual = std::fabs(ret.P - r_star);
    fp.period = ret.T;
    fp.extremes_min = ret.extremes_min;
    fp.extremes_max = ret.extremes_max;

    // Multiplier by centered finite differences of the full return map.
    const double h = std::max(1e-7, 1e-4 * std::fabs(r_star));
    PoincareResult plus = poincare_numeric(s, SectionKind::Full, r_star + h, search.policy);
    PoincareResult minus = poincare_numeric(s, SectionKind::Full, r_star - h, search.policy);
    if (plus.ok && minus.ok)
        fp.multiplier = (plus.P - minus.P) / (2.0 * h);
    else if (plus.ok)
        fp.multiplier = (plus.P - ret.P) / h;
    else if (minus.ok)
        fp.multiplier = (ret.P - minus.P) / h;
    else
        fp.multiplier = std::numeric_limits<double>::quiet_NaN();
    return fp;
}

std::optional<FixedPoint> measure_attractor_cycle(const PWSystem& sys, double mu,
                                                  const Vec2& seed, double t_transient,
                                                  int cycles, const SimPolicy& policy) {
    PWSystem s = sys.with_mu(mu);
    Trajectory warm = simulate(s, seed, t_transient, policy);
    // Continue and collect switch events.
    Trajectory tr = simulate(s, warm.state_end, t_transient * 4.0, policy);
    std::vector<double> switch_times;
    std::vector<double> switch_y;
    for (const auto& ev : tr.events) {
        if (ev.type == EventType::Switch) {
            switch_times.push_back(ev.time);
            switch_y.push_back(ev.location.y);
        }
    }
    // One cycle = two switches (L->R and R->L); average the same-phase
    // spacing over the measured tail.
    if (static_cast<int>(switch_times.size()) < 2 * cycles + 4) return std::nullopt;
    FixedPoint fp;
    const std::size_t n = switch_times.size();
    double period = 0.0;
    int count = 0;
    for (std::size_t i = n - 2 * cycles - 1; i + 2 <= n - 1; i += 2) {
        period += switch_times[i + 2] - switch_times[i];
        ++count;
    }
    if (count == 0) return std::nullopt;
    fp.period = period / count;

    // Extremes over the measured tail.
    const double t_tail = switch_times[n - 2 * cycles - 1];
    Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
    for (const auto& seg : tr.segments) {
        for (const auto& q : seg.states) {
            if (q.t < t_tail) continue;
            lo.x = std::min(lo.x, q.state.x);
            lo.y = std::min(lo.y, q.state.y);
            hi.x = std::max(hi.x, q.state.x);
            hi.y = std::max(hi.y, q.state.y);
        }
    }
    fp.extremes_min = lo;
    fp.extremes_max = hi;
    fp.r_star = switch_y[n - 1];
    fp.residual = std::fabs(switch_y[n - 1] - switch_y[n - 3]);

    // Contraction estimate from successive same-phase switch ordinates.
    double m = 0.0;
    int mc = 0;
    for (std::size_t i = n - 2 * cycles + 1; i + 4 <= n; i += 2) {
        const double d1 = switch_y[i + 2] - switch_y[i];
        const double d0 = switch_y[i] - switch_y[i - 2];
        if (std::fabs(d0) > 1e-14) {
            m += d1 / d0;
            ++mc;
        }
    }
    fp.multiplier = mc > 0 ? m / mc : 0.0;
    return fp;
}

namespace {

// Contiguous chunks so each worker sweeps its range left to right; the
// warm-start continuation then only reads rows its own worker has written.
void parallel_for_chunked(std::size_t n, bool parallel,
                          const std::function<void(std::size_t, bool)>& body) {
    if (!parallel || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i, i == 0);
        return;
    }
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * n / workers;
        const std::size_t end = (w + 1) * n / workers;
        pool.emplace_back([&body, begin, end] {
            for (std::size_t i = begin; i < end; ++i) body(i, i == begin);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<DiagramBranch> sweep_diagram(const PWSystem& family,
                                         const std::vector<double>& mu_grid,
                                         const SweepOptions& opt) {
    std::vector<std::vector<DiagramBranch>> rows(mu_grid.size());
    parallel_for_chunked(mu_grid.size(), opt.parallel, [&](std::size_t i, bool chunk_start) {
        const double mu = mu_grid[i];
        std::vector<DiagramBranch>& out = rows[i];
        PWSystem s = family.with_mu(mu);
        const bool has_lr = s.kind() == MechKind::Filippov ||
                            s.kind() == MechKind::Hysteretic ||
                            s.kind() == MechKind::Delayed;
        if (has_lr) {
            try {
                for (const Equilibrium& eq : find_regular_equilibria(s, opt.box, mu)) {
                    if (!eq.admissible) continue;
                    out.push_back({mu, "equilibrium", eq.location.x, eq.stable, true, ""});
                }
            } catch (const std::exception& e) {
                out.push_back({mu, "equilibrium_error", 0.0, false, false, e.what()});
            }
            try {
                for (const Equilibrium& eq :
                     find_pseudo_equilibria(s, opt.slide_lo, opt.slide_hi, mu)) {
                    if (!eq.admissible) continue;
                    out.push_back({mu, "pseudo_equilibrium", eq.location.y, eq.stable, true, ""});
                }
            } catch (const std::exception&) {
                // Continuous pieces have no sliding field; nothing to record.
            }
        }
        try {
            CycleSearch search = opt.search;
            if (!search.seed && !chunk_start) {
                // Continuation warm start from the neighbouring grid point
                // (same worker chunk; written before this index runs).
                for (const auto& b : rows[i - 1])
                    if (b.branch == "cycle_r_star") search.seed = b.value;
            }
            if (auto fp = find_limit_cycle(family, mu, search)) {
                out.push_back({mu, "cycle_r_star", fp->r_star, fp->stable(), true, ""});
                out.push_back({mu, "cycle_x_min", fp->extremes_min.x, fp->stable(), true, ""});
                out.push_back({mu, "cycle_x_max", fp->extremes_max.x, fp->stable(), true, ""});
                out.push_back({mu, "cycle_y_min", fp->extremes_min.y, fp->stable(), true, ""});
                out.push_back({mu, "cycle_y_max", fp->extremes_max.y, fp->stable(), true, ""});
                out.push_back({mu, "cycle_period", fp->period, fp->stable(), true, ""});
            }
        } catch (const std::exception& e) {
            out.push_back({mu, "cycle_error", 0.0, false, false, e.what()});
        }
    });
    std::vector<DiagramBranch> flat;
    for (auto& row : rows)
        for (auto& b : row) flat.push_back(std::move(b));
    return flat;
}

}  // namespace pwsb
