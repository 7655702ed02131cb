#include "pwsb/scaling.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace pwsb {

namespace {

void parallel_for(std::size_t n, bool parallel, const std::function<void(std::size_t)>& body) {
    if (!parallel || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace

ScalingFit fit_scaling(const PWSystem& family, HLBKind kind, double mu_min, double mu_max,
                       const ScalingOptions& opt) {
    ScalingFit fit;
    const int n = std::max(opt.n_points, 2);
    const double ratio = std::pow(mu_max / mu_min, 1.0 / (n - 1));
    std::vector<ScalingPoint> pts(n);

    const bool delayed = family.kind() == MechKind::Delayed;
    parallel_for(static_cast<std::size_t>(n), opt.parallel, [&](std::size_t i) {
        const double mu = mu_min * std::pow(ratio, static_cast<double>(i));
        ScalingPoint pt;
        pt.mu = mu;
        std::optional<FixedPoint> fp;
        try {
            if (delayed) {
                // Seed just outside the switching set so the attractor pulls in.
                fp = measure_attractor_cycle(family, mu, {std::sqrt(mu) * 0.5, std::sqrt(mu)},
                                             opt.attractor_transient * std::sqrt(mu) + 10.0 * mu,
                                             8, opt.search.policy);
            } else {
                CycleSearch cs = opt.search;
                fp = find_limit_cycle(family, mu, cs);
            }
        } catch (const std::exception&) {
            fp.reset();
        }
        if (fp) {
            pt.amp_x = fp->extremes_max.x - fp->extremes_min.x;
            pt.amp_y = fp->extremes_max.y - fp->extremes_min.y;
            pt.amplitude = std::max(pt.amp_x, pt.amp_y);
            pt.x_max = fp->extremes_max.x;
            pt.period = fp->period;
            pt.ok = pt.amplitude > 0.0 && pt.period > 0.0;
        }
        pts[i] = pt;
    });

    std::vector<double> lmu, lamp, lper, lax, lay, lxm, lmu_xm;
    for (const auto& pt : pts) {
        if (!pt.ok) {
            ++fit.dropped;
            continue;
        }
        lmu.push_back(std::log(pt.mu));
        lamp.push_back(std::log(pt.amplitude));
        lper.push_back(std::log(pt.period));
        lax.push_back(pt.amp_x > 0.0 ? std::log(pt.amp_x) : -700.0);
        lay.push_back(pt.amp_y > 0.0 ? std::log(pt.amp_y) : -700.0);
        if (pt.x_max > 0.0) {
            lxm.push_back(std::log(pt.x_max));
            lmu_xm.push_back(std::log(pt.mu));
        }
    }
    fit.points = std::move(pts);
    fit.enough_points = lmu.size() >= 8;
    if (lmu.size() < 2) return fit;

    const LineFit amp = fit_line(lmu, lamp);
    const LineFit per = fit_line(lmu, lper);
    fit.exponent_amplitude = amp.slope;
    fit.exponent_period = per.slope;
    fit.k1 = std::exp(amp.intercept);
    fit.k2 = std::exp(per.intercept);
    fit.r_squared_amplitude = amp.r_squared;
    fit.r_squared_period = per.r_squared;
    fit.exponent_amp_x = fit_line(lmu, lax).slope;
    fit.exponent_amp_y = fit_line(lmu, lay).slope;
    if (lxm.size() >= 2) fit.exponent_x_max = fit_line(lmu_xm, lxm).slope;

    if (opt.period_limit) {
        std::vector<double> lcorr, lmu2;
        for (const auto& pt : fit.points) {
            if (!pt.ok) continue;
            const double d = std::fabs(pt.period - *opt.period_limit);
            if (d > 0.0) {
                lmu2.push_back(std::log(pt.mu));
                lcorr.push_back(std::log(d));
            }
        }
        if (lmu2.size() >= 2) fit.exponent_period_correction = fit_line(lmu2, lcorr).slope;
    }
    (void)kind;
    return fit;
}

}  // namespace pwsb
