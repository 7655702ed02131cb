#include "pwsb/num.hpp"

#include <algorithm>
#include <numeric>

namespace pwsb {

BrentResult brent(const std::function<double(double)>& f, double a, double b, double fa,
                  double fb, double xtol, double ftol, int max_iter) {
    BrentResult out;
    if (fa == 0.0) return {a, 0.0, 0, true};
    if (fb == 0.0) return {b, 0.0, 0, true};
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("brent: endpoints do not bracket a root");

    double c = a, fc = fa, d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0 || std::fabs(fb) <= ftol) {
            return {b, fb, it, true};
        }
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::fabs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return {b, fb, max_iter, false};
}

std::optional<double> bracketed_root(const std::function<double(double)>& f, double a,
                                     double b, int samples, double xtol, double ftol) {
    double prev_x = a;
    double prev_f = f(a);
    if (prev_f == 0.0) return a;
    for (int i = 1; i <= samples; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / samples;
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (std::isfinite(prev_f) && std::isfinite(fx) && (prev_f > 0.0) != (fx > 0.0)) {
            auto res = brent(f, prev_x, x, prev_f, fx, xtol, ftol);
            if (res.converged) return res.root;
        }
        prev_x = x;
        prev_f = fx;
    }
    return std::nullopt;
}

NewtonResult newton_damped(const std::function<std::vector<double>(const std::vector<double>&)>& f,
                           std::vector<double> x0, const NewtonOptions& opt) {
    const std::size_t n = x0.size();
    NewtonResult out;
    out.x = x0;
    auto norm = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double c : v) s += c * c;
        return std::sqrt(s);
    };
    std::vector<double> fx = f(out.x);
    out.residual = norm(fx);
    for (int it = 0; it < opt.max_iter; ++it) {
        if (out.residual <= opt.residual_tol) {
            out.converged = true;
            return out;
        }
        // numerical Jacobian, column-major solve with partial pivoting
        std::vector<double> J(n * n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> xp = out.x;
            const double h = opt.fd_step * (1.0 + std::fabs(out.x[j]));
            xp[j] += h;
            std::vector<double> fp = f(xp);
            for (std::size_t i = 0; i < n; ++i) J[i * n + j] = (fp[i] - fx[i]) / h;
        }
        // Gaussian elimination on [J | -fx]
        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = -fx[i];
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        bool singular = false;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::fabs(J[perm[i] * n + k]) > std::fabs(J[perm[piv] * n + k])) piv = i;
            std::swap(perm[k], perm[piv]);
            const double pivval = J[perm[k] * n + k];
            if (std::fabs(pivval) < 1e-300) {
                singular = true;
                break;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                const double m = J[perm[i] * n + k] / pivval;
                for (std::size_t j = k; j < n; ++j) J[perm[i] * n + j] -= m * J[perm[k] * n + j];
                rhs[perm[i]] -= m * rhs[perm[k]];
            }
        }
        if (singular) break;
        std::vector<double> dx(n);
        for (std::size_t k = n; k-- > 0;) {
            double s = rhs[perm[k]];
            for (std::size_t j = k + 1; j < n; ++j) s -= J[perm[k] * n + j] * dx[j];
            dx[k] = s / J[perm[k] * n + k];
        }
        // damping: halve the step until the residual decreases
        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half < 30; ++half) {
            std::vector<double> xn = out.x;
            for (std::size_t i = 0; i < n; ++i) xn[i] += lambda * dx[i];
            std::vector<double> fn = f(xn);
            const double rn = norm(fn);
            if (rn < out.residual) {
                out.x = xn;
                fx = fn;
                out.residual = rn;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) break;
    }
    out.converged = out.residual <= opt.residual_tol;
    return out;
}

namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    const double whole = simpson(a, fa, fm, b, fb);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("fit_line: need >= 2 points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

double fit_slope_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += x[i] * y[i];
        den += x[i] * x[i];
    }
    return num / den;
}

namespace {
std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

Rational make_from_128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    auto g128 = [](__int128 a, __int128 b) {
        if (a < 0) a = -a;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    const __int128 g = g128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    const __int128 lim = std::numeric_limits<std::int64_t>::max();
    if (n > lim || -n > lim || d > lim)
        throw std::overflow_error("Rational: 64-bit overflow");
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}
}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = gcd64(num_ == 0 ? den_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return make_from_128(static_cast<__int128>(a.num_) * b.den_ +
                             static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return make_from_128(static_cast<__int128>(a.num_) * b.den_ -
                             static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return make_from_128(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make_from_128(static_cast<__int128>(a.num_) * b.den_,
                         static_cast<__int128>(a.den_) * b.num_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace pwsb
