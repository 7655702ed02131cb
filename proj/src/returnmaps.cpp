#include "pwsb/returnmaps.hpp"

#include <cmath>
#include <stdexcept>

namespace pwsb {

double aux_rho(double s, double nu) {
    return 1.0 - std::exp(nu * s) * (std::cos(s) - nu * std::sin(s));
}

double aux_rho_node(double s, double nu) {
    return 1.0 - std::exp(nu * s) * (std::cosh(s) - nu * std::sinh(s));
}

double aux_shat(double nu) {
    if (!(nu > 0.0)) throw std::domain_error("aux_shat: requires nu > 0");
    auto f = [nu](double s) { return aux_rho(s, nu); };
    // rho(pi; nu) = 1 + e^(nu pi) > 0 and rho -> 1 - e^(2 pi nu) < 0 at 2 pi.
    const double a = kPi + 1e-14, b = 2.0 * kPi;
    BrentResult res = brent(f, a, b, f(a), f(b), 0.0, 1e-13, 300);
    if (!res.converged || std::fabs(res.residual) > 1e-12)
        throw std::runtime_error("aux_shat: root refinement failed");
    return res.root;
}

double g_func(double s, double nu) {
    const double sn = std::sin(s);
    if (std::fabs(sn) < 1e-9) throw std::domain_error("g_func: pole at multiples of pi");
    return std::exp(-nu * s) * aux_rho(s, nu) / sn;
}

double g_func_node(double s, double nu) {
    const double sh = std::sinh(s);
    if (std::fabs(sh) < 1e-12) throw std::domain_error("g_func_node: pole at s = 0");
    return std::exp(-nu * s) * aux_rho_node(s, nu) / sh;
}

double chi_focus(const TaylorTable& t) {
    const EigenData e = eigen_data(t);
    if (!e.complex_pair) throw std::domain_error("chi_focus: eigenvalues are real");
    if (t.a2() == 0.0) throw std::domain_error("chi_focus: a2 = 0");
    return chi_focus_t(t);
}

Rational chi_focus_exact(const BasicTaylorTable<Rational>& t) { return chi_focus_t(t); }

double sigma_fold(const TaylorTable& t) {
    if (!(t.a2() > 0.0) || !(t.b0() < 0.0))
        throw std::domain_error("sigma_fold: requires a2 > 0 and b0 < 0");
    return sigma_fold_t(t);
}

double chi_fold(const TaylorTable& t) {
    if (!(t.a2() > 0.0) || !(t.b0() < 0.0))
        throw std::domain_error("chi_fold: requires a2 > 0 and b0 < 0");
    return chi_fold_t(t);
}

Rational sigma_fold_exact(const BasicTaylorTable<Rational>& t) { return sigma_fold_t(t); }
Rational chi_fold_exact(const BasicTaylorTable<Rational>& t) { return chi_fold_t(t); }

ReturnValue p_focus_series(const TaylorTable& t, double r) {
    const EigenData e = eigen_data(t);
    if (!e.complex_pair) throw std::domain_error("p_focus_series: eigenvalues are real");
    const double chi = chi_focus(t);
    const double m = std::exp(e.lambda * kPi / e.omega);
    ReturnValue v;
    v.P = -m * r + m * (m + 1.0) * chi * r * r;
    v.T = kPi / e.omega;
    return v;
}

ReturnValue p_fold_series(const TaylorTable& t, double r) {
    const double sig = sigma_fold(t);
    const double chi = chi_fold(t);
    ReturnValue v;
    v.P = -r + (2.0 * sig / 3.0) * r * r - (4.0 * sig * sig / 9.0) * r * r * r +
          (2.0 * chi / 15.0) * r * r * r * r;
    v.T = -2.0 / t.b0() * r;
    return v;
}

AffineType affine_type(double lambda, double b0) {
    if (b0 < 0.0) return AffineType::I;
    return lambda < 0.0 ? AffineType::II : AffineType::III;
}

double affine_r_hat(double lambda, double omega, double b0) {
    if (!(b0 > 0.0) || !(lambda < 0.0))
        throw std::domain_error("affine_r_hat: requires b0 > 0 and lambda < 0");
    const double nu = -lambda / omega;
    const double sh = aux_shat(nu);
    return -(b0 / omega) * std::exp(nu * sh) * std::sin(sh);
}

AffineReturnResult affine_return(double lambda, double omega, double b0, double r) {
    if (!(omega > 0.0)) throw std::domain_error("affine_return: requires omega > 0");
    if (b0 == 0.0) throw std::domain_error("affine_return: b0 = 0 (use the focus series)");
    if (!(r > 0.0)) throw std::domain_error("affine_return: requires r > 0");

    AffineReturnResult out;
    out.type = affine_type(lambda, b0);
    const double nu = lambda / omega;
    const double kappa = b0 * omega / (lambda * lambda + omega * omega);

    // r(s) = -kappa e^(-lambda s / omega) rho(s; nu) / sin(s), s = omega T.
    auto r_of_s = [&](double s) {
        return -kappa * std::exp(-nu * s) * aux_rho(s, nu) / std::sin(s);
    };
    auto residual = [&](double s) { return r_of_s(s) - r; };

    // r(s) is monotone on the bracket: increasing on (0, pi) for Type I,
    // decreasing on (pi, shat) otherwise. The pole end (s -> pi) carries
    // r -> infinity; the far end carries r -> 0 (I, III) or r -> r_hat (II).
    double s_lo, s_hi;
    const double edge = 1e-9;
    if (out.type == AffineType::I) {
        s_lo = edge;
        s_hi = kPi - edge;
    } else if (out.type == AffineType::II) {
        const double nu_hat = -nu;
        const double sh = aux_shat(nu_hat);
        out.r_hat = -(b0 / omega) * std::exp(nu_hat * sh) * std::sin(sh);
        if (r < *out.r_hat * (1.0 - 1e-12))
            throw std::domain_error("affine_return: Type II map undefined for r < r_hat");
        s_lo = kPi + edge;
        s_hi = sh;
    } else {
        s_lo = kPi + edge;
        s_hi = (lambda > 0.0) ? aux_shat(nu) : 2.0 * kPi - 1e-12;
    }

    double f_lo = residual(s_lo), f_hi = residual(s_hi);
    // Expand the pole end when r is larger than the edge value allows.
    int guard = 0;
    while ((f_lo > 0.0) == (f_hi > 0.0) && guard++ < 60) {
        double& s_pole = (out.type == AffineType::I) ? s_hi : s_lo;
        s_pole = kPi + (s_pole - kPi) * 0.25;
        f_lo = residual(s_lo);
        f_hi = residual(s_hi);
        if (std::fabs(s_pole - kPi) < 1e-13) {
            // Large-r asymptotic regime: T -> pi / omega, P -> -e^(lambda pi/omega) r.
            out.T = kPi / omega;
            out.P = -std::exp(lambda * kPi / omega) * r;
            return out;
        }
    }
    if ((f_lo > 0.0) == (f_hi > 0.0))
        throw std::runtime_error("affine_return: failed to bracket the return time");

    BrentResult res = brent(residual, s_lo, s_hi, f_lo, f_hi, 1e-15, 1e-12 * (1.0 + r), 300);
    const double s = res.root;
    out.T = s / omega;
    const double sn = std::sin(s);
    if (std::fabs(sn) < 1e-8) {
        out.P = -std::exp(lambda * kPi / omega) * r;  // near-pole limit form
    } else {
        out.P = kappa * std::exp(nu * s) * aux_rho(s, -nu) / sn;
    }
    return out;
}

}  // namespace pwsb
