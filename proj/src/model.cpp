#include "pwsb/model.hpp"

#include <cmath>

namespace pwsb {

namespace {
double ipow(double v, int p) {
    double r = 1.0;
    for (int k = 0; k < p; ++k) r *= v;
    return r;
}
double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}
}  // namespace

double Poly::eval(double x, double y, double mu, double z) const {
    double s = 0.0;
    for (const Monomial& m : terms_) {
        const double coeff = m.c + m.c_mu * mu;
        if (coeff == 0.0) continue;
        s += coeff * ipow(x, m.i) * ipow(y, m.j) * ipow(z, m.k);
    }
    return s;
}

double Poly::deriv_origin(double mu, int dx, int dy, int dz, bool wrt_mu) const {
    double s = 0.0;
    for (const Monomial& m : terms_) {
        if (m.i != dx || m.j != dy || m.k != dz) continue;
        const double coeff = wrt_mu ? m.c_mu : (m.c + m.c_mu * mu);
        s += coeff * factorial(dx) * factorial(dy) * factorial(dz);
    }
    return s;
}

int Poly::degree_xy() const {
    int d = 0;
    for (const Monomial& m : terms_)
        if (m.c != 0.0 || m.c_mu != 0.0) d = std::max(d, m.i + m.j);
    return d;
}

SmoothPiece SmoothPiece::polynomial(Poly f, Poly g) {
    SmoothPiece p;
    p.poly_ = std::make_pair(std::move(f), std::move(g));
    return p;
}

SmoothPiece SmoothPiece::callable(FieldFn fn, FdOptions fd) {
    SmoothPiece p;
    p.fn_ = std::move(fn);
    p.fd_ = fd;
    return p;
}

Vec2 SmoothPiece::eval(double x, double y, double mu) const {
    if (poly_) return {poly_->first.eval(x, y, mu), poly_->second.eval(x, y, mu)};
    if (!fn_) throw ModelError("SmoothPiece: empty piece");
    return fn_(x, y, mu);
}

int SmoothPiece::degree() const {
    if (!poly_) return -1;
    return std::max(poly_->first.degree_xy(), poly_->second.degree_xy());
}

namespace {

// Central finite-difference weights for the k-th derivative (k = 0..4) on the
// symmetric stencil -w..w (second-order accurate).
struct Stencil {
    int width;
    std::array<double, 5> w;  // offsets -width..width, unused entries zero
};

Stencil stencil_for(int k) {
    switch (k) {
        case 0: return {0, {1.0, 0, 0, 0, 0}};
        case 1: return {1, {-0.5, 0.0, 0.5, 0, 0}};
        case 2: return {1, {1.0, -2.0, 1.0, 0, 0}};
        case 3: return {2, {-0.5, 1.0, 0.0, -1.0, 0.5}};
        case 4: return {2, {1.0, -4.0, 6.0, -4.0, 1.0}};
        default: throw ModelError("extract_taylor: order > 4 unsupported");
    }
}

// Mixed partial via a tensor product of central stencils at steps (hx, hy).
Vec2 mixed_partial(const SmoothPiece& piece, double mu, int i, int j, double hx, double hy) {
    const Stencil sx = stencil_for(i);
    const Stencil sy = stencil_for(j);
    double fx = 0.0, gx = 0.0;
    for (int p = -sx.width; p <= sx.width; ++p) {
        const double wx = sx.w[p + sx.width];
        if (wx == 0.0) continue;
        for (int q = -sy.width; q <= sy.width; ++q) {
            const double wy = sy.w[q + sy.width];
            if (wy == 0.0) continue;
            const Vec2 v = piece.eval(p * hx, q * hy, mu);
            if (!std::isfinite(v.x) || !std::isfinite(v.y))
                throw ModelError("extract_taylor: non-finite evaluation on stencil");
            fx += wx * wy * v.x;
            gx += wx * wy * v.y;
        }
    }
    const double scale = ipow(hx, i) * ipow(hy, j);
    return {fx / scale, gx / scale};
}

}  // namespace

TaylorTable extract_taylor(const SmoothPiece& piece, double mu, int order) {
    if (order > kTaylorOrder) throw ModelError("extract_taylor: order > 4 unsupported");
    TaylorTable t;
    if (piece.is_polynomial()) {
        // Exact read-off; handled by the piece itself below.
        return piece.taylor(mu, order);
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double scale = piece.fd_options().length_scale;
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
            const int k = i + j;
            const double h = std::pow(eps, 1.0 / (k + 2)) * scale;
            // One Richardson step on the O(h^2) stencils: (4 A(h/2) - A(h)) / 3.
            const Vec2 coarse = mixed_partial(piece, mu, i, j, h, h);
            const Vec2 fine = mixed_partial(piece, mu, i, j, 0.5 * h, 0.5 * h);
            t.deriv[0][i][j] = (4.0 * fine.x - coarse.x) / 3.0;
            t.deriv[1][i][j] = (4.0 * fine.y - coarse.y) / 3.0;
        }
    }
    // mu-derivatives of the order<=1 entries by central differences in mu.
    const double hmu = std::pow(eps, 1.0 / 3.0) * scale;
    for (int i = 0; i <= 1; ++i) {
        for (int j = 0; i + j <= 1; ++j) {
            const double h = std::pow(eps, 1.0 / (i + j + 2)) * scale;
            const Vec2 plus = mixed_partial(piece, mu + hmu, i, j, h, h);
            const Vec2 minus = mixed_partial(piece, mu - hmu, i, j, h, h);
            t.deriv_mu[0][i][j] = (plus.x - minus.x) / (2.0 * hmu);
            t.deriv_mu[1][i][j] = (plus.y - minus.y) / (2.0 * hmu);
        }
    }
    return t;
}

TaylorTable SmoothPiece::taylor(double mu, int order) const {
    if (order > kTaylorOrder) throw ModelError("taylor: order > 4 unsupported");
    if (!poly_) return extract_taylor(*this, mu, order);
    TaylorTable t;
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            t.deriv[0][i][j] = poly_->first.deriv_origin(mu, i, j);
            t.deriv[1][i][j] = poly_->second.deriv_origin(mu, i, j);
        }
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; i + j <= 1; ++j) {
            t.deriv_mu[0][i][j] = poly_->first.deriv_origin(mu, i, j, 0, true);
            t.deriv_mu[1][i][j] = poly_->second.deriv_origin(mu, i, j, 0, true);
        }
    return t;
}

double ScalarMap::deriv_y(double y, double mu, int order) const {
    const double eps = std::numeric_limits<double>::epsilon();
    const double h = std::pow(eps, 1.0 / (order + 2)) * (1.0 + std::fabs(y));
    switch (order) {
        case 1: return ((*this)(y + h, mu) - (*this)(y - h, mu)) / (2.0 * h);
        case 2:
            return ((*this)(y + h, mu) - 2.0 * (*this)(y, mu) + (*this)(y - h, mu)) / (h * h);
        default: throw ModelError("ScalarMap: derivative order unsupported");
    }
}

Vec2 SqrtField::eval(double x, double y, double mu) const {
    const double z = x > 0.0 ? std::sqrt(x) : 0.0;
    return {f.eval(x, y, mu, z), g.eval(x, y, mu, z)};
}

SmoothPiece SqrtField::left_piece() const {
    Poly fl, gl;
    for (const Monomial& m : f.terms())
        if (m.k == 0) fl.add(m.i, m.j, m.c, m.c_mu);
    for (const Monomial& m : g.terms())
        if (m.k == 0) gl.add(m.i, m.j, m.c, m.c_mu);
    return SmoothPiece::polynomial(std::move(fl), std::move(gl));
}

double SqrtField::a(int idx) const {
    switch (idx) {
        case 1: return f.deriv_origin(0.0, 1, 0);
        case 2: return f.deriv_origin(0.0, 0, 1);
        case 3: return f.deriv_origin(0.0, 0, 0, 0, true);
        case 4: return f.deriv_origin(0.0, 0, 0, 1);
        default: throw ModelError("SqrtField: bad coefficient index");
    }
}

double SqrtField::b(int idx) const {
    switch (idx) {
        case 1: return g.deriv_origin(0.0, 1, 0);
        case 2: return g.deriv_origin(0.0, 0, 1);
        case 3: return g.deriv_origin(0.0, 0, 0, 0, true);
        case 4: return g.deriv_origin(0.0, 0, 0, 1);
        default: throw ModelError("SqrtField: bad coefficient index");
    }
}

EigenData eigen_data(const TaylorTable& t) {
    EigenData e;
    const double tr = t.trace(), det = t.det();
    e.lambda = 0.5 * tr;
    const double disc = det - e.lambda * e.lambda;
    if (disc > 0.0) {
        e.complex_pair = true;
        e.omega = std::sqrt(disc);
    } else {
        e.complex_pair = false;
        e.eta = std::sqrt(-disc);
    }
    return e;
}

std::vector<std::string> well_posedness_issues(const PWSystem& sys) {
    std::vector<std::string> issues;
    const double mu = sys.mu;
    switch (sys.kind()) {
        case MechKind::Impact: {
            const auto& m = sys.as<ImpactMech>();
            for (double y : {-1.0, -0.1, 0.1, 1.0}) {
                const double fv = m.field.eval(0.0, y, mu).x;
                if (fv * y <= 0.0) {
                    issues.push_back("impact: sgn(f(0,y)) != sgn(y) at y=" + std::to_string(y));
                    break;
                }
            }
            if (std::fabs(m.reset(0.0, mu)) > 1e-12)
                issues.push_back("impact: reset(0) != 0");
            break;
        }
        case MechKind::Impulse: {
            const auto& m = sys.as<ImpulseMech>();
            if (std::fabs(m.radius(0.0, mu)) > 1e-12)
                issues.push_back("impulse: R(0) != 0");
            break;
        }
        case MechKind::Hysteretic:
        case MechKind::Delayed:
            if (mu < 0.0) issues.push_back("hysteresis/delay: mu must be >= 0");
            break;
        case MechKind::FourQuadrant: {
            const auto& m = sys.as<FourQuadrantMech>();
            const double sf[4] = {1.0, -1.0, -1.0, 1.0};
            const double sg[4] = {-1.0, -1.0, 1.0, 1.0};
            for (int q = 0; q < 4; ++q) {
                const Vec2 v = m.quadrant[q].eval(0.0, 0.0, mu);
                if (v.x * sf[q] <= 0.0 || v.y * sg[q] <= 0.0)
                    issues.push_back("four-quadrant: piece " + std::to_string(q + 1) +
                                     " violates the clockwise spiral sign pattern");
            }
            break;
        }
        default: break;
    }
    return issues;
}

const char* mech_name(MechKind k) {
    switch (k) {
        case MechKind::Filippov: return "filippov";
        case MechKind::Impact: return "impact";
        case MechKind::Impulse: return "impulse";
        case MechKind::Hysteretic: return "hysteretic";
        case MechKind::Delayed: return "delayed";
        case MechKind::FourQuadrant: return "four_quadrant";
        case MechKind::Sqrt: return "sqrt_continuous";
    }
    return "unknown";
}

}  // namespace pwsb
