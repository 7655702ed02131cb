#pragma once

// Local Taylor data of one smooth vector-field piece at the origin.
//
// A table stores the raw partial derivatives d^(i+j) F_c / dx^i dy^j at
// (x,y) = (0,0) for both components c in {f,g} and all i+j <= 4, plus the
// mu-derivatives of the order<=1 entries. Aliases a0..a5 / b0..b5 follow the
// series convention
//   f = a0 + a1 x + a2 y + a3 x^2 + a4 x y + a5 y^2 + ...
//   g = b0 + b1 x + b2 y + b3 x^2 + b4 x y + b5 y^2 + ...
// so a3 = (1/2) f_xx, a4 = f_xy, a5 = (1/2) f_yy and likewise for g.

#include <array>
#include <stdexcept>

namespace pwsb {

inline constexpr int kTaylorOrder = 4;

template <class T>
struct BasicTaylorTable {
    // deriv[c][i][j] = d^(i+j) F_c / dx^i dy^j at the origin, i+j <= 4.
    std::array<std::array<std::array<T, kTaylorOrder + 1>, kTaylorOrder + 1>, 2> deriv{};
    // deriv_mu[c][i][j] = d/dmu of the above, i+j <= 1.
    std::array<std::array<std::array<T, 2>, 2>, 2> deriv_mu{};

    const T& d(int comp, int i, int j) const {
        if (comp < 0 || comp > 1 || i < 0 || j < 0 || i + j > kTaylorOrder)
            throw std::out_of_range("TaylorTable: index out of range");
        return deriv[comp][i][j];
    }
    T& d(int comp, int i, int j) {
        if (comp < 0 || comp > 1 || i < 0 || j < 0 || i + j > kTaylorOrder)
            throw std::out_of_range("TaylorTable: index out of range");
        return deriv[comp][i][j];
    }
    const T& d_mu(int comp, int i, int j) const {
        if (comp < 0 || comp > 1 || i < 0 || j < 0 || i + j > 1)
            throw std::out_of_range("TaylorTable: mu index out of range");
        return deriv_mu[comp][i][j];
    }
    T& d_mu(int comp, int i, int j) {
        if (comp < 0 || comp > 1 || i < 0 || j < 0 || i + j > 1)
            throw std::out_of_range("TaylorTable: mu index out of range");
        return deriv_mu[comp][i][j];
    }

    // Series-coefficient aliases.
    T a0() const { return deriv[0][0][0]; }
    T a1() const { return deriv[0][1][0]; }
    T a2() const { return deriv[0][0][1]; }
    T a3() const { return deriv[0][2][0] / T(2); }
    T a4() const { return deriv[0][1][1]; }
    T a5() const { return deriv[0][0][2] / T(2); }
    T b0() const { return deriv[1][0][0]; }
    T b1() const { return deriv[1][1][0]; }
    T b2() const { return deriv[1][0][1]; }
    T b3() const { return deriv[1][2][0] / T(2); }
    T b4() const { return deriv[1][1][1]; }
    T b5() const { return deriv[1][0][2] / T(2); }

    // Jacobian invariants at the origin.
    T trace() const { return a1() + b2(); }
    T det() const { return a1() * b2() - a2() * b1(); }
};

using TaylorTable = BasicTaylorTable<double>;

// Eigenvalue data lambda +/- i omega (omega > 0, focus) or lambda +/- eta
// (0 < eta, node) of the linearization at the origin.
struct EigenData {
    double lambda = 0.0;
    double omega = 0.0;  // > 0 when complex
    double eta = 0.0;    // > 0 when real
    bool complex_pair = false;
};

EigenData eigen_data(const TaylorTable& t);

// Transform (x, y, t) -> (-x, y, -t): maps a left half-plane piece into the
// frame of the fold return-map expansion (a2 > 0, b0 < 0) while leaving
// sigma_fold and chi_fold invariant.
template <class T>
BasicTaylorTable<T> reflect_left_to_fold_frame(const BasicTaylorTable<T>& t) {
    BasicTaylorTable<T> out;
    for (int i = 0; i + 0 <= kTaylorOrder; ++i)
        for (int j = 0; i + j <= kTaylorOrder; ++j) {
            const T sx = (i % 2 == 0) ? T(1) : T(-1);
            out.deriv[0][i][j] = sx * t.deriv[0][i][j];         // f~(x,y) =  f(-x,y)
            out.deriv[1][i][j] = T(-1) * sx * t.deriv[1][i][j];  // g~(x,y) = -g(-x,y)
        }
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; i + j <= 1; ++j) {
            const T sx = (i % 2 == 0) ? T(1) : T(-1);
            out.deriv_mu[0][i][j] = sx * t.deriv_mu[0][i][j];
            out.deriv_mu[1][i][j] = T(-1) * sx * t.deriv_mu[1][i][j];
        }
    return out;
}

// Transform (x, y) -> (x, -y): flips the direction of rotation. Applied to
// counterclockwise systems before the coefficient formulas.
template <class T>
BasicTaylorTable<T> reflect_y(const BasicTaylorTable<T>& t) {
    BasicTaylorTable<T> out;
    for (int i = 0; i + 0 <= kTaylorOrder; ++i)
        for (int j = 0; i + j <= kTaylorOrder; ++j) {
            const T sy = (j % 2 == 0) ? T(1) : T(-1);
            out.deriv[0][i][j] = sy * t.deriv[0][i][j];         // f~(x,y) =  f(x,-y)
            out.deriv[1][i][j] = T(-1) * sy * t.deriv[1][i][j];  // g~(x,y) = -g(x,-y)
        }
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; i + j <= 1; ++j) {
            const T sy = (j % 2 == 0) ? T(1) : T(-1);
            out.deriv_mu[0][i][j] = sy * t.deriv_mu[0][i][j];
            out.deriv_mu[1][i][j] = T(-1) * sy * t.deriv_mu[1][i][j];
        }
    return out;
}

}  // namespace pwsb
