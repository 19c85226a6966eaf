#pragma once

#include <hharm6/poly.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace hharm6 {

/// Hyper-radius and shape-sphere angles for a Jacobi configuration.
/// alpha lies in [0, pi/2]; phi is resolved by atan2(2 rho.lambda, rho^2 - lambda^2)
/// and is meaningless at the shape-sphere poles (sin alpha = 0), where it is flagged
/// rather than thrown.
struct ShapeCoords {
    double R = 0;
    double alpha = 0;
    double phi = 0;
    bool phi_degenerate = false;
};

namespace detail {
inline double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline std::array<double, 3> cross3(const std::array<double, 3>& a,
                                    const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
} // namespace detail

inline ShapeCoords shape_coords(const JacobiConfig& c) {
    using namespace detail;
    const double rho2 = dot3(c.rho, c.rho);
    const double lam2 = dot3(c.lambda, c.lambda);
    const double R2 = rho2 + lam2;
    if (R2 <= 0) throw std::domain_error("shape_coords: zero hyper-radius");

    ShapeCoords s;
    s.R = std::sqrt(R2);

    const auto cr = cross3(c.rho, c.lambda);
    const double cross_norm = 2.0 * std::sqrt(dot3(cr, cr)) / R2;
    double sin2_alpha = 1.0 - cross_norm * cross_norm;
    sin2_alpha = std::clamp(sin2_alpha, 0.0, 1.0);
    s.alpha = std::asin(std::sqrt(sin2_alpha));

    const double y = 2.0 * dot3(c.rho, c.lambda);
    const double x = rho2 - lam2;
    const double mag = std::sqrt(y * y + x * x);
    if (mag <= 1e-14 * R2) {
        s.phi = 0.0;
        s.phi_degenerate = true;
    } else {
        s.phi = std::atan2(y, x);
    }
    return s;
}

/// Jacobi-coordinate action of the two-particle transpositions.
enum class Transposition { P12, P23, P31 };

inline JacobiConfig apply_transposition(const JacobiConfig& c, Transposition t) {
    JacobiConfig r;
    const double h = 0.5, s = std::sqrt(3.0) / 2.0;
    switch (t) {
    case Transposition::P12:
        r.lambda = c.lambda;
        for (int i = 0; i < 3; ++i) r.rho[i] = -c.rho[i];
        break;
    case Transposition::P23:
        for (int i = 0; i < 3; ++i) {
            r.lambda[i] = -h * c.lambda[i] + s * c.rho[i];
            r.rho[i] = h * c.rho[i] + s * c.lambda[i];
        }
        break;
    case Transposition::P31:
        for (int i = 0; i < 3; ++i) {
            r.lambda[i] = -h * c.lambda[i] - s * c.rho[i];
            r.rho[i] = h * c.rho[i] - s * c.lambda[i];
        }
        break;
    }
    return r;
}

} // namespace hharm6
