#pragma once

#include <vector>

#include "gch/model.hpp"

namespace gch {

/// Uniform label grid on [-span, span] with n nodes.
struct GridSpec {
    int n = 1024;
    double span = 20.0;
};

constexpr double kEpsBreak = 1e-8;   // cos^2(v/2) below this: slope undefined
constexpr double kTolGrid = 1e-10;   // monotonicity slack for x(Y)

/// State of the characteristic-coordinate system: arrays over the uniform
/// Y-grid holding (u, v, xi, x) at time T. v is stored unwrapped.
struct LagrangianState {
    double T = 0.0;
    double y0 = 0.0;  // leftmost label
    double dY = 0.0;
    std::vector<double> u, v, xi, x;

    int n() const { return int(u.size()); }
    double Y(int j) const { return y0 + dY * j; }
};

/// Reconstructed physical-space snapshot. ux and energy_density are NaN at
/// breaking points (cos^2(v/2) <= kEpsBreak).
struct EulerianField {
    double t = 0.0;
    std::vector<double> x, u, ux, energy_density;
};

/// Y(x) = int_0^x (1 + u0x^2), inverted onto the uniform Y-grid;
/// u, v sampled along the inverse map, xi = 1, T = 0.
LagrangianState forward_transform(const InitialData& data, const GridSpec& grid);

EulerianField reconstruct(const LagrangianState& state, double lambda);

/// Piecewise-linear interpolation of u; constant across collapsed intervals.
double eval_u_at(const EulerianField& field, double xq);

/// Discrete H1-type energy int (u^2 + ux^2) dx over the defined-slope region.
double field_energy(const EulerianField& field);

}  // namespace gch
