#pragma once

#include <vector>

#include "gch/lagrangian.hpp"
#include "gch/model.hpp"

namespace gch {

/// Classical finite-difference reference solver for smooth, pre-breaking
/// solutions in physical coordinates.
struct EulerianGrid {
    double x0 = 0.0;
    double dx = 0.0;
    double t = 0.0;
    std::vector<double> u;
    int n() const { return int(u.size()); }
    double x(int i) const { return x0 + dx * i; }
};

/// Solves (1 - D2) P = f with centered second differences and homogeneous
/// Dirichlet ends by tridiagonal elimination; P approximates p*f.
std::vector<double> helmholtz_invert(const std::vector<double>& f, double dx);

std::vector<double> rhs_eulerian(const EulerianGrid& grid, const GchParams& params);

EulerianGrid eulerian_from_initial(const InitialData& data, int n, double span);

std::vector<EulerianGrid> integrate_eulerian(const EulerianGrid& grid0,
                                             const GchParams& params,
                                             double t_end, double dt,
                                             const std::vector<double>& snapshot_times);

EulerianField to_field(const EulerianGrid& grid, double lambda);

}  // namespace gch
