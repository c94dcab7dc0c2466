#pragma once

#include <string>
#include <vector>

#include "gch/model.hpp"
#include "gch/solver.hpp"

namespace gch {

/// Compactly supported space-time test function with closed-form derivatives.
/// SmoothBump uses (1-s^2)^3 profiles (C^2), TentProduct uses (1-|s|).
struct TestFunction {
    enum class Kind { SmoothBump, TentProduct };
    Kind kind = Kind::SmoothBump;
    double t0 = 0.5, x0 = 0.0;
    double rt = 0.5, rx = 2.0;
    double amp = 1.0;

    double value(double t, double x) const;
    double dt(double t, double x) const;
    double dx(double t, double x) const;
};

struct Trajectory {
    GchParams params;
    std::vector<Snapshot> snaps;  // first snapshot must be at T = 0
};

/// Signed space-time quadrature of the weak form; the public residual is its
/// absolute value.
double weak_form_residual_signed(const Trajectory& traj, const TestFunction& phi);
double weak_form_residual(const Trajectory& traj, const TestFunction& phi);

/// Measure-valued balance law residual. With weighted = false the e^{2 lambda t}
/// density weight is dropped (diagnostic comparison only).
double balance_law_residual_signed(const Trajectory& traj, const TestFunction& phi,
                                   bool weighted = true);
double balance_law_residual(const Trajectory& traj, const TestFunction& phi,
                            bool weighted = true);

struct MeasureSnapshot {
    double t = 0.0;
    struct Atom {
        double x_left, x_right, mass;
    };
    std::vector<Atom> atoms;          // flat x-intervals (breaking regions)
    std::vector<double> x, ac_density;  // sampled where the slope is defined
    double total_mass = 0.0;
};

MeasureSnapshot measure_snapshot(const LagrangianState& state, double lambda);

struct BreakingReport {
    struct Row {
        double T;
        double breaking_measure;  // Y-measure of {cos^2(v/2) < eps}
        double min_xY;            // min over nodes of xi cos^2(v/2)
    };
    std::vector<Row> rows;
    double breaking_time_fraction = 0.0;
};

BreakingReport breaking_diagnostics(const Trajectory& traj);

struct RegularityReport {
    double holder_quotient = 0.0;    // sup |u(x)-u(y)| / |x-y|^{1/2}
    double lipschitz_x_quotient = 0.0;  // sup |u(x)-u(y)| / |x-y|
    double l2_time_quotient = 0.0;   // sup ||u(t2)-u(t1)||_2 / |t2-t1|
};

RegularityReport regularity_check(const Trajectory& traj);

struct DependenceRow {
    double scale;
    double distance;  // max-norm on the common window at t_end
};

std::vector<DependenceRow> continuous_dependence_check(
    const InitialData& data0, const std::vector<double>& scales,
    const GchParams& params, double t_end, const GridSpec& grid, double dt);

/// Default battery of 5 test functions covering the run window.
std::vector<TestFunction> default_battery(double t_end, double x_half_width);

}  // namespace gch
