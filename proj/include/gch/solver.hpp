#pragma once

#include <vector>

#include "gch/lagrangian.hpp"
#include "gch/model.hpp"
#include "gch/nonlocal.hpp"

namespace gch {

struct Derivatives {
    std::vector<double> du, dv, dxi, dx;
};

struct EnergyReport {
    double T = 0.0;
    double E = 0.0;
    double E_bound = 0.0;          // e^{2(|k|+|lambda|)T} E(0)
    double dE_dT_analytic = 0.0;   // -2k int u^2 xi cos^2(v/2) dY - 2 lambda E
    double sup_u = 0.0;
};

constexpr double kTolEnergy = 1e-4;  // relative slack before EnergyBoundViolated

Derivatives rhs(const LagrangianState& state, const GchParams& params,
                KernelWorkspace& ws);

LagrangianState step_rk4(const LagrangianState& state, const GchParams& params,
                         double dt, KernelWorkspace& ws);

EnergyReport energy(const LagrangianState& state, const GchParams& params,
                    double E0);

/// Runtime Lipschitz estimate D^ assembled from the a priori bounds; the
/// default step size is 0.1 / D^.
double lipschitz_estimate(const GchParams& params, double E0, double t_end);
double suggest_dt(const GchParams& params, double E0, double t_end);

struct Snapshot {
    LagrangianState state;
    EnergyReport report;
};

/// Fixed-step RK4 up to t_end; snapshots at the nearest completed step with
/// the actual T recorded. The final state is always appended.
std::vector<Snapshot> integrate(const LagrangianState& state0,
                                const GchParams& params, double t_end, double dt,
                                const std::vector<double>& snapshot_times);

}  // namespace gch
