#pragma once

#include <vector>

#include "gch/lagrangian.hpp"
#include "gch/model.hpp"
#include "gch/nonlocal.hpp"

namespace gch {

/// State of the energy-variable system. The eta array holds the current
/// positions of the advected labels (uniform at t = 0, generally nonuniform
/// later); v is the unit-circle slope variable, v = pi where x_eta = 0.
struct EtaState {
    double t = 0.0;
    std::vector<double> eta, x, u, v;
    int n() const { return int(eta.size()); }
};

struct EtaDerivs {
    std::vector<double> deta, dx, du, dv;
};

/// eta(x) = x + int_0^x u0x^2, inverted onto a uniform eta-grid on
/// [-span, span]; u, v sampled as in forward_transform.
EtaState eta_from_initial(const InitialData& data, const GridSpec& grid);

EtaDerivs rhs_eta(const EtaState& state, const GchParams& params,
                  KernelWorkspace& ws);

std::vector<EtaState> integrate_eta(const EtaState& state0,
                                    const GchParams& params, double t_end,
                                    double dt,
                                    const std::vector<double>& snapshot_times);

EulerianField reconstruct_eta(const EtaState& state, double lambda);

}  // namespace gch
