#pragma once

#include <vector>

#include "gch/lagrangian.hpp"
#include "gch/model.hpp"

namespace gch {

/// Nonlocal right-hand-side ingredients evaluated on the state's label grid.
struct SourceTerms {
    std::vector<double> P1, dxP1, P2, dxP2;
};

/// Reusable buffers for the exponential-kernel scans. c is the cumulative
/// warped metric (c[0] = 0, nondecreasing). Not shareable between
/// concurrent compute_sources calls.
struct KernelWorkspace {
    std::vector<double> c, w, f1, f2, fwd, bwd;
};

/// P[j]  = 1/2 sum_l w[l] exp(-|c[j]-c[l]|) f[l]
/// D[j]  = 1/2 (sum_{l>j} - sum_{l<j}) w[l] exp(-|c[j]-c[l]|) f[l]
/// computed by one forward and one backward exponential-damped scan, O(n).
void exp_kernel_scan(const std::vector<double>& c, const std::vector<double>& w,
                     const std::vector<double>& f, std::vector<double>& fwd,
                     std::vector<double>& bwd, std::vector<double>& P,
                     std::vector<double>& D);

/// Fills ws.c with the trapezoid cumulative of xi*cos^2(v/2) in Y.
void cumulative_metric(const LagrangianState& state, KernelWorkspace& ws);

/// Evaluates P1, dxP1, P2, dxP2 with trapezoid weights over the Y-grid.
/// Calls cumulative_metric itself.
SourceTerms compute_sources(const LagrangianState& state, const GchParams& params,
                            KernelWorkspace& ws);

}  // namespace gch
