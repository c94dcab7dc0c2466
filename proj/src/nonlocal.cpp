#include "gch/nonlocal.hpp"

#include <cmath>

#include "gch/errors.hpp"

namespace gch {

void exp_kernel_scan(const std::vector<double>& c, const std::vector<double>& w,
                     const std::vector<double>& f, std::vector<double>& fwd,
                     std::vector<double>& bwd, std::vector<double>& P,
                     std::vector<double>& D) {
    const std::size_t n = c.size();
    fwd.resize(n);
    bwd.resize(n);
    P.resize(n);
    D.resize(n);
    // fwd[j] = sum_{l<j} w_l e^{-(c_j - c_l)} f_l, damped left-to-right
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) acc = std::exp(-(c[j] - c[j - 1])) * (acc + w[j - 1] * f[j - 1]);
        fwd[j] = acc;
    }
    acc = 0.0;
    for (std::size_t j = n; j-- > 0;) {
        if (j + 1 < n) acc = std::exp(-(c[j + 1] - c[j])) * (acc + w[j + 1] * f[j + 1]);
        bwd[j] = acc;
    }
    for (std::size_t j = 0; j < n; ++j) {
        P[j] = 0.5 * (fwd[j] + w[j] * f[j] + bwd[j]);
        D[j] = 0.5 * (bwd[j] - fwd[j]);
    }
}

void cumulative_metric(const LagrangianState& state, KernelWorkspace& ws) {
    const int n = state.n();
    ws.c.resize(n);
    ws.c[0] = 0.0;
    double prev = 0.0;
    for (int j = 0; j < n; ++j) {
        double c2 = std::cos(0.5 * state.v[j]);
        c2 *= c2;
        double m = state.xi[j] * c2;
        if (m < -kTolGrid) throw StateCorrupt("negative metric density");
        if (m < 0.0) m = 0.0;
        if (j > 0) ws.c[j] = ws.c[j - 1] + 0.5 * state.dY * (prev + m);
        prev = m;
    }
}

SourceTerms compute_sources(const LagrangianState& state, const GchParams& params,
                            KernelWorkspace& ws) {
    const int n = state.n();
    cumulative_metric(state, ws);

    ws.w.assign(n, state.dY);
    ws.w.front() = ws.w.back() = 0.5 * state.dY;
    ws.f1.resize(n);
    ws.f2.resize(n);
    for (int j = 0; j < n; ++j) {
        double ch = std::cos(0.5 * state.v[j]), sh = std::sin(0.5 * state.v[j]);
        double c2 = ch * ch, s2 = sh * sh;
        ws.f1[j] = state.xi[j] * (params.h(state.u[j]) * c2 + 0.5 * params.alpha * s2);
        ws.f2[j] = params.k * state.xi[j] * state.u[j] * c2;
    }

    SourceTerms st;
    exp_kernel_scan(ws.c, ws.w, ws.f1, ws.fwd, ws.bwd, st.P1, st.dxP1);
    exp_kernel_scan(ws.c, ws.w, ws.f2, ws.fwd, ws.bwd, st.P2, st.dxP2);
    return st;
}

}  // namespace gch
