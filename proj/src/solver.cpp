#include "gch/solver.hpp"

#include <algorithm>
#include <cmath>

#include "gch/errors.hpp"

namespace gch {

Derivatives rhs(const LagrangianState& state, const GchParams& params,
                KernelWorkspace& ws) {
    const int n = state.n();
    SourceTerms st = compute_sources(state, params, ws);
    Derivatives d;
    d.du.resize(n);
    d.dv.resize(n);
    d.dxi.resize(n);
    d.dx.resize(n);
    const double a = params.alpha, lam = params.lambda;
    for (int j = 0; j < n; ++j) {
        double ch = std::cos(0.5 * state.v[j]), sh = std::sin(0.5 * state.v[j]);
        double c2 = ch * ch, s2 = sh * sh, sv = 2.0 * sh * ch;
        double hu = params.h(state.u[j]);
        d.du[j] = -st.dxP1[j] - st.P2[j] - lam * state.u[j];
        d.dv[j] = -a * s2 + 2.0 * hu * c2 -
                  2.0 * (st.P1[j] + st.dxP2[j]) * c2 - lam * sv;
        d.dxi[j] = state.xi[j] * (0.5 * a + hu - st.P1[j] - st.dxP2[j]) * sv -
                   2.0 * lam * state.xi[j] * s2;
        d.dx[j] = a * state.u[j] + params.beta;
    }
    return d;
}

namespace {
void axpy(std::vector<double>& y, double a, const std::vector<double>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}
}  // namespace

LagrangianState step_rk4(const LagrangianState& state, const GchParams& params,
                         double dt, KernelWorkspace& ws) {
    auto k1 = rhs(state, params, ws);

    LagrangianState s2 = state;
    s2.T = state.T + 0.5 * dt;
    axpy(s2.u, 0.5 * dt, k1.du);
    axpy(s2.v, 0.5 * dt, k1.dv);
    axpy(s2.xi, 0.5 * dt, k1.dxi);
    axpy(s2.x, 0.5 * dt, k1.dx);
    auto k2 = rhs(s2, params, ws);

    LagrangianState s3 = state;
    s3.T = state.T + 0.5 * dt;
    axpy(s3.u, 0.5 * dt, k2.du);
    axpy(s3.v, 0.5 * dt, k2.dv);
    axpy(s3.xi, 0.5 * dt, k2.dxi);
    axpy(s3.x, 0.5 * dt, k2.dx);
    auto k3 = rhs(s3, params, ws);

    LagrangianState s4 = state;
    s4.T = state.T + dt;
    axpy(s4.u, dt, k3.du);
    axpy(s4.v, dt, k3.dv);
    axpy(s4.xi, dt, k3.dxi);
    axpy(s4.x, dt, k3.dx);
    auto k4 = rhs(s4, params, ws);

    LagrangianState out = state;
    out.T = state.T + dt;
    const double c = dt / 6.0;
    double check = 0.0;
    for (int j = 0; j < state.n(); ++j) {
        out.u[j] += c * (k1.du[j] + 2.0 * k2.du[j] + 2.0 * k3.du[j] + k4.du[j]);
        out.v[j] += c * (k1.dv[j] + 2.0 * k2.dv[j] + 2.0 * k3.dv[j] + k4.dv[j]);
        out.xi[j] += c * (k1.dxi[j] + 2.0 * k2.dxi[j] + 2.0 * k3.dxi[j] + k4.dxi[j]);
        out.x[j] += c * (k1.dx[j] + 2.0 * k2.dx[j] + 2.0 * k3.dx[j] + k4.dx[j]);
        check += out.u[j] + out.v[j] + out.xi[j] + out.x[j];
    }
    if (!std::isfinite(check))
        throw NumericalBlowup("non-finite state at T = " + std::to_string(out.T));
    return out;
}

EnergyReport energy(const LagrangianState& state, const GchParams& params,
                    double E0) {
    const int n = state.n();
    EnergyReport r;
    r.T = state.T;
    double E = 0.0, F = 0.0;  // F = int u^2 xi cos^2(v/2) dY
    for (int j = 0; j < n; ++j) {
        double ch = std::cos(0.5 * state.v[j]), sh = std::sin(0.5 * state.v[j]);
        double fj = state.u[j] * state.u[j] * state.xi[j] * ch * ch;
        double ej = fj + state.xi[j] * sh * sh;
        double w = (j == 0 || j == n - 1) ? 0.5 * state.dY : state.dY;
        E += w * ej;
        F += w * fj;
        r.sup_u = std::max(r.sup_u, std::abs(state.u[j]));
    }
    r.E = E;
    r.dE_dT_analytic = -2.0 * params.k * F - 2.0 * params.lambda * E;
    r.E_bound =
        std::exp(2.0 * (std::abs(params.k) + std::abs(params.lambda)) * state.T) *
        E0;
    return r;
}

double lipschitz_estimate(const GchParams& params, double E0, double t_end) {
    double C = std::exp(2.0 * (std::abs(params.k) + std::abs(params.lambda)) *
                        t_end) *
               E0;
    double L = params.h.lipschitz_bound(std::sqrt(C));
    double aa = std::abs(params.alpha), ak = std::abs(params.k);
    return 0.5 * aa + L * std::sqrt(C) + 0.5 * L + 0.25 * (L + aa) * C +
           0.5 * ak + 0.25 * ak * C + 2.0 * std::abs(params.lambda);
}

double suggest_dt(const GchParams& params, double E0, double t_end) {
    double D = lipschitz_estimate(params, E0, t_end);
    return D > 0.0 ? std::min(0.1 / D, 0.01) : 0.01;
}

std::vector<Snapshot> integrate(const LagrangianState& state0,
                                const GchParams& params, double t_end, double dt,
                                const std::vector<double>& snapshot_times) {
    KernelWorkspace ws;
    const double E0 = energy(state0, params, state0.T == 0.0 ? 0.0 : 1.0).E;
    auto report = [&](const LagrangianState& s) { return energy(s, params, E0); };

    std::vector<double> wanted = snapshot_times;
    std::sort(wanted.begin(), wanted.end());

    std::vector<Snapshot> out;
    LagrangianState s = state0;
    std::size_t next = 0;
    auto maybe_snapshot = [&](const LagrangianState& cur, double half_step) {
        while (next < wanted.size() && wanted[next] <= cur.T + half_step) {
            out.push_back({cur, report(cur)});
            ++next;
        }
    };

    const long nsteps = std::lround(t_end / dt);
    maybe_snapshot(s, 0.5 * dt);
    for (long i = 0; i < nsteps; ++i) {
        s = step_rk4(s, params, dt, ws);
        EnergyReport r = report(s);
        if (r.E > r.E_bound * (1.0 + kTolEnergy) && r.E_bound > 0.0)
            throw EnergyBoundViolated("E = " + std::to_string(r.E) + " > bound " +
                                      std::to_string(r.E_bound) + " at T = " +
                                      std::to_string(s.T));
        for (double xv : s.xi)
            if (xv <= 0.0) throw StateCorrupt("xi lost positivity");
        maybe_snapshot(s, i + 1 == nsteps ? 1e300 : 0.5 * dt);
    }
    if (out.empty() || out.back().state.T != s.T) out.push_back({s, report(s)});
    return out;
}

}  // namespace gch
