#include "gch/eta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gch/errors.hpp"

namespace gch {

namespace {
double table_interp(const std::vector<double>& key, const std::vector<double>& val,
                    double q) {
    if (q <= key.front()) return val.front() + (q - key.front());
    if (q >= key.back()) return val.back() + (q - key.back());
    auto it = std::upper_bound(key.begin(), key.end(), q);
    std::size_t i = std::size_t(it - key.begin());
    double den = key[i] - key[i - 1];
    double t = den > 0.0 ? (q - key[i - 1]) / den : 0.0;
    return val[i - 1] + t * (val[i] - val[i - 1]);
}
}  // namespace

EtaState eta_from_initial(const InitialData& data, const GridSpec& grid) {
    data.validate();
    const std::size_t m = data.x.size();

    // eta(x) = x + int_0^x u0x^2 (trapezoid), re-based at x = 0
    std::vector<double> et(m);
    et[0] = data.x[0];
    for (std::size_t i = 1; i < m; ++i)
        et[i] = et[i - 1] + (data.x[i] - data.x[i - 1]) *
                                (1.0 + 0.5 * (data.u0x[i] * data.u0x[i] +
                                              data.u0x[i - 1] * data.u0x[i - 1]));
    // shift so eta(0) = 0
    std::vector<double> xs(data.x);
    double eta0 = 0.0;
    {
        auto it = std::upper_bound(xs.begin(), xs.end(), 0.0);
        std::size_t i = std::min(std::size_t(it - xs.begin()), m - 1);
        if (i == 0) i = 1;
        double t = (0.0 - xs[i - 1]) / (xs[i] - xs[i - 1]);
        eta0 = et[i - 1] + t * (et[i] - et[i - 1]);
    }
    for (auto& e : et) e -= eta0;

    // the grid must cover the image of the numeric support of the data
    double elo = et.front(), ehi = et.back();
    for (std::size_t i = 0; i < m; ++i)
        if (std::abs(data.u0[i]) + std::abs(data.u0x[i]) > 1e-12) {
            elo = et[i];
            break;
        }
    for (std::size_t i = m; i-- > 0;)
        if (std::abs(data.u0[i]) + std::abs(data.u0x[i]) > 1e-12) {
            ehi = et[i];
            break;
        }
    if (elo < -grid.span || ehi > grid.span)
        throw GridTooSmall("eta-grid span " + std::to_string(grid.span) +
                           " does not cover data image [" + std::to_string(elo) +
                           ", " + std::to_string(ehi) + "]");

    EtaState s;
    s.t = 0.0;
    s.eta.resize(grid.n);
    s.x.resize(grid.n);
    s.u.resize(grid.n);
    s.v.resize(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        double ej = -grid.span + 2.0 * grid.span * double(j) / double(grid.n - 1);
        double xj = table_interp(et, data.x, ej);
        s.eta[j] = ej;
        s.x[j] = xj;
        s.u[j] = data.interp_u(xj);
        s.v[j] = 2.0 * std::atan(data.interp_ux(xj));
    }
    return s;
}

EtaDerivs rhs_eta(const EtaState& state, const GchParams& params,
                  KernelWorkspace& ws) {
    const int n = state.n();
    const double s_w = std::exp(2.0 * params.lambda * state.t);
    const double a = params.alpha, lam = params.lambda;

    // trapezoid node weights on the (generally nonuniform) advected grid
    ws.w.resize(n);
    ws.w[0] = 0.5 * (state.eta[1] - state.eta[0]);
    ws.w[n - 1] = 0.5 * (state.eta[n - 1] - state.eta[n - 2]);
    for (int j = 1; j + 1 < n; ++j)
        ws.w[j] = 0.5 * (state.eta[j + 1] - state.eta[j - 1]);

    // metric factor cos^2/(cos^2 + e^{2 lambda t} sin^2), density 1/(...)
    ws.c.resize(n);
    ws.f1.resize(n);
    ws.f2.resize(n);
    std::vector<double> met(n), g(n);
    for (int j = 0; j < n; ++j) {
        double ch = std::cos(0.5 * state.v[j]), sh = std::sin(0.5 * state.v[j]);
        double c2 = ch * ch, s2 = sh * sh;
        double denom = c2 + s_w * s2;
        double dens = 1.0 / denom;
        met[j] = c2 * dens;
        ws.f1[j] = dens * (params.h(state.u[j]) * c2 + 0.5 * a * s2);
        ws.f2[j] = params.k * dens * state.u[j] * c2;
    }
    ws.c[0] = 0.0;
    for (int j = 1; j < n; ++j)
        ws.c[j] = ws.c[j - 1] + 0.5 * (state.eta[j] - state.eta[j - 1]) *
                                    (met[j] + met[j - 1]);

    std::vector<double> P1, dxP1, P2, dxP2;
    exp_kernel_scan(ws.c, ws.w, ws.f1, ws.fwd, ws.bwd, P1, dxP1);
    exp_kernel_scan(ws.c, ws.w, ws.f2, ws.fwd, ws.bwd, P2, dxP2);

    EtaDerivs d;
    d.deta.resize(n);
    d.dx.resize(n);
    d.du.resize(n);
    d.dv.resize(n);
    // G = beta + prefix integral of [alpha + 2 e^{2 lambda t}(h-P1-dxP2)]
    //     * (1/2) sin v * density, transcribed from the x-integral
    for (int j = 0; j < n; ++j) {
        double ch = std::cos(0.5 * state.v[j]), sh = std::sin(0.5 * state.v[j]);
        double dens = 1.0 / (ch * ch + s_w * sh * sh);
        double hu = params.h(state.u[j]);
        g[j] = (a + 2.0 * s_w * (hu - P1[j] - dxP2[j])) * sh * ch * dens;
        d.dx[j] = a * state.u[j] + params.beta;
        d.du[j] = -(dxP1[j] + P2[j] + lam * state.u[j]);
        d.dv[j] = 2.0 * (hu - P1[j] - dxP2[j] + 0.5 * a) * ch * ch -
                  lam * 2.0 * sh * ch - a;
    }
    double G = params.beta;
    d.deta[0] = G;
    for (int j = 1; j < n; ++j) {
        G += 0.5 * (state.eta[j] - state.eta[j - 1]) * (g[j] + g[j - 1]);
        d.deta[j] = G;
    }
    return d;
}

namespace {
void advance(EtaState& s, const EtaDerivs& d, double dt) {
    for (int j = 0; j < s.n(); ++j) {
        s.eta[j] += dt * d.deta[j];
        s.x[j] += dt * d.dx[j];
        s.u[j] += dt * d.du[j];
        s.v[j] += dt * d.dv[j];
    }
}
}  // namespace

std::vector<EtaState> integrate_eta(const EtaState& state0,
                                    const GchParams& params, double t_end,
                                    double dt,
                                    const std::vector<double>& snapshot_times) {
    KernelWorkspace ws;
    std::vector<double> wanted = snapshot_times;
    std::sort(wanted.begin(), wanted.end());

    std::vector<EtaState> out;
    EtaState s = state0;
    std::size_t next = 0;
    auto maybe_snapshot = [&](const EtaState& cur, double half_step) {
        while (next < wanted.size() && wanted[next] <= cur.t + half_step) {
            out.push_back(cur);
            ++next;
        }
    };

    const long nsteps = std::lround(t_end / dt);
    maybe_snapshot(s, 0.5 * dt);
    for (long i = 0; i < nsteps; ++i) {
        auto k1 = rhs_eta(s, params, ws);
        EtaState s2 = s;
        s2.t += 0.5 * dt;
        advance(s2, k1, 0.5 * dt);
        auto k2 = rhs_eta(s2, params, ws);
        EtaState s3 = s;
        s3.t += 0.5 * dt;
        advance(s3, k2, 0.5 * dt);
        auto k3 = rhs_eta(s3, params, ws);
        EtaState s4 = s;
        s4.t += dt;
        advance(s4, k3, dt);
        auto k4 = rhs_eta(s4, params, ws);

        double check = 0.0;
        for (int j = 0; j < s.n(); ++j) {
            double c = dt / 6.0;
            s.eta[j] += c * (k1.deta[j] + 2 * k2.deta[j] + 2 * k3.deta[j] + k4.deta[j]);
            s.x[j] += c * (k1.dx[j] + 2 * k2.dx[j] + 2 * k3.dx[j] + k4.dx[j]);
            s.u[j] += c * (k1.du[j] + 2 * k2.du[j] + 2 * k3.du[j] + k4.du[j]);
            s.v[j] += c * (k1.dv[j] + 2 * k2.dv[j] + 2 * k3.dv[j] + k4.dv[j]);
            check += s.eta[j] + s.x[j] + s.u[j] + s.v[j];
        }
        s.t += dt;
        if (!std::isfinite(check))
            throw NumericalBlowup("non-finite eta state at t = " +
                                  std::to_string(s.t));
        maybe_snapshot(s, i + 1 == nsteps ? 1e300 : 0.5 * dt);
    }
    if (out.empty() || out.back().t != s.t) out.push_back(s);
    return out;
}

EulerianField reconstruct_eta(const EtaState& state, double lambda) {
    EulerianField f;
    f.t = state.t;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double weight = std::exp(2.0 * lambda * state.t);
    double xprev = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < state.n(); ++j) {
        double xj = state.x[j];
        if (xj <= xprev) continue;
        double c2 = std::cos(0.5 * state.v[j]);
        c2 *= c2;
        f.x.push_back(xj);
        f.u.push_back(state.u[j]);
        if (c2 > kEpsBreak) {
            double ux = std::tan(0.5 * state.v[j]);
            f.ux.push_back(ux);
            f.energy_density.push_back(weight * ux * ux);
        } else {
            f.ux.push_back(nan);
            f.energy_density.push_back(nan);
        }
        xprev = xj;
    }
    return f;
}

}  // namespace gch
