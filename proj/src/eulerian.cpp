#include "gch/eulerian.hpp"

#include <algorithm>
#include <cmath>

#include "gch/errors.hpp"

namespace gch {

std::vector<double> helmholtz_invert(const std::vector<double>& f, double dx) {
    const int n = int(f.size());
    std::vector<double> P(n, 0.0);
    if (n < 3) return P;
    const double off = -1.0 / (dx * dx);
    const double diag = 1.0 + 2.0 / (dx * dx);
    // Thomas elimination on the interior, P[0] = P[n-1] = 0
    const int m = n - 2;
    std::vector<double> cp(m), dp(m);
    cp[0] = off / diag;
    dp[0] = f[1] / diag;
    for (int i = 1; i < m; ++i) {
        double denom = diag - off * cp[i - 1];
        cp[i] = off / denom;
        dp[i] = (f[i + 1] - off * dp[i - 1]) / denom;
    }
    P[m] = dp[m - 1];
    for (int i = m - 1; i >= 1; --i) P[i] = dp[i - 1] - cp[i - 1] * P[i + 1];
    return P;
}

std::vector<double> rhs_eulerian(const EulerianGrid& grid, const GchParams& params) {
    const int n = grid.n();
    const double dx = grid.dx;
    const double breaking_threshold = 50.0 / std::sqrt(dx);

    std::vector<double> du_c(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) du_c[i] = (grid.u[i + 1] - grid.u[i - 1]) / (2.0 * dx);
    for (double g : du_c)
        if (std::abs(g) > breaking_threshold)
            throw BreakingImminent("max |u_x| exceeds " +
                                   std::to_string(breaking_threshold));

    std::vector<double> src1(n);
    for (int i = 0; i < n; ++i)
        src1[i] = params.h(grid.u[i]) + 0.5 * params.alpha * du_c[i] * du_c[i];
    std::vector<double> P1 = helmholtz_invert(src1, dx);
    std::vector<double> P2(n, 0.0);
    if (params.k != 0.0) {
        P2 = helmholtz_invert(grid.u, dx);
        for (auto& p : P2) p *= params.k;
    }

    std::vector<double> du(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
        double speed = params.alpha * grid.u[i] + params.beta;
        double upw = speed > 0.0 ? (grid.u[i] - grid.u[i - 1]) / dx
                                 : (grid.u[i + 1] - grid.u[i]) / dx;
        double dP1 = (P1[i + 1] - P1[i - 1]) / (2.0 * dx);
        du[i] = -speed * upw - dP1 - P2[i] - params.lambda * grid.u[i];
    }
    return du;
}

EulerianGrid eulerian_from_initial(const InitialData& data, int n, double span) {
    EulerianGrid g;
    g.x0 = -span;
    g.dx = 2.0 * span / double(n - 1);
    g.t = 0.0;
    g.u.resize(n);
    for (int i = 0; i < n; ++i) g.u[i] = data.interp_u(g.x(i));
    return g;
}

std::vector<EulerianGrid> integrate_eulerian(
    const EulerianGrid& grid0, const GchParams& params, double t_end, double dt,
    const std::vector<double>& snapshot_times) {
    std::vector<double> wanted = snapshot_times;
    std::sort(wanted.begin(), wanted.end());
    std::vector<EulerianGrid> out;
    EulerianGrid g = grid0;
    std::size_t next = 0;
    auto maybe_snapshot = [&](const EulerianGrid& cur, double half_step) {
        while (next < wanted.size() && wanted[next] <= cur.t + half_step) {
            out.push_back(cur);
            ++next;
        }
    };

    const int n = g.n();
    const long nsteps = std::lround(t_end / dt);
    maybe_snapshot(g, 0.5 * dt);
    for (long s = 0; s < nsteps; ++s) {
        auto k1 = rhs_eulerian(g, params);
        EulerianGrid g2 = g;
        g2.t += 0.5 * dt;
        for (int i = 0; i < n; ++i) g2.u[i] += 0.5 * dt * k1[i];
        auto k2 = rhs_eulerian(g2, params);
        EulerianGrid g3 = g;
        g3.t += 0.5 * dt;
        for (int i = 0; i < n; ++i) g3.u[i] += 0.5 * dt * k2[i];
        auto k3 = rhs_eulerian(g3, params);
        EulerianGrid g4 = g;
        g4.t += dt;
        for (int i = 0; i < n; ++i) g4.u[i] += dt * k3[i];
        auto k4 = rhs_eulerian(g4, params);
        double check = 0.0;
        for (int i = 0; i < n; ++i) {
            g.u[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
            check += g.u[i];
        }
        g.t += dt;
        if (!std::isfinite(check))
            throw NumericalBlowup("non-finite Eulerian state at t = " +
                                  std::to_string(g.t));
        maybe_snapshot(g, s + 1 == nsteps ? 1e300 : 0.5 * dt);
    }
    if (out.empty() || out.back().t != g.t) out.push_back(g);
    return out;
}

EulerianField to_field(const EulerianGrid& grid, double lambda) {
    const int n = grid.n();
    EulerianField f;
    f.t = grid.t;
    f.x.resize(n);
    f.u = grid.u;
    f.ux.resize(n, 0.0);
    f.energy_density.resize(n, 0.0);
    const double w = std::exp(2.0 * lambda * grid.t);
    for (int i = 0; i < n; ++i) f.x[i] = grid.x(i);
    for (int i = 1; i + 1 < n; ++i)
        f.ux[i] = (grid.u[i + 1] - grid.u[i - 1]) / (2.0 * grid.dx);
    for (int i = 0; i < n; ++i) f.energy_density[i] = w * f.ux[i] * f.ux[i];
    return f;
}

}  // namespace gch
