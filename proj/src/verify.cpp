#include "gch/verify.hpp"

#include <algorithm>
#include <cmath>

#include "gch/errors.hpp"
#include "gch/nonlocal.hpp"

namespace gch {

namespace {
double bump(double s) {
    double q = 1.0 - s * s;
    return q > 0.0 ? q * q * q : 0.0;
}
double bump_d(double s) {
    double q = 1.0 - s * s;
    return q > 0.0 ? -6.0 * s * q * q : 0.0;
}
double tent(double s) { return std::abs(s) < 1.0 ? 1.0 - std::abs(s) : 0.0; }
double tent_d(double s) {
    if (std::abs(s) >= 1.0 || s == 0.0) return 0.0;
    return s > 0.0 ? -1.0 : 1.0;
}
}  // namespace

double TestFunction::value(double t, double x) const {
    double st = (t - t0) / rt, sx = (x - x0) / rx;
    return amp * (kind == Kind::SmoothBump ? bump(st) * bump(sx)
                                           : tent(st) * tent(sx));
}
double TestFunction::dt(double t, double x) const {
    double st = (t - t0) / rt, sx = (x - x0) / rx;
    return amp * (kind == Kind::SmoothBump ? bump_d(st) / rt * bump(sx)
                                           : tent_d(st) / rt * tent(sx));
}
double TestFunction::dx(double t, double x) const {
    double st = (t - t0) / rt, sx = (x - x0) / rx;
    return amp * (kind == Kind::SmoothBump ? bump(st) * bump_d(sx) / rx
                                           : tent(st) * tent_d(sx) / rx);
}

namespace {
void check_window(const Trajectory& traj, const TestFunction& phi) {
    if (traj.snaps.empty()) throw MissingArtifacts("empty trajectory");
    if (std::abs(traj.snaps.front().state.T) > 1e-12)
        throw MissingArtifacts("trajectory must start at T = 0");
    double t_hi = traj.snaps.back().state.T;
    if (phi.t0 + phi.rt > t_hi + 1e-12)
        throw WindowTooSmall("test function support exceeds time window");
    const auto& s0 = traj.snaps.front().state;
    if (phi.x0 - phi.rx < s0.x.front() || phi.x0 + phi.rx > s0.x.back())
        throw WindowTooSmall("test function support exceeds space window");
}

// Trapezoid-in-T of per-snapshot Y-integrals S[i].
double time_trapezoid(const Trajectory& traj, const std::vector<double>& S) {
    double acc = 0.0;
    for (std::size_t i = 1; i < S.size(); ++i)
        acc += 0.5 * (traj.snaps[i].state.T - traj.snaps[i - 1].state.T) *
               (S[i] + S[i - 1]);
    return acc;
}
}  // namespace

double weak_form_residual_signed(const Trajectory& traj, const TestFunction& phi) {
    check_window(traj, phi);
    KernelWorkspace ws;
    std::vector<double> S(traj.snaps.size(), 0.0);
    for (std::size_t i = 0; i < traj.snaps.size(); ++i) {
        const auto& s = traj.snaps[i].state;
        SourceTerms st = compute_sources(s, traj.params, ws);
        double acc = 0.0;
        for (int j = 0; j < s.n(); ++j) {
            double ch = std::cos(0.5 * s.v[j]), sh = std::sin(0.5 * s.v[j]);
            double c2 = ch * ch, s2 = sh * sh, sv = 2.0 * sh * ch;
            double uY = 0.5 * s.xi[j] * sv;           // u_x dx -> (1/2) xi sin v dY
            double jac = s.xi[j] * c2;                // dx -> xi cos^2 dY
            double pv = phi.value(s.T, s.x[j]);
            double pt = phi.dt(s.T, s.x[j]);
            double px = phi.dx(s.T, s.x[j]);
            double speed = traj.params.alpha * s.u[j] + traj.params.beta;
            double integrand =
                -uY * (pt + speed * px) +
                ((st.P1[j] + st.dxP2[j] - traj.params.h(s.u[j])) * jac -
                 0.5 * traj.params.alpha * s.xi[j] * s2 +
                 traj.params.lambda * uY) *
                    pv;
            double w = (j == 0 || j == s.n() - 1) ? 0.5 * s.dY : s.dY;
            acc += w * integrand;
        }
        S[i] = acc;
    }
    // initial-line term: int u0x phi(0,x) dx = int (1/2) xi sin v phi dY at T=0
    const auto& s0 = traj.snaps.front().state;
    double init = 0.0;
    for (int j = 0; j < s0.n(); ++j) {
        double w = (j == 0 || j == s0.n() - 1) ? 0.5 * s0.dY : s0.dY;
        init += w * 0.5 * s0.xi[j] * std::sin(s0.v[j]) * phi.value(0.0, s0.x[j]);
    }
    return time_trapezoid(traj, S) - init;
}

double weak_form_residual(const Trajectory& traj, const TestFunction& phi) {
    return std::abs(weak_form_residual_signed(traj, phi));
}

double balance_law_residual_signed(const Trajectory& traj, const TestFunction& phi,
                                   bool weighted) {
    check_window(traj, phi);
    KernelWorkspace ws;
    std::vector<double> S(traj.snaps.size(), 0.0);
    for (std::size_t i = 0; i < traj.snaps.size(); ++i) {
        const auto& s = traj.snaps[i].state;
        SourceTerms st = compute_sources(s, traj.params, ws);
        double ew = weighted ? std::exp(2.0 * traj.params.lambda * s.T) : 1.0;
        double acc = 0.0;
        for (int j = 0; j < s.n(); ++j) {
            double ch = std::cos(0.5 * s.v[j]), sh = std::sin(0.5 * s.v[j]);
            double s2 = sh * sh, sv = 2.0 * sh * ch;
            double pv = phi.value(s.T, s.x[j]);
            double pt = phi.dt(s.T, s.x[j]);
            double px = phi.dx(s.T, s.x[j]);
            double speed = traj.params.alpha * s.u[j] + traj.params.beta;
            double integrand =
                (pt + speed * px) * ew * s.xi[j] * s2 +
                2.0 * ew *
                    (traj.params.h(s.u[j]) - st.P1[j] - st.dxP2[j]) *
                    0.5 * s.xi[j] * sv * pv;
            double w = (j == 0 || j == s.n() - 1) ? 0.5 * s.dY : s.dY;
            acc += w * integrand;
        }
        S[i] = acc;
    }
    const auto& s0 = traj.snaps.front().state;
    double init = 0.0;
    for (int j = 0; j < s0.n(); ++j) {
        double sh = std::sin(0.5 * s0.v[j]);
        double w = (j == 0 || j == s0.n() - 1) ? 0.5 * s0.dY : s0.dY;
        init += w * s0.xi[j] * sh * sh * phi.value(0.0, s0.x[j]);
    }
    return time_trapezoid(traj, S) + init;
}

double balance_law_residual(const Trajectory& traj, const TestFunction& phi,
                            bool weighted) {
    return std::abs(balance_law_residual_signed(traj, phi, weighted));
}

MeasureSnapshot measure_snapshot(const LagrangianState& state, double lambda) {
    MeasureSnapshot ms;
    ms.t = state.T;
    const double ew = std::exp(2.0 * lambda * state.T);
    const int n = state.n();
    int atom_start = -1;
    double atom_mass = 0.0;
    for (int j = 0; j < n; ++j) {
        double ch = std::cos(0.5 * state.v[j]), sh = std::sin(0.5 * state.v[j]);
        double c2 = ch * ch;
        double w = (j == 0 || j == n - 1) ? 0.5 * state.dY : state.dY;
        double dens = ew * state.xi[j] * sh * sh;
        ms.total_mass += w * dens;
        if (c2 <= kEpsBreak) {
            if (atom_start < 0) {
                atom_start = j;
                atom_mass = 0.0;
            }
            atom_mass += w * dens;
        } else {
            if (atom_start >= 0) {
                ms.atoms.push_back(
                    {state.x[atom_start], state.x[j - 1], atom_mass});
                atom_start = -1;
            }
            double ux = std::tan(0.5 * state.v[j]);
            ms.x.push_back(state.x[j]);
            ms.ac_density.push_back(ew * ux * ux);
        }
    }
    if (atom_start >= 0)
        ms.atoms.push_back({state.x[atom_start], state.x[n - 1], atom_mass});
    return ms;
}

BreakingReport breaking_diagnostics(const Trajectory& traj) {
    BreakingReport rep;
    int positive = 0;
    for (const auto& snap : traj.snaps) {
        const auto& s = snap.state;
        double meas = 0.0, min_xY = 1e300;
        for (int j = 0; j < s.n(); ++j) {
            double ch = std::cos(0.5 * s.v[j]);
            double m = s.xi[j] * ch * ch;
            min_xY = std::min(min_xY, m);
            if (ch * ch < kEpsBreak) meas += s.dY;
        }
        if (meas > 0.0) ++positive;
        rep.rows.push_back({s.T, meas, min_xY});
    }
    if (!traj.snaps.empty())
        rep.breaking_time_fraction = double(positive) / double(traj.snaps.size());
    return rep;
}

RegularityReport regularity_check(const Trajectory& traj) {
    if (traj.snaps.size() < 3) throw MissingArtifacts("need >= 3 snapshots");
    RegularityReport rep;
    std::vector<EulerianField> fields;
    for (const auto& snap : traj.snaps)
        fields.push_back(reconstruct(snap.state, traj.params.lambda));

    for (const auto& f : fields) {
        const std::size_t n = f.x.size();
        for (std::size_t i = 0; i + 1 < n; i += 7) {
            for (std::size_t stride : {std::size_t(1), std::size_t(16),
                                       std::size_t(128)}) {
                std::size_t jj = i + stride;
                if (jj >= n) continue;
                double dxs = f.x[jj] - f.x[i];
                if (dxs <= 0.0) continue;
                double du = std::abs(f.u[jj] - f.u[i]);
                rep.holder_quotient =
                    std::max(rep.holder_quotient, du / std::sqrt(dxs));
                rep.lipschitz_x_quotient =
                    std::max(rep.lipschitz_x_quotient, du / dxs);
            }
        }
    }

    // L2-in-time quotient on a common grid
    double lo = fields.front().x.front(), hi = fields.front().x.back();
    for (const auto& f : fields) {
        lo = std::max(lo, f.x.front());
        hi = std::min(hi, f.x.back());
    }
    const int m = 2048;
    for (std::size_t i = 1; i < fields.size(); ++i) {
        double dt = fields[i].t - fields[i - 1].t;
        if (dt <= 0.0) continue;
        double acc = 0.0, dxq = (hi - lo) / double(m - 1);
        for (int q = 0; q < m; ++q) {
            double xq = std::min(lo + dxq * q, hi);
            double d = eval_u_at(fields[i], xq) - eval_u_at(fields[i - 1], xq);
            acc += d * d * dxq;
        }
        rep.l2_time_quotient =
            std::max(rep.l2_time_quotient, std::sqrt(acc) / dt);
    }
    return rep;
}

std::vector<DependenceRow> continuous_dependence_check(
    const InitialData& data0, const std::vector<double>& scales,
    const GchParams& params, double t_end, const GridSpec& grid, double dt) {
    auto run = [&](const InitialData& d) {
        auto snaps = integrate(forward_transform(d, grid), params, t_end, dt, {});
        return reconstruct(snaps.back().state, params.lambda);
    };
    EulerianField base = run(data0);
    double lo = base.x.front() + 1.0, hi = base.x.back() - 1.0;

    std::vector<DependenceRow> rows;
    for (double eps : scales) {
        InitialData d = data0;
        for (std::size_t i = 0; i < d.x.size(); ++i) {
            double xi = d.x[i];
            d.u0[i] += eps * std::exp(-0.5 * xi * xi);
            d.u0x[i] += -eps * xi * std::exp(-0.5 * xi * xi);
        }
        EulerianField pert = run(d);
        double dist = 0.0;
        const int m = 1024;
        for (int q = 0; q < m; ++q) {
            double xq = lo + (hi - lo) * q / double(m - 1);
            dist = std::max(dist,
                            std::abs(eval_u_at(base, xq) - eval_u_at(pert, xq)));
        }
        rows.push_back({eps, dist});
    }
    return rows;
}

std::vector<TestFunction> default_battery(double t_end, double x_half_width) {
    std::vector<TestFunction> battery;
    double rt = 0.45 * t_end;
    battery.push_back({TestFunction::Kind::SmoothBump, 0.5 * t_end, 0.0, rt,
                       0.8 * x_half_width});
    battery.push_back({TestFunction::Kind::SmoothBump, 0.5 * t_end,
                       -0.3 * x_half_width, rt, 0.5 * x_half_width});
    battery.push_back({TestFunction::Kind::SmoothBump, 0.5 * t_end,
                       0.3 * x_half_width, rt, 0.5 * x_half_width});
    battery.push_back({TestFunction::Kind::SmoothBump, 0.6 * t_end, 0.0,
                       0.35 * t_end, 0.3 * x_half_width});
    battery.push_back({TestFunction::Kind::SmoothBump, 0.4 * t_end,
                       0.1 * x_half_width, 0.3 * t_end, 0.6 * x_half_width});
    return battery;
}

}  // namespace gch
