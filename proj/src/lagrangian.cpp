#include "gch/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gch/errors.hpp"

namespace gch {

namespace {
constexpr double kSupportTol = 1e-12;

// Monotone table lookup with linear interpolation; linear extension with unit
// slope outside (the energy density is 1 where the data has decayed).
double invert_table(const std::vector<double>& Yt, const std::vector<double>& xt,
                    double Yq) {
    if (Yq <= Yt.front()) return xt.front() + (Yq - Yt.front());
    if (Yq >= Yt.back()) return xt.back() + (Yq - Yt.back());
    auto it = std::upper_bound(Yt.begin(), Yt.end(), Yq);
    std::size_t i = std::size_t(it - Yt.begin());
    double den = Yt[i] - Yt[i - 1];
    double t = den > 0.0 ? (Yq - Yt[i - 1]) / den : 0.0;
    return xt[i - 1] + t * (xt[i] - xt[i - 1]);
}
}  // namespace

LagrangianState forward_transform(const InitialData& data, const GridSpec& grid) {
    data.validate();
    const std::size_t m = data.x.size();

    // cumulative trapezoid of 1 + u0x^2, re-based so Y(0) = 0
    std::vector<double> Yt(m);
    Yt[0] = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
        double d0 = 1.0 + data.u0x[i - 1] * data.u0x[i - 1];
        double d1 = 1.0 + data.u0x[i] * data.u0x[i];
        double inc = 0.5 * (d0 + d1) * (data.x[i] - data.x[i - 1]);
        if (!(inc > 0.0)) throw CorruptData("non-monotone cumulative map");
        Yt[i] = Yt[i - 1] + inc;
    }
    double Y_at_0 = invert_table(data.x, Yt, 0.0);  // tables swapped: x -> Y
    for (auto& y : Yt) y -= Y_at_0;

    // the grid must cover the image of the numeric support of the data
    double lo = data.x.front(), hi = data.x.back();
    for (std::size_t i = 0; i < m; ++i)
        if (std::abs(data.u0[i]) + std::abs(data.u0x[i]) > kSupportTol) {
            lo = data.x[i];
            break;
        }
    for (std::size_t i = m; i-- > 0;)
        if (std::abs(data.u0[i]) + std::abs(data.u0x[i]) > kSupportTol) {
            hi = data.x[i];
            break;
        }
    double Ylo = invert_table(data.x, Yt, lo), Yhi = invert_table(data.x, Yt, hi);
    if (Ylo < -grid.span || Yhi > grid.span)
        throw GridTooSmall("Y-grid span " + std::to_string(grid.span) +
                           " does not cover data image [" + std::to_string(Ylo) +
                           ", " + std::to_string(Yhi) + "]");

    LagrangianState s;
    s.T = 0.0;
    s.y0 = -grid.span;
    s.dY = 2.0 * grid.span / double(grid.n - 1);
    s.u.resize(grid.n);
    s.v.resize(grid.n);
    s.xi.assign(grid.n, 1.0);
    s.x.resize(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        double xj = invert_table(Yt, data.x, s.Y(j));
        s.x[j] = xj;
        s.u[j] = data.interp_u(xj);
        s.v[j] = 2.0 * std::atan(data.interp_ux(xj));
    }
    return s;
}

EulerianField reconstruct(const LagrangianState& state, double lambda) {
    const int n = state.n();
    EulerianField f;
    f.t = state.T;
    f.x.reserve(n);
    f.u.reserve(n);
    f.ux.reserve(n);
    f.energy_density.reserve(n);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double weight = std::exp(2.0 * lambda * state.T);
    double xprev = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        double xj = state.x[j];
        if (xj < xprev - 1e3 * kTolGrid * std::max(1.0, std::abs(xprev)))
            throw StateCorrupt("x(Y) decreasing beyond tolerance");
        if (xj <= xprev) continue;  // collapse flat (breaking) intervals
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

double eval_u_at(const EulerianField& field, double xq) {
    if (field.x.empty() || xq < field.x.front() || xq > field.x.back())
        throw OutOfDomain("x = " + std::to_string(xq));
    auto it = std::upper_bound(field.x.begin(), field.x.end(), xq);
    if (it == field.x.end()) return field.u.back();
    std::size_t i = std::size_t(it - field.x.begin());
    if (i == 0) return field.u.front();
    double den = field.x[i] - field.x[i - 1];
    double t = den > 0.0 ? (xq - field.x[i - 1]) / den : 1.0;
    return field.u[i - 1] + t * (field.u[i] - field.u[i - 1]);
}

double field_energy(const EulerianField& field) {
    double e = 0.0;
    for (std::size_t i = 1; i < field.x.size(); ++i) {
        double dx = field.x[i] - field.x[i - 1];
        double a = field.u[i - 1] * field.u[i - 1];
        double b = field.u[i] * field.u[i];
        if (std::isfinite(field.ux[i - 1])) a += field.ux[i - 1] * field.ux[i - 1];
        if (std::isfinite(field.ux[i])) b += field.ux[i] * field.ux[i];
        e += 0.5 * dx * (a + b);
    }
    return e;
}

}  // namespace gch
