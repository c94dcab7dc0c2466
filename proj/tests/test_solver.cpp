#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gch/errors.hpp"
#include "gch/solver.hpp"

using namespace gch;

namespace {
GchParams pure_damping(double lambda) {
    GchParams p;
    p.alpha = 0.0;
    p.beta = 0.0;
    p.k = 0.0;
    p.lambda = lambda;
    p.h = NonlinearitySpec::polynomial({});
    return p;
}
}  // namespace

TEST_CASE("zero state has zero derivatives") {
    GchParams p = make_preset("ch");
    LagrangianState s =
        forward_transform(initial_zero(10.0, 512), GridSpec{256, 10.0});
    KernelWorkspace ws;
    Derivatives d = rhs(s, p, ws);
    for (int j = 0; j < s.n(); ++j) {
        CHECK(d.du[j] == 0.0);
        CHECK(d.dv[j] == 0.0);
        CHECK(d.dxi[j] == 0.0);
        CHECK(d.dx[j] == 0.0);
    }
}

TEST_CASE("right-hand side against an independent recomputation") {
    GchParams p = make_preset("ch-forced", {{"k", 0.4}});
    p.lambda = 0.2;
    p.beta = 0.1;
    LagrangianState s = forward_transform(
        initial_gaussian(0.3, 1.0, 0.5, 20.0, 8192), GridSpec{700, 20.0});
    KernelWorkspace ws;
    Derivatives d = rhs(s, p, ws);
    SourceTerms st = compute_sources(s, p, ws);
    for (int j = 0; j < s.n(); j += 13) {
        double ch = std::cos(0.5 * s.v[j]), sh = std::sin(0.5 * s.v[j]);
        double c2 = ch * ch, s2 = sh * sh, sv = std::sin(s.v[j]);
        double hu = p.h(s.u[j]);
        double du = -st.dxP1[j] - st.P2[j] - p.lambda * s.u[j];
        double dv = -p.alpha * s2 + 2.0 * hu * c2 -
                    2.0 * (st.P1[j] + st.dxP2[j]) * c2 - p.lambda * sv;
        double dxi = s.xi[j] *
                         (0.5 * p.alpha + hu - st.P1[j] - st.dxP2[j]) * sv -
                     2.0 * p.lambda * s.xi[j] * s2;
        double dx = p.alpha * s.u[j] + p.beta;
        CHECK(d.du[j] == doctest::Approx(du).epsilon(1e-13));
        CHECK(d.dv[j] == doctest::Approx(dv).epsilon(1e-13));
        CHECK(d.dxi[j] == doctest::Approx(dxi).epsilon(1e-13));
        CHECK(d.dx[j] == doctest::Approx(dx).epsilon(1e-13));
    }
}

TEST_CASE("pure damping integrates to the closed-form solution") {
    // alpha = beta = k = 0, h = 0: the system decouples per node,
    //   u(T) = u0 e^{-lT},  tan(v/2) = tan(v0/2) e^{-lT},
    //   xi(T) = xi0 (1 + m^2) / (1 + tan^2(v0/2)),  m = tan(v0/2) e^{-lT}.
    double l = 0.4;
    GchParams p = pure_damping(l);
    LagrangianState s0 = forward_transform(
        initial_gaussian(0.5, 1.0, 0.0, 15.0, 8192), GridSpec{512, 15.0});
    auto snaps = integrate(s0, p, 1.0, 1e-3, {});
    const auto& s = snaps.back().state;
    for (int j = 0; j < s.n(); j += 7) {
        double t0 = std::tan(0.5 * s0.v[j]);
        double m = t0 * std::exp(-l * s.T);
        CHECK(s.u[j] ==
              doctest::Approx(s0.u[j] * std::exp(-l * s.T)).epsilon(1e-9));
        CHECK(std::tan(0.5 * s.v[j]) == doctest::Approx(m).epsilon(1e-9));
        CHECK(s.xi[j] ==
              doctest::Approx((1.0 + m * m) / (1.0 + t0 * t0)).epsilon(1e-9));
        CHECK(s.x[j] == doctest::Approx(s0.x[j]).epsilon(1e-12));
    }
}

TEST_CASE("time stepping is fourth-order accurate") {
    GchParams p = make_preset("ch");
    p.lambda = 0.1;
    LagrangianState s0 = forward_transform(
        initial_gaussian(0.3, 1.0, 0.0, 15.0, 4096), GridSpec{256, 15.0});
    auto run = [&](double dt) {
        return integrate(s0, p, 0.5, dt, {}).back().state;
    };
    LagrangianState ref = run(0.003125);
    auto err = [&](const LagrangianState& s) {
        double e = 0.0;
        for (int j = 0; j < s.n(); ++j)
            e = std::max({e, std::abs(s.u[j] - ref.u[j]),
                          std::abs(s.v[j] - ref.v[j]),
                          std::abs(s.xi[j] - ref.xi[j])});
        return e;
    };
    double e1 = err(run(0.05)), e2 = err(run(0.025));
    CHECK(e2 < e1 / 12.0);  // ~16x for a 4th-order scheme
}

TEST_CASE("energy report fields") {
    GchParams p = make_preset("ch-dissipative", {{"lambda", 0.3}});
    p.k = 0.5;
    LagrangianState s0 = forward_transform(
        initial_gaussian(0.25, 1.0, 0.0, 15.0, 4096), GridSpec{1024, 15.0});
    double E0 = energy(s0, p, 0.0).E;
    EnergyReport r = energy(s0, p, E0);
    CHECK(r.E == doctest::Approx(E0));
    CHECK(r.E_bound == doctest::Approx(E0));  // T = 0
    CHECK(r.sup_u == doctest::Approx(0.25).epsilon(1e-3));

    // dE/dT from the report matches a centered difference of E(T)
    auto snaps = integrate(s0, p, 0.02, 1e-3, {0.0, 0.01, 0.02});
    REQUIRE(snaps.size() >= 3);
    double dE =
        (snaps[2].report.E - snaps[0].report.E) /
        (snaps[2].report.T - snaps[0].report.T);
    CHECK(snaps[1].report.dE_dT_analytic ==
          doctest::Approx(dE).epsilon(1e-4));
}

TEST_CASE("sup|u| stays within sqrt(E) and E within the exponential bound") {
    GchParams p = make_preset("ch-forced", {{"k", 0.5}});
    p.lambda = 0.3;
    LagrangianState s0 = forward_transform(
        initial_gaussian(0.25, 1.0, 0.0, 15.0, 4096), GridSpec{1024, 15.0});
    double E0 = energy(s0, p, 0.0).E;
    for (const auto& s : integrate(s0, p, 1.0, 1e-3, {0.25, 0.5, 0.75})) {
        CHECK(s.report.sup_u <= std::sqrt(s.report.E) + 1e-12);
        CHECK(s.report.E <= s.report.E_bound * (1.0 + 1e-6));
    }
}

TEST_CASE("step-size rule is positive and shrinks with energy") {
    GchParams p = make_preset("ch");
    double d1 = suggest_dt(p, 0.1, 1.0), d2 = suggest_dt(p, 10.0, 1.0);
    CHECK(d1 > 0.0);
    CHECK(d2 > 0.0);
    CHECK(d2 <= d1);
}

TEST_CASE("snapshots are emitted at requested times plus the final state") {
    GchParams p = make_preset("ch");
    LagrangianState s0 = forward_transform(
        initial_gaussian(0.2, 1.0, 0.0, 15.0, 2048), GridSpec{256, 15.0});
    auto snaps = integrate(s0, p, 0.5, 0.01, {0.0, 0.2, 0.4});
    REQUIRE(snaps.size() == 4);
    CHECK(snaps[0].state.T == doctest::Approx(0.0));
    CHECK(snaps[1].state.T == doctest::Approx(0.2).epsilon(0.05));
    CHECK(snaps[2].state.T == doctest::Approx(0.4).epsilon(0.05));
    CHECK(snaps[3].state.T == doctest::Approx(0.5));
}

TEST_CASE("non-finite states are rejected") {
    GchParams p = make_preset("ch");
    LagrangianState s0 = forward_transform(
        initial_gaussian(0.2, 1.0, 0.0, 15.0, 2048), GridSpec{256, 15.0});
    s0.u[100] = std::nan("");
    KernelWorkspace ws;
    CHECK_THROWS_AS((void)step_rk4(s0, p, 0.01, ws), NumericalBlowup);
}
