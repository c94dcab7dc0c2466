#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gch/lagrangian.hpp"
#include "gch/model.hpp"
#include "gch/nonlocal.hpp"

using namespace gch;

namespace {

// O(n^2) reference: P[j] = 1/2 sum_i w_i e^{-|c_j - c_i|} f_i and the
// split-sign derivative D[j] = 1/2 (sum_{i>j} - sum_{i<j}) w_i e^{-|..|} f_i.
void brute_force(const std::vector<double>& c, const std::vector<double>& w,
                 const std::vector<double>& f, std::vector<double>& P,
                 std::vector<double>& D) {
    const std::size_t n = c.size();
    P.assign(n, 0.0);
    D.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            double ker = std::exp(-std::abs(c[j] - c[i])) * w[i] * f[i];
            P[j] += 0.5 * ker;
            if (i > j) D[j] += 0.5 * ker;
            if (i < j) D[j] -= 0.5 * ker;
        }
}

LagrangianState random_state(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    LagrangianState s;
    s.y0 = -double(n) / 64.0;
    s.dY = 2.0 * std::abs(s.y0) / (n - 1);
    s.u.resize(n);
    s.v.resize(n);
    s.xi.resize(n);
    s.x.resize(n);
    for (int j = 0; j < n; ++j) {
        s.u[j] = 0.5 * U(rng);
        s.v[j] = 2.5 * U(rng);
        s.xi[j] = 0.5 + 0.4 * U(rng) + 0.2;  // positive
        s.x[j] = s.Y(j);
    }
    return s;
}

}  // namespace

TEST_CASE("scan equals brute-force double sum on random inputs") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int n = 3; n <= 64; ++n) {
        std::vector<double> c(n), w(n), f(n);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            acc += 0.1 + U(rng);
            c[j] = acc;
            w[j] = 0.01 + U(rng);
            f[j] = 2.0 * U(rng) - 1.0;
        }
        std::vector<double> fwd, bwd, P(n), D(n), Pref, Dref;
        exp_kernel_scan(c, w, f, fwd, bwd, P, D);
        brute_force(c, w, f, Pref, Dref);
        for (int j = 0; j < n; ++j) {
            CHECK(P[j] == doctest::Approx(Pref[j]).epsilon(1e-12));
            CHECK(D[j] == doctest::Approx(Dref[j]).epsilon(1e-12));
        }
    }
}

TEST_CASE("kernel output is symmetric for symmetric input") {
    const int n = 65;
    std::vector<double> c(n), w(n, 0.1), f(n);
    for (int j = 0; j < n; ++j) {
        c[j] = 0.1 * j;
        f[j] = std::exp(-0.05 * (j - 32) * (j - 32));
    }
    std::vector<double> fwd, bwd, P(n), D(n);
    exp_kernel_scan(c, w, f, fwd, bwd, P, D);
    for (int j = 0; j < n; ++j) {
        CHECK(P[j] == doctest::Approx(P[n - 1 - j]).epsilon(1e-12));
        CHECK(D[j] == doctest::Approx(-D[n - 1 - j]).epsilon(1e-11));
    }
}

TEST_CASE("positive integrand gives positive P") {
    const int n = 33;
    std::vector<double> c(n), w(n, 0.2), f(n, 1.0);
    for (int j = 0; j < n; ++j) c[j] = 0.2 * j;
    std::vector<double> fwd, bwd, P(n), D(n);
    exp_kernel_scan(c, w, f, fwd, bwd, P, D);
    for (int j = 0; j < n; ++j) CHECK(P[j] > 0.0);
}

TEST_CASE("cumulative metric of the identity chart is Y - y0") {
    LagrangianState s;
    const int n = 101;
    s.y0 = -5.0;
    s.dY = 0.1;
    s.u.assign(n, 0.0);
    s.v.assign(n, 0.0);
    s.xi.assign(n, 1.0);
    s.x.resize(n);
    for (int j = 0; j < n; ++j) s.x[j] = s.Y(j);
    KernelWorkspace ws;
    cumulative_metric(s, ws);
    for (int j = 0; j < n; ++j)
        CHECK(ws.c[j] == doctest::Approx(s.Y(j) - s.y0).epsilon(1e-13));
}

TEST_CASE("source terms on the zero state vanish") {
    GchParams p = make_preset("ch");
    LagrangianState s =
        forward_transform(initial_zero(10.0, 256), GridSpec{128, 10.0});
    KernelWorkspace ws;
    SourceTerms st = compute_sources(s, p, ws);
    for (int j = 0; j < s.n(); ++j) {
        CHECK(st.P1[j] == 0.0);
        CHECK(st.dxP1[j] == 0.0);
        CHECK(st.P2[j] == 0.0);
        CHECK(st.dxP2[j] == 0.0);
    }
}

TEST_CASE("source terms against brute force on random states") {
    std::mt19937 rng(99);
    GchParams p = make_preset("ch-forced", {{"k", 0.5}});
    KernelWorkspace ws;
    for (int n : {17, 33, 50}) {
        LagrangianState s = random_state(rng, n);
        SourceTerms st = compute_sources(s, p, ws);

        KernelWorkspace ws2;
        cumulative_metric(s, ws2);
        std::vector<double> c = ws2.c, w(n), f1(n), f2(n);
        for (int j = 0; j < n; ++j) {
            w[j] = (j == 0 || j == n - 1) ? 0.5 * s.dY : s.dY;
            double ch = std::cos(0.5 * s.v[j]), sh = std::sin(0.5 * s.v[j]);
            f1[j] = s.xi[j] * (p.h(s.u[j]) * ch * ch + 0.5 * p.alpha * sh * sh);
            f2[j] = p.k * s.xi[j] * s.u[j] * ch * ch;
        }
        std::vector<double> P1, D1, P2, D2;
        brute_force(c, w, f1, P1, D1);
        brute_force(c, w, f2, P2, D2);
        for (int j = 0; j < n; ++j) {
            CHECK(st.P1[j] == doctest::Approx(P1[j]).epsilon(1e-11));
            CHECK(st.dxP1[j] == doctest::Approx(D1[j]).epsilon(1e-11));
            CHECK(st.P2[j] == doctest::Approx(P2[j]).epsilon(1e-11));
            CHECK(st.dxP2[j] == doctest::Approx(D2[j]).epsilon(1e-11));
        }
    }
}

TEST_CASE("a priori sup bounds on the source terms hold") {
    // ||P1||_inf <= L/2 + (L + |alpha|)/4 * C and
    // ||dxP2||_inf <= |k|/2 + |k|/4 * C with C = int xi dY, on states with
    // sup|u| <= 1 (so L = L_h(1)).
    std::mt19937 rng(3);
    GchParams p = make_preset("ch-forced", {{"k", 0.7}});
    KernelWorkspace ws;
    for (int trial = 0; trial < 20; ++trial) {
        LagrangianState s = random_state(rng, 40);
        double C = 0.0;
        for (int j = 0; j < s.n(); ++j)
            C += ((j == 0 || j == s.n() - 1) ? 0.5 : 1.0) * s.dY * s.xi[j];
        double L = p.h.lipschitz_bound(1.0);
        SourceTerms st = compute_sources(s, p, ws);
        for (int j = 0; j < s.n(); ++j) {
            CHECK(std::abs(st.P1[j]) <=
                  L / 2.0 + (L + std::abs(p.alpha)) / 4.0 * C + 1e-12);
            CHECK(std::abs(st.dxP2[j]) <=
                  std::abs(p.k) / 2.0 + std::abs(p.k) / 4.0 * C + 1e-12);
        }
    }
}
