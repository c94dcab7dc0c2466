#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gch/errors.hpp"
#include "gch/model.hpp"

using namespace gch;

TEST_CASE("polynomial evaluation matches a direct power sum") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> c(1 + trial % 4);
        for (auto& ci : c) ci = U(rng);
        NonlinearitySpec h = NonlinearitySpec::polynomial(c);
        double u = 2.0 * U(rng);
        double direct = 0.0;
        for (std::size_t p = 0; p < c.size(); ++p)
            direct += c[p] * std::pow(u, double(p + 1));
        CHECK(h(u) == doctest::Approx(direct).epsilon(1e-13));
    }
    CHECK(NonlinearitySpec::quadratic()(0.0) == 0.0);
    CHECK(NonlinearitySpec::polynomial({1.0, -2.0, 3.0})(0.0) == 0.0);
}

TEST_CASE("Lipschitz bound on closed forms") {
    NonlinearitySpec sq = NonlinearitySpec::quadratic();
    CHECK(sq.lipschitz_bound(0.0) == 0.0);
    CHECK(sq.lipschitz_bound(3.0) == doctest::Approx(6.0));
    NonlinearitySpec cubic = NonlinearitySpec::polynomial({0.0, 1.0, 1.0});
    CHECK(cubic.lipschitz_bound(2.0) == doctest::Approx(16.0));
}

TEST_CASE("Lipschitz bound actually dominates finite differences") {
    NonlinearitySpec h = NonlinearitySpec::polynomial({0.5, -1.0, 0.25});
    double M = 1.5, L = h.lipschitz_bound(M);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-M, M);
    for (int i = 0; i < 500; ++i) {
        double a = U(rng), b = U(rng);
        CHECK(std::abs(h(a) - h(b)) <= L * std::abs(a - b) + 1e-14);
    }
}

TEST_CASE("presets") {
    GchParams ch = make_preset("ch");
    CHECK(ch.alpha == 1.0);
    CHECK(ch.beta == 0.0);
    CHECK(ch.k == 0.0);
    CHECK(ch.lambda == 0.0);
    CHECK(ch.h(0.7) == doctest::Approx(0.49));

    CHECK(make_preset("ch-dissipative", {{"lambda", 0.3}}).lambda == 0.3);
    CHECK(make_preset("ch-forced", {{"k", 0.5}}).k == 0.5);

    GchParams rch = make_preset(
        "rch", {{"c", 2.0}, {"beta0", 1.0}, {"beta", 2.0},
                {"omega1", 3.0}, {"omega2", 4.0}, {"a", 1.0}});
    CHECK(rch.beta == doctest::Approx(0.5));
    double u = 0.3;
    double expect = (2.0 - 0.5) * u + u * u + u * u * u + u * u * u * u;
    CHECK(rch.h(u) == doctest::Approx(expect));

    CHECK_THROWS_AS((void)make_preset("nope"), UnknownPreset);
}

TEST_CASE("sampled initial data is self-consistent") {
    for (auto data : {initial_gaussian(0.25, 1.0, 0.0, 20.0, 2048),
                      initial_peakon(1.0, 0.0, 25.0, 4096),
                      initial_steep(2.0, 20.0, 2048),
                      initial_zero(20.0, 64)}) {
        CHECK_NOTHROW(data.validate());
        for (std::size_t i = 1; i < data.x.size(); ++i)
            CHECK(data.x[i] > data.x[i - 1]);
    }
}

TEST_CASE("peakon H1 norm matches the closed form") {
    // u = c e^{-|x|}: int u^2 = int u_x^2 = c^2, so ||u||_{H1} = c sqrt(2)
    InitialData d = initial_peakon(1.5, 0.0, 30.0, 60001);
    CHECK(d.h1_norm() == doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(5e-4));
}

TEST_CASE("interpolation reproduces nodes and midpoints") {
    InitialData d = initial_gaussian(1.0, 1.0, 0.0, 10.0, 101);
    CHECK(d.interp_u(d.x[50]) == doctest::Approx(d.u0[50]));
    double mid = 0.5 * (d.x[50] + d.x[51]);
    CHECK(d.interp_u(mid) == doctest::Approx(0.5 * (d.u0[50] + d.u0[51])));
    CHECK(d.interp_ux(d.x[30]) == doctest::Approx(d.u0x[30]));
}
