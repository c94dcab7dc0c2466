#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gch/errors.hpp"
#include "gch/lagrangian.hpp"

using namespace gch;

TEST_CASE("label map for the peakon matches the closed form") {
    // u0 = e^{-|x|}: Y(x) = x + sign(x) (1 - e^{-2|x|}) / 2
    InitialData d = initial_peakon(1.0, 0.0, 25.0, 120001);
    GridSpec g{4096, 26.0};
    LagrangianState s = forward_transform(d, g);
    auto closed_Y = [](double x) {
        return x + (x >= 0 ? 1.0 : -1.0) * (1.0 - std::exp(-2.0 * std::abs(x))) / 2.0;
    };
    for (double xq : {-2.0, -1.0, 1.0, 2.0}) {
        // interpolate the label coordinate at x = xq and compare with Y(xq)
        int j = 0;
        while (j < s.n() - 2 && s.x[j + 1] < xq) ++j;
        double t = (xq - s.x[j]) / (s.x[j + 1] - s.x[j]);
        double Yq = s.Y(j) + t * s.dY;
        CHECK(Yq == doctest::Approx(closed_Y(xq)).epsilon(1e-3));
    }
}

TEST_CASE("initial relative density is identically one") {
    LagrangianState s =
        forward_transform(initial_gaussian(0.25, 1.0, 0.0, 20.0, 4096),
                          GridSpec{1024, 20.0});
    for (int j = 0; j < s.n(); ++j) CHECK(s.xi[j] == 1.0);
    CHECK(s.T == 0.0);
}

TEST_CASE("slope variable at time zero is 2 arctan u0x") {
    InitialData d = initial_gaussian(0.5, 1.0, 0.0, 20.0, 8192);
    LagrangianState s = forward_transform(d, GridSpec{2048, 20.0});
    for (int j = 0; j < s.n(); j += 97) {
        double ux = d.interp_ux(s.x[j]);
        CHECK(s.v[j] == doctest::Approx(2.0 * std::atan(ux)).epsilon(1e-3));
    }
}

TEST_CASE("round trip: reconstruct after transform reproduces the data") {
    InitialData d = initial_gaussian(0.25, 1.0, 0.0, 20.0, 16384);
    LagrangianState s = forward_transform(d, GridSpec{4096, 20.0});
    EulerianField f = reconstruct(s, 0.0);
    double max_u = 0.0, max_ux = 0.0;
    for (double xq = -5.0; xq <= 5.0; xq += 0.1) {
        max_u = std::max(max_u, std::abs(eval_u_at(f, xq) - d.interp_u(xq)));
    }
    for (std::size_t j = 0; j < f.x.size(); ++j)
        if (std::abs(f.x[j]) < 5.0 && std::isfinite(f.ux[j]))
            max_ux = std::max(max_ux,
                              std::abs(f.ux[j] - d.interp_ux(f.x[j])));
    CHECK(max_u < 1e-5);
    CHECK(max_ux < 1e-3);
}

TEST_CASE("zero data transforms to the identity chart") {
    LagrangianState s =
        forward_transform(initial_zero(20.0, 4096), GridSpec{512, 20.0});
    for (int j = 0; j < s.n(); ++j) {
        CHECK(s.u[j] == 0.0);
        CHECK(s.v[j] == 0.0);
        CHECK(s.x[j] == doctest::Approx(s.Y(j)).epsilon(1e-12));
    }
}

TEST_CASE("too-small label span is rejected") {
    InitialData d = initial_gaussian(1.0, 1.0, 0.0, 20.0, 4096);
    CHECK_THROWS_AS((void)forward_transform(d, GridSpec{256, 2.0}),
                    GridTooSmall);
}

TEST_CASE("field energy of the Gaussian matches quadrature") {
    // u = a e^{-x^2/2}: int u^2 = a^2 sqrt(pi), int u_x^2 = a^2 sqrt(pi)/2
    double a = 0.25;
    InitialData d = initial_gaussian(a, 1.0, 0.0, 20.0, 32768);
    EulerianField f = reconstruct(forward_transform(d, GridSpec{8192, 20.0}), 0.0);
    double expect = a * a * std::sqrt(M_PI) * 1.5;
    CHECK(field_energy(f) == doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("evaluation outside the computed window is rejected") {
    EulerianField f = reconstruct(
        forward_transform(initial_zero(10.0, 512), GridSpec{128, 10.0}), 0.0);
    CHECK_THROWS_AS((void)eval_u_at(f, 1e6), OutOfDomain);
}
