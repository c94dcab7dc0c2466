#include "gch/model.hpp"

#include <algorithm>
#include <cmath>

#include "gch/errors.hpp"

namespace gch {

NonlinearitySpec NonlinearitySpec::polynomial(std::vector<double> c) {
    return NonlinearitySpec{std::move(c)};
}

NonlinearitySpec NonlinearitySpec::quadratic() { return polynomial({0.0, 1.0}); }

double NonlinearitySpec::operator()(double u) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
    return acc * u;
}

double NonlinearitySpec::lipschitz_bound(double M) const {
    double L = 0.0, Mp = 1.0;  // Mp = M^{p-1}
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        L += std::abs(coeffs[i]) * double(i + 1) * Mp;
        Mp *= M;
    }
    return L;
}

namespace {
double arg_or(const std::map<std::string, double>& args, const std::string& key,
              double fallback) {
    auto it = args.find(key);
    return it == args.end() ? fallback : it->second;
}
}  // namespace

GchParams make_preset(const std::string& name,
                      const std::map<std::string, double>& args) {
    GchParams p;  // defaults are the conservative CH values
    if (name == "ch") {
        return p;
    } else if (name == "ch-dissipative") {
        p.lambda = arg_or(args, "lambda", 0.5);
        return p;
    } else if (name == "ch-forced") {
        p.k = arg_or(args, "k", 1.0);
        return p;
    } else if (name == "rch") {
        double c = arg_or(args, "c", 1.0);
        double beta0 = arg_or(args, "beta0", 1.0);
        double beta = arg_or(args, "beta", 1.0);
        double omega1 = arg_or(args, "omega1", 0.0);
        double omega2 = arg_or(args, "omega2", 0.0);
        double a = arg_or(args, "a", 1.0);
        p.beta = beta0 / beta;
        p.h = NonlinearitySpec::polynomial(
            {c - beta0 / beta, 1.0, omega1 / (3.0 * a * a),
             omega2 / (4.0 * a * a * a)});
        return p;
    }
    throw UnknownPreset(name);
}

void InitialData::validate() const {
    if (x.size() < 2 || u0.size() != x.size() || u0x.size() != x.size())
        throw CorruptData("inconsistent array lengths");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw CorruptData("x samples not increasing");
    // absolute continuity: u0 must be the cumulative integral of u0x
    double acc = u0.front(), maxdef = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        acc += 0.5 * (u0x[i] + u0x[i - 1]) * (x[i] - x[i - 1]);
        maxdef = std::max(maxdef, std::abs(acc - u0[i]));
    }
    double h = x[1] - x[0];
    if (maxdef > 10.0 * h * h * double(x.size()))
        throw CorruptData("u0 is not the cumulative integral of u0x");
}

double InitialData::h1_norm() const {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        double dx = x[i] - x[i - 1];
        s += 0.5 * dx * (u0[i] * u0[i] + u0[i - 1] * u0[i - 1]);
        s += 0.5 * dx * (u0x[i] * u0x[i] + u0x[i - 1] * u0x[i - 1]);
    }
    return std::sqrt(s);
}

namespace {
double interp(const std::vector<double>& xs, const std::vector<double>& ys,
              double xq) {
    if (xq <= xs.front()) return ys.front();
    if (xq >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), xq);
    std::size_t i = std::size_t(it - xs.begin());
    double t = (xq - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}
}  // namespace

double InitialData::interp_u(double xq) const { return interp(x, u0, xq); }
double InitialData::interp_ux(double xq) const { return interp(x, u0x, xq); }

namespace {
InitialData sampled(double span, int n, auto&& f, auto&& fx) {
    InitialData d;
    d.x.resize(n);
    d.u0.resize(n);
    d.u0x.resize(n);
    for (int i = 0; i < n; ++i) {
        double xi = -span + 2.0 * span * double(i) / double(n - 1);
        d.x[i] = xi;
        d.u0[i] = f(xi);
        d.u0x[i] = fx(xi);
    }
    return d;
}
}  // namespace

InitialData initial_zero(double span, int n) {
    return sampled(span, n, [](double) { return 0.0; },
                   [](double) { return 0.0; });
}

InitialData initial_gaussian(double amp, double width, double center,
                             double span, int n) {
    auto f = [=](double x) {
        double s = (x - center) / width;
        return amp * std::exp(-0.5 * s * s);
    };
    auto fx = [=](double x) {
        double s = (x - center) / width;
        return -amp * s / width * std::exp(-0.5 * s * s);
    };
    return sampled(span, n, f, fx);
}

InitialData initial_peakon(double c, double center, double span, int n) {
    auto f = [=](double x) { return c * std::exp(-std::abs(x - center)); };
    auto fx = [=](double x) {
        double s = x - center;
        return s == 0.0 ? 0.0 : -c * (s > 0 ? 1.0 : -1.0) * std::exp(-std::abs(s));
    };
    return sampled(span, n, f, fx);
}

InitialData initial_steep(double amp, double span, int n) {
    auto f = [=](double x) { return -amp * x * std::exp(-x * x); };
    auto fx = [=](double x) {
        return -amp * (1.0 - 2.0 * x * x) * std::exp(-x * x);
    };
    return sampled(span, n, f, fx);
}

}  // namespace gch
