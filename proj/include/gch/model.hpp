#pragma once

#include <map>
#include <string>
#include <vector>

namespace gch {

/// Polynomial nonlinearity h(u) = sum_p coeffs[p-1] * u^p. The constant term
/// is identically zero, so h(0) = 0 holds by construction.
struct NonlinearitySpec {
    std::vector<double> coeffs;  // coeffs[i] multiplies u^{i+1}

    static NonlinearitySpec polynomial(std::vector<double> c);
    static NonlinearitySpec quadratic();  // h(u) = u^2

    double operator()(double u) const;
    /// L with |h(a)-h(b)| <= L|a-b| for |a|,|b| <= M: sum_p |c_p| p M^{p-1}.
    double lipschitz_bound(double M) const;
};

struct GchParams {
    double alpha = 1.0;
    double beta = 0.0;
    double k = 0.0;
    double lambda = 0.0;
    NonlinearitySpec h = NonlinearitySpec::quadratic();
};

/// Presets: "ch", "ch-dissipative" (arg lambda), "ch-forced" (arg k),
/// "rch" (args c, beta0, beta, omega1, omega2, a).
GchParams make_preset(const std::string& name,
                      const std::map<std::string, double>& args = {});

/// Sampled initial data: piecewise-linear u0 with nodal derivative samples.
struct InitialData {
    std::vector<double> x;    // strictly increasing
    std::vector<double> u0;
    std::vector<double> u0x;

    void validate() const;  // throws CorruptData
    double h1_norm() const;
    double interp_u(double xq) const;
    double interp_ux(double xq) const;
};

InitialData initial_zero(double span, int n);
InitialData initial_gaussian(double amp, double width, double center,
                             double span, int n);
InitialData initial_peakon(double c, double center, double span, int n);
/// u0(x) = -amp * x * exp(-x^2)
InitialData initial_steep(double amp, double span, int n);

}  // namespace gch
