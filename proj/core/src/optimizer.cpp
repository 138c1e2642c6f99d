#include "fracstokes/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracstokes/groups.hpp"
#include "fracstokes/minimize.hpp"
#include "fracstokes/quadrature.hpp"

namespace fracstokes::optimizer {

namespace {

// Residual r(s) = A s (1-s)^(n-1) - B (1-s)^(n-2) on s = y/delta in [0,1]:
//   A = n * delta'/delta = n^2 (n+1) c2 / delta^2,  c2 = nu + (1-beta) p j/t^beta
//   B = c n (n-1) / delta^2,                        c  = nu + p j/t^beta
// with delta^2 = 2 n (n+1) (nu t + p j t^(1-beta)).
struct ResidualTerms {
    double A;
    double B;
    double delta;
};

ResidualTerms residual_terms(const FluidParameters& params, const FlowState& state,
                             double n) {
    const double beta = state.beta.value();
    const double jb = groups::j_beta(state.beta);
    const double nu = params.nu();
    const double p = params.p();
    const double t = state.t;
    const double tb = std::pow(t, beta);

    const double c = nu + p * jb / tb;
    const double c2 = nu + (1.0 - beta) * p * jb / tb;
    const double delta2 = 2.0 * n * (n + 1.0) * (nu * t + p * jb * t / tb);
    return ResidualTerms{n * n * (n + 1.0) * c2 / delta2, c * n * (n - 1.0) / delta2,
                         std::sqrt(delta2)};
}

}  // namespace

ResidualReport residual_l2(const FluidParameters& params, const FlowState& state,
                           double n, int nodes) {
    if (!(n > 1.5)) {
        throw std::domain_error(
            "residual_l2: the squared front term (1-y/delta)^(2n-4) is "
            "non-integrable for n <= 1.5; got n = " + std::to_string(n));
    }
    if (nodes < 16) {
        throw std::invalid_argument("residual_l2: at least 16 quadrature nodes required");
    }

    const auto terms = residual_terms(params, state, n);
    const GaussLegendre rule(nodes);

    // y = delta (1 - z^2), z in [0,1]: dy = 2 delta z dz and 1 - y/delta = z^2.
    const double value = rule.integrate(
        [&](double z) {
            const double zz = z * z;
            const double s = 1.0 - zz;
            const double r = terms.A * s * std::pow(zz, n - 1.0) -
                             terms.B * std::pow(zz, n - 2.0);
            return r * r * 2.0 * terms.delta * z;
        },
        0.0, 1.0);

    return ResidualReport{n, value, nodes, state.t};
}

ExponentResult optimal_n_closed(double D0) {
    if (!(D0 > 0.0)) {
        throw std::domain_error(
            "optimal_n_closed: D0 must be > 0 (the Newtonian limit has no finite "
            "closed-form optimum; use optimize_n)");
    }
    ExponentResult r{};
    r.n_opt = 1.0 / (std::sqrt(2.0) * std::sqrt(D0));
    r.method = ExponentMethod::ClosedForm;
    r.D0_at_eval = D0;
    r.below_validity_floor = r.n_opt <= 1.0;
    return r;
}

ExponentResult optimize_n(const FluidParameters& params, const FlowState& state,
                          std::pair<double, double> bracket, double tol, int nodes) {
    const auto [lo, hi] = bracket;
    if (!(lo > 1.5 && lo < hi && hi <= 10.0)) {
        throw std::invalid_argument(
            "optimize_n: bracket must satisfy 1.5 < n_lo < n_hi <= 10");
    }
    if (!(tol >= 1e-6)) {
        throw std::invalid_argument("optimize_n: tol must be >= 1e-6");
    }

    const auto objective = [&](double n) {
        return residual_l2(params, state, n, nodes).residual_l2;
    };
    const auto min = minimize_golden_section(objective, lo, hi, tol);

    ExponentResult r{};
    r.n_opt = min.argmin;
    r.method = ExponentMethod::NumericScan;
    r.D0_at_eval = groups::deborah_number(params, state);
    r.at_bracket_edge = min.at_edge;
    return r;
}

}  // namespace fracstokes::optimizer
