#ifndef FRACSTOKES_OPTIMIZER_HPP
#define FRACSTOKES_OPTIMIZER_HPP

#include <utility>

#include "fracstokes/types.hpp"

/// Calibration of the profile exponent n by minimizing the L2 norm of the
/// governing-equation residual over the penetration layer,
///
///   E(n; t) = integral_0^delta [ du/dt - (nu + p j_beta/t^beta) d2u/dy2 ]^2 dy,
///
/// where u is the approximate profile, du/dt uses the analytic d(delta)/dt
/// and the fractional term uses the same j_beta/t^beta reduction as the
/// integral balance itself (the residual measures the scheme's
/// self-consistency). The analytic small-time limit gives the closed form
/// n = 1/sqrt(2 D0).

namespace fracstokes::optimizer {

/// One residual evaluation.
struct ResidualReport {
    double n;
    double residual_l2;    // integral of the squared residual over [0, delta]
    int quadrature_nodes;
    double t_eval;
};

enum class ExponentMethod { ClosedForm, NumericScan };

struct ExponentResult {
    double n_opt;
    ExponentMethod method;
    double D0_at_eval;
    /// ClosedForm only: n_opt <= 1 falls below the profile's n > 1
    /// validity floor (the value is still returned).
    bool below_validity_floor = false;
    /// NumericScan only: the minimum sits at a bracket endpoint, i.e. no
    /// interior minimum was found in the bracket.
    bool at_bracket_edge = false;
};

/// Squared-residual L2 norm over [0, delta] by Gauss-Legendre quadrature
/// under the substitution y = delta(1 - z^2), which regularizes the
/// integrable front singularity for 1.5 < n < 2.
///
/// Preconditions: n > 1.5 (the squared (1-y/delta)^(2n-4) term is
/// non-integrable at the front for n <= 1.5 -> std::domain_error),
/// nodes >= 16, t > 0 via FlowState.
ResidualReport residual_l2(const FluidParameters& params, const FlowState& state,
                           double n, int nodes = 64);

/// Closed-form optimum n = 1/(sqrt(2) sqrt(D0)) from the small-time limit
/// of the residual. Throws std::domain_error for D0 <= 0: the Newtonian
/// case has no finite closed-form optimum (use optimize_n).
ExponentResult optimal_n_closed(double D0);

/// Golden-section search of residual_l2 over the bracket.
/// Preconditions: 1.5 < n_lo < n_hi <= 10, tol >= 1e-6.
ExponentResult optimize_n(const FluidParameters& params, const FlowState& state,
                          std::pair<double, double> bracket = {1.6, 5.0},
                          double tol = 1e-6, int nodes = 64);

}  // namespace fracstokes::optimizer

#endif  // FRACSTOKES_OPTIMIZER_HPP
