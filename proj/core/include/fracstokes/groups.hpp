#ifndef FRACSTOKES_GROUPS_HPP
#define FRACSTOKES_GROUPS_HPP

#include "fracstokes/types.hpp"

/// Dimensionless groups and similarity variables of the start-up flow.
///
/// The flow is governed by two similarity variables: the Boltzmann
/// coordinate xi = y/sqrt(nu t) (viscous response) and chi = sqrt(D0)
/// with the Deborah number D0 = p/(nu t^beta) (elastic response, decays
/// in time). The dimensionless system adds eta = alpha1 U0^2 rho / mu^2
/// and the clock t* = t U0^2 / nu; the identity eta = D0 * t* * t^(beta-1)
/// ties the two descriptions together.

namespace fracstokes::groups {

/// Every group evaluated at one flow state.
struct GroupSet {
    double j_beta;   // 1/Gamma(2-beta), the integral-balance constant
    double D0;       // Deborah number p/(nu t^beta)
    double chi;      // sqrt(D0)
    double xi;       // y / sqrt(nu t)
    double eta;      // alpha1 U0^2 rho / mu^2
    double t_star;   // t U0^2 / nu
    double y_star;   // y U0 / nu
};

/// j_beta = 1/((1-beta) Gamma(1-beta)) = 1/Gamma(2-beta).
/// Throws std::domain_error at beta <= 0 or beta >= 1.
double j_beta(double beta);
double j_beta(FractionalOrder beta);

/// Deborah number D0 = p/(nu t^beta); zero iff the fluid is Newtonian.
double deborah_number(const FluidParameters& params, const FlowState& state);

/// The Elasticity number of the source analysis is dimensionally
/// consistent only when identified with D0 through the fractional length
/// scales L_p = sqrt(p) and l_beta = sqrt(nu t^beta); this alias makes the
/// identification explicit rather than inventing a second quantity.
double elasticity_number(const FluidParameters& params, const FlowState& state);

/// All groups at once. The GroupSet invariants (chi^2 = D0 and
/// eta = D0 * t* * t^(beta-1)) hold to round-off.
GroupSet similarity(const FluidParameters& params, const FlowState& state);

}  // namespace fracstokes::groups

#endif  // FRACSTOKES_GROUPS_HPP
