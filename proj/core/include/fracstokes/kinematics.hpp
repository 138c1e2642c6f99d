#ifndef FRACSTOKES_KINEMATICS_HPP
#define FRACSTOKES_KINEMATICS_HPP

#include <optional>

#include "fracstokes/types.hpp"

/// Closed-form kinematics of the start-up flow: the penetration depth in
/// its three equivalent formulations, the relative depths, the velocity
/// profile (fixed and self-adaptive exponent), the wall-driven stress
/// field, and the exact Newtonian solution used for validation.
///
/// Core quantities, with j = j_beta and D0 the Deborah number:
///   delta   = sqrt(nu t) * F_n * R_beta,   F_n = sqrt(2 n (n+1)),
///   R_beta  = sqrt(1 + j*D0)
///   u/U0    = (1 - xi/(F_n R_beta))^n,     xi = y/sqrt(nu t)
/// clamped to zero beyond the front xi = F_n R_beta.

namespace fracstokes::kinematics {

/// Penetration depth in every formulation, plus the profile constants.
struct PenetrationDepth {
    double delta;       // [m]
    /// Rescaled depth delta/sqrt(p) (space measured in units of sqrt(p)).
    /// Undefined for a Newtonian fluid (p = 0).
    std::optional<double> delta_bar;
    double delta_star;  // dimensionless depth delta * U0 / nu
    double Delta;       // delta / (sqrt(nu t) sqrt(2n(n+1))) = sqrt(1 + j D0)
    double Delta1;      // rescaled-space variant; numerically equal to Delta
    double Delta2;      // dimensionless variant sqrt(1 + eta*j/(t*)^beta)
    double F_n;         // sqrt(2 n (n+1))
    double R_beta;      // sqrt(1 + j D0)
};

/// Velocity ratio and stress at one point of the field.
struct FieldSample {
    double u_over_U0;  // in [0, 1]; exactly 0 for y >= delta
    double stress;     // signed, units set by the formulation
};

/// sqrt(2 n (n+1)), the Newtonian front constant of the profile.
double profile_front_constant(double n);

/// All depth forms at once. For the self-adaptive policy the depth uses
/// n0 (see ProfileSpec::depth_exponent). Throws on t <= 0 via FlowState.
PenetrationDepth penetration_depth(const FluidParameters& params,
                                   const FlowState& state,
                                   const ProfileSpec& spec);

/// Relative depth Delta = sqrt(1 + j_beta D0) >= 1, independent of the
/// profile exponent; equality holds iff the fluid is Newtonian.
double relative_depth(const FluidParameters& params, const FlowState& state);

/// Relative depth of the dimensionless formulation,
/// Delta2 = sqrt(1 + eta * j_beta / (t*)^beta).
double relative_depth_example2(const FluidParameters& params, const FlowState& state);

/// Velocity ratio u/U0 at the state's (y, t). Exactly 1 at the wall,
/// exactly 0 at and beyond the front; monotone decreasing in between.
/// For the self-adaptive policy the local exponent n(xi) enters both the
/// front constant and the power.
double velocity(const FluidParameters& params, const FlowState& state,
                const ProfileSpec& spec);

/// Exact Newtonian solution u/U0 = 1 - erf(xi/2) of the step start-up,
/// used as the oracle for the p = 0 limit.
double newtonian_exact(double xi);

/// Shear stress at the state's (y, t) in the requested formulation:
///   Main:     F  = nu (n/delta) (1-y/delta)^(n-1) [1 + j D0]          * (-U0)
///   Example1: F1 = (n/delta_bar)(1-y/delta)^(n-1) [nu/p + j/t^beta]   * (-U0)
///   Example2: F2 = (n/delta*)(1-y/delta)^(n-1) [1 + eta j/(t*)^beta]  * (-U0)
/// The sign and the U0 factor come from du/dy = -(n U0/delta)(...)^(n-1);
/// the source formulas report magnitudes per unit plate velocity.
/// Zero for y >= delta. Example1 throws std::domain_error for p = 0.
double stress(const FluidParameters& params, const FlowState& state,
              const ProfileSpec& spec, StressFormulation formulation);

/// Velocity and stress together.
FieldSample sample(const FluidParameters& params, const FlowState& state,
                   const ProfileSpec& spec,
                   StressFormulation formulation = StressFormulation::Main);

}  // namespace fracstokes::kinematics

#endif  // FRACSTOKES_KINEMATICS_HPP
