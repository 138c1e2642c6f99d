#ifndef FRACSTOKES_TYPES_HPP
#define FRACSTOKES_TYPES_HPP

#include <string>

/// Shared domain vocabulary: fluid material parameters, the fractional
/// order of the stress memory term, an evaluation point of the flow, and
/// the approximate-profile policy. All types are immutable value types
/// validated on construction; every operation on them is pure.

namespace fracstokes {

/// Material parameters of the generalized second grade fluid.
///
/// Stores density rho [kg/m^3], dynamic viscosity mu [Pa*s] and the first
/// normal-stress modulus alpha1 (>= 0, thermodynamic restriction). The
/// kinematic viscosity nu = mu/rho and the elastic diffusivity p =
/// alpha1/rho are always recomputed from the stored fields, never cached.
class FluidParameters {
public:
    FluidParameters(double rho, double mu, double alpha1);

    /// Kinematic inputs (nu, p) directly; stored as rho = 1, mu = nu,
    /// alpha1 = p, which reproduces nu and p exactly.
    static FluidParameters from_kinematic(double nu, double p);

    /// Relaxation-time form p = nu * lambda_r.
    static FluidParameters from_relaxation_time(double nu, double lambda_r);

    /// Viscoelastic-constant form alpha1 = E / c with a user-supplied
    /// matching constant c. The source literature prints c with two
    /// different exponents ([rho y^2/mu]^(beta-1) vs [rho y^2/mu]^beta),
    /// so no attempt is made to derive c here; the caller owns it.
    static FluidParameters from_viscoelastic_constant(double rho, double mu,
                                                      double E, double c);

    double rho() const { return rho_; }
    double mu() const { return mu_; }
    double alpha1() const { return alpha1_; }

    /// Kinematic viscosity nu = mu/rho [m^2/s].
    double nu() const { return mu_ / rho_; }
    /// Elastic diffusivity p = alpha1/rho (the coefficient of the
    /// fractional term in the equation of motion).
    double p() const { return alpha1_ / rho_; }

    /// True for a Newtonian fluid (alpha1 == 0).
    bool newtonian() const { return alpha1_ == 0.0; }

private:
    double rho_;
    double mu_;
    double alpha1_;
};

/// Fractional order beta of the stress memory term, strictly inside (0, 1).
/// Construction rejects the endpoints: beta = 0 and beta = 1 are the
/// integer-order limits that the fractional operators do not cover.
class FractionalOrder {
public:
    explicit FractionalOrder(double beta);
    double value() const { return beta_; }

private:
    double beta_;
};

/// One evaluation point of the start-up flow: plate velocity U0 > 0,
/// time t > 0 (every group with t^-beta is singular at t = 0),
/// wall distance y >= 0, and the fractional order.
struct FlowState {
    FlowState(double U0, double t, double y, FractionalOrder beta);

    double U0;
    double t;
    double y;
    FractionalOrder beta;
};

/// Approximate-profile exponent policy: either a fixed exponent n > 1, or
/// the self-adaptive exponent n(xi) = n0 + kj * W(xi) that grows with the
/// wall distance (defaults n0 = 1.675, kj = 0.5).
///
/// n > 1 is required so the profile's slope vanishes at the penetration
/// front together with the profile itself.
class ProfileSpec {
public:
    static ProfileSpec fixed(double n);
    static ProfileSpec self_adaptive(double n0 = 1.675, double kj = 0.5);

    bool adaptive() const { return adaptive_; }

    /// Exponent at similarity coordinate xi: n for the fixed policy,
    /// n0 + kj*W(xi) for the self-adaptive one.
    double exponent_at(double xi) const;

    /// Exponent used by the penetration-depth closed form. The depth
    /// depends on a single n: the fixed n, or n(0) = n0 for the
    /// self-adaptive policy (the adaptive exponent reshapes only the
    /// profile, not the front).
    double depth_exponent() const;

    /// Short descriptor for CSV stamps, e.g. "n=2" or
    /// "adaptive(n0=1.675,kj=0.5)".
    std::string describe() const;

private:
    ProfileSpec(bool adaptive, double n, double kj);

    bool adaptive_;
    double n_;   // fixed n, or n0
    double kj_;
};

/// Which of the three equivalent stress formulations to evaluate.
enum class StressFormulation {
    Main,      // F   = T_xy / rho                [m^2/s^2]
    Example1,  // F1, rescaled space y/sqrt(p)    (undefined for p = 0)
    Example2,  // F2  = T_xy / (rho U0^2)         (dimensionless system)
};

}  // namespace fracstokes

#endif  // FRACSTOKES_TYPES_HPP
