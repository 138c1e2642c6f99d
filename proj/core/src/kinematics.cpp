#include "fracstokes/kinematics.hpp"

#include <cmath>
#include <stdexcept>

#include "fracstokes/groups.hpp"
#include "fracstokes/special_functions.hpp"

namespace fracstokes::kinematics {

double profile_front_constant(double n) { return std::sqrt(2.0 * n * (n + 1.0)); }

PenetrationDepth penetration_depth(const FluidParameters& params,
                                   const FlowState& state,
                                   const ProfileSpec& spec) {
    const auto g = groups::similarity(params, state);
    const double n = spec.depth_exponent();

    PenetrationDepth d{};
    d.F_n = profile_front_constant(n);
    d.R_beta = std::sqrt(1.0 + g.j_beta * g.D0);
    d.delta = std::sqrt(params.nu() * state.t) * d.F_n * d.R_beta;
    if (params.p() > 0.0) {
        d.delta_bar = d.delta / std::sqrt(params.p());
    }
    d.delta_star = d.delta * state.U0 / params.nu();
    d.Delta = d.R_beta;
    d.Delta1 = d.Delta;  // rescaling space by 1/sqrt(p) leaves the ratio intact
    d.Delta2 = std::sqrt(1.0 + g.eta * g.j_beta / std::pow(g.t_star, state.beta.value()));
    return d;
}

double relative_depth(const FluidParameters& params, const FlowState& state) {
    const double jb = groups::j_beta(state.beta);
    return std::sqrt(1.0 + jb * groups::deborah_number(params, state));
}

double relative_depth_example2(const FluidParameters& params, const FlowState& state) {
    const auto g = groups::similarity(params, state);
    return std::sqrt(1.0 + g.eta * g.j_beta / std::pow(g.t_star, state.beta.value()));
}

double velocity(const FluidParameters& params, const FlowState& state,
                const ProfileSpec& spec) {
    const auto g = groups::similarity(params, state);
    const double n = spec.exponent_at(g.xi);
    const double front = profile_front_constant(n) * std::sqrt(1.0 + g.j_beta * g.D0);
    const double s = 1.0 - g.xi / front;
    if (s <= 0.0) return 0.0;  // undisturbed fluid beyond the front
    return std::pow(s, n);
}

double newtonian_exact(double xi) {
    if (!(xi >= 0.0)) {
        throw std::domain_error("newtonian_exact: xi must be >= 0");
    }
    return 1.0 - specfun::erf(0.5 * xi);
}

double stress(const FluidParameters& params, const FlowState& state,
              const ProfileSpec& spec, StressFormulation formulation) {
    const auto g = groups::similarity(params, state);
    const auto depth = penetration_depth(params, state, spec);
    if (state.y >= depth.delta) return 0.0;  // front condition

    // Local exponent: for the self-adaptive policy the profile's shape
    // factor uses n(xi); the dn/dy contribution to the gradient is
    // neglected, mirroring the profile construction itself.
    const double n = spec.exponent_at(g.xi);
    const double shape = std::pow(1.0 - state.y / depth.delta, n - 1.0);
    const double tb = std::pow(state.t, state.beta.value());

    double magnitude;
    switch (formulation) {
        case StressFormulation::Main:
            magnitude = params.nu() * (n / depth.delta) * shape * (1.0 + g.j_beta * g.D0);
            break;
        case StressFormulation::Example1: {
            if (!depth.delta_bar) {
                throw std::domain_error(
                    "stress: Example1 formulation is undefined for a Newtonian fluid "
                    "(p = 0; the rescaled coordinate y/sqrt(p) degenerates)");
            }
            magnitude = (n / *depth.delta_bar) * shape *
                        (params.nu() / params.p() + g.j_beta / tb);
            break;
        }
        case StressFormulation::Example2: {
            const double tsb = std::pow(g.t_star, state.beta.value());
            magnitude = (n / depth.delta_star) * shape * (1.0 + g.eta * g.j_beta / tsb);
            break;
        }
        default:
            throw std::invalid_argument("stress: unknown formulation");
    }
    // plate drags the fluid: du/dy < 0 inside the layer
    return -state.U0 * magnitude;
}

FieldSample sample(const FluidParameters& params, const FlowState& state,
                   const ProfileSpec& spec, StressFormulation formulation) {
    return FieldSample{velocity(params, state, spec),
                       stress(params, state, spec, formulation)};
}

}  // namespace fracstokes::kinematics
