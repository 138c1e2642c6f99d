#include "fracstokes/groups.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracstokes/special_functions.hpp"

namespace fracstokes::groups {

double j_beta(double beta) {
    if (!(beta > 0.0 && beta < 1.0)) {
        throw std::domain_error("j_beta: beta must lie strictly inside (0, 1), got " +
                                std::to_string(beta));
    }
    // (1-beta)*Gamma(1-beta) == Gamma(2-beta)
    return 1.0 / specfun::gamma(2.0 - beta);
}

double j_beta(FractionalOrder beta) { return j_beta(beta.value()); }

double deborah_number(const FluidParameters& params, const FlowState& state) {
    return params.p() / (params.nu() * std::pow(state.t, state.beta.value()));
}

double elasticity_number(const FluidParameters& params, const FlowState& state) {
    return deborah_number(params, state);
}

GroupSet similarity(const FluidParameters& params, const FlowState& state) {
    const double nu = params.nu();
    GroupSet g{};
    g.j_beta = j_beta(state.beta);
    g.D0 = deborah_number(params, state);
    g.chi = std::sqrt(g.D0);
    g.xi = state.y / std::sqrt(nu * state.t);
    g.eta = params.alpha1() * state.U0 * state.U0 * params.rho() /
            (params.mu() * params.mu());
    g.t_star = state.t * state.U0 * state.U0 / nu;
    g.y_star = state.y * state.U0 / nu;
    return g;
}

}  // namespace fracstokes::groups
