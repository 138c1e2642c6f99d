#include "fracstokes/types.hpp"

#include <cmath>
#include <stdexcept>

#include "fracstokes/special_functions.hpp"

namespace fracstokes {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

std::string trim_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

FluidParameters::FluidParameters(double rho, double mu, double alpha1)
    : rho_(rho), mu_(mu), alpha1_(alpha1) {
    require(std::isfinite(rho) && rho > 0.0, "FluidParameters: rho must be > 0");
    require(std::isfinite(mu) && mu > 0.0, "FluidParameters: mu must be > 0");
    require(std::isfinite(alpha1) && alpha1 >= 0.0,
            "FluidParameters: alpha1 must be >= 0 (thermodynamic restriction)");
}

FluidParameters FluidParameters::from_kinematic(double nu, double p) {
    require(std::isfinite(nu) && nu > 0.0, "FluidParameters: nu must be > 0");
    require(std::isfinite(p) && p >= 0.0, "FluidParameters: p must be >= 0");
    return FluidParameters(1.0, nu, p);
}

FluidParameters FluidParameters::from_relaxation_time(double nu, double lambda_r) {
    require(std::isfinite(lambda_r) && lambda_r >= 0.0,
            "FluidParameters: lambda_r must be >= 0");
    return from_kinematic(nu, nu * lambda_r);
}

FluidParameters FluidParameters::from_viscoelastic_constant(double rho, double mu,
                                                            double E, double c) {
    require(std::isfinite(E) && E >= 0.0, "FluidParameters: E must be >= 0");
    require(std::isfinite(c) && c > 0.0, "FluidParameters: c must be > 0");
    return FluidParameters(rho, mu, E / c);
}

FractionalOrder::FractionalOrder(double beta) : beta_(beta) {
    if (!(std::isfinite(beta) && beta > 0.0 && beta < 1.0)) {
        throw std::invalid_argument(
            "FractionalOrder: beta must lie strictly inside (0, 1), got " +
            trim_number(beta));
    }
}

FlowState::FlowState(double U0_, double t_, double y_, FractionalOrder beta_)
    : U0(U0_), t(t_), y(y_), beta(beta_) {
    require(std::isfinite(U0_) && U0_ > 0.0, "FlowState: U0 must be > 0");
    if (!(std::isfinite(t_) && t_ > 0.0)) {
        throw std::invalid_argument(
            "FlowState: t must be > 0 (the elastic groups carry t^-beta and are "
            "singular at t = 0)");
    }
    require(std::isfinite(y_) && y_ >= 0.0, "FlowState: y must be >= 0");
}

ProfileSpec::ProfileSpec(bool adaptive, double n, double kj)
    : adaptive_(adaptive), n_(n), kj_(kj) {}

ProfileSpec ProfileSpec::fixed(double n) {
    if (!(std::isfinite(n) && n > 1.0)) {
        throw std::invalid_argument(
            "ProfileSpec: fixed exponent must satisfy n > 1, got " + trim_number(n));
    }
    return ProfileSpec(false, n, 0.0);
}

ProfileSpec ProfileSpec::self_adaptive(double n0, double kj) {
    if (!(std::isfinite(n0) && n0 > 1.0)) {
        throw std::invalid_argument(
            "ProfileSpec: n0 must satisfy n0 > 1, got " + trim_number(n0));
    }
    if (!(std::isfinite(kj) && kj >= 0.0)) {
        throw std::invalid_argument(
            "ProfileSpec: kj must be >= 0, got " + trim_number(kj));
    }
    return ProfileSpec(true, n0, kj);
}

double ProfileSpec::exponent_at(double xi) const {
    if (!adaptive_) return n_;
    return n_ + kj_ * specfun::lambert_w0(xi);
}

double ProfileSpec::depth_exponent() const { return n_; }

std::string ProfileSpec::describe() const {
    char buf[96];
    if (adaptive_) {
        std::snprintf(buf, sizeof(buf), "adaptive(n0=%g,kj=%g)", n_, kj_);
    } else {
        std::snprintf(buf, sizeof(buf), "n=%g", n_);
    }
    return buf;
}

}  // namespace fracstokes
