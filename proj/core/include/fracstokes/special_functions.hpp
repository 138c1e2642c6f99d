#ifndef FRACSTOKES_SPECIAL_FUNCTIONS_HPP
#define FRACSTOKES_SPECIAL_FUNCTIONS_HPP

/// Self-contained special functions used by the closed-form solutions:
/// Gamma (Lanczos), the error function (series + continued fraction) and
/// the principal branch of the Lambert W function (Halley iteration).
///
/// All three are implemented from scratch so the library carries no
/// numerical dependencies. Target accuracy is 1e-12 or better on the
/// documented domains; every function is pure and thread-safe.

namespace fracstokes::specfun {

/// Gamma function for x > 0. Relative error below 1e-13 on (0, 2]
/// (Lanczos g=7, 9 coefficients). Throws std::domain_error for x <= 0.
double gamma(double x);

/// Error function, total on finite reals. Odd by construction
/// (erf(-x) == -erf(x) exactly); absolute error below 1e-13.
double erf(double x);

/// Principal-branch Lambert W for x >= 0: returns w with w*exp(w) = x
/// to an absolute residual below 1e-12*max(1,x).
/// Throws std::domain_error for x < 0.
double lambert_w0(double x);

}  // namespace fracstokes::specfun

#endif  // FRACSTOKES_SPECIAL_FUNCTIONS_HPP
