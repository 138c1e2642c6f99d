#ifndef FRACSTOKES_MINIMIZE_HPP
#define FRACSTOKES_MINIMIZE_HPP

#include <cmath>
#include <stdexcept>

namespace fracstokes {

/// Result of a 1-D golden-section minimization.
struct MinimizeResult {
    double argmin;
    double value;
    bool at_edge;  // argmin indistinguishable from a bracket endpoint
};

/// Golden-section search for a minimum of f on [lo, hi]. Stops when the
/// bracket width falls below tol. No unimodality check is performed; for
/// a multimodal f the result is some local minimum inside the bracket.
template <class F>
MinimizeResult minimize_golden_section(F&& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("minimize_golden_section: lo < hi required");
    if (!(tol > 0.0)) throw std::invalid_argument("minimize_golden_section: tol must be > 0");

    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double lo0 = lo, hi0 = hi;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int guard = 0;
    while (b - a > tol && ++guard < 400) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    MinimizeResult r{};
    r.argmin = 0.5 * (a + b);
    r.value = fc < fd ? fc : fd;
    const double edge = 2.0 * tol;
    r.at_edge = (r.argmin - lo0 <= edge) || (hi0 - r.argmin <= edge);
    return r;
}

}  // namespace fracstokes

#endif  // FRACSTOKES_MINIMIZE_HPP
