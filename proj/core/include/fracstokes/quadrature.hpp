#ifndef FRACSTOKES_QUADRATURE_HPP
#define FRACSTOKES_QUADRATURE_HPP

#include <vector>

namespace fracstokes {

/// Gauss-Legendre rule on [-1, 1]. Nodes and weights are computed once by
/// Newton iteration on the Legendre recurrence; exact for polynomials of
/// degree <= 2n-1.
class GaussLegendre {
public:
    explicit GaussLegendre(int nodes);

    int size() const { return static_cast<int>(x_.size()); }
    const std::vector<double>& nodes() const { return x_; }
    const std::vector<double>& weights() const { return w_; }

    /// Integrate f over [a, b].
    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (b + a);
        double acc = 0.0;
        for (std::size_t i = 0; i < x_.size(); ++i) {
            acc += w_[i] * f(mid + half * x_[i]);
        }
        return acc * half;
    }

private:
    std::vector<double> x_;
    std::vector<double> w_;
};

}  // namespace fracstokes

#endif  // FRACSTOKES_QUADRATURE_HPP
