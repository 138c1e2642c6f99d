#include "fracstokes/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace fracstokes {

GaussLegendre::GaussLegendre(int nodes) {
    if (nodes < 1) {
        throw std::invalid_argument("GaussLegendre: node count must be >= 1");
    }
    const int n = nodes;
    x_.resize(n);
    w_.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-angle initial guess, then Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        x_[i] = -x;
        x_[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        w_[i] = w;
        w_[n - 1 - i] = w;
    }
}

}  // namespace fracstokes
