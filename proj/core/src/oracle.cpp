#include "fracstokes/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracstokes/kinematics.hpp"
#include "fracstokes/special_functions.hpp"

namespace fracstokes::oracle {

namespace {

std::vector<double> l1_weights(int nt, double beta) {
    // b_j = (j+1)^(1-beta) - j^(1-beta), j = 0..nt
    std::vector<double> b(nt + 1);
    const double e = 1.0 - beta;
    for (int j = 0; j <= nt; ++j) {
        b[j] = std::pow(j + 1.0, e) - std::pow(static_cast<double>(j), e);
    }
    return b;
}

// One-sided second-order wall gradient of a slice.
double wall_gradient(std::span<const double> u, double dy) {
    return (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dy);
}

}  // namespace

Grid::Grid(double y_max_, int ny_, double t_end_, int nt_)
    : y_max(y_max_), ny(ny_), t_end(t_end_), nt(nt_) {
    if (!(std::isfinite(y_max_) && y_max_ > 0.0)) {
        throw std::invalid_argument("Grid: y_max must be > 0");
    }
    if (ny_ < 4) {
        throw std::invalid_argument("Grid: ny must be >= 4");
    }
    if (!(std::isfinite(t_end_) && t_end_ > 0.0)) {
        throw std::invalid_argument("Grid: t_end must be > 0");
    }
    if (nt_ < 2) {
        throw std::invalid_argument("Grid: nt must be >= 2");
    }
}

OracleSolution solve(const FluidParameters& params, double U0, FractionalOrder beta,
                     const Grid& grid) {
    if (!(std::isfinite(U0) && U0 >= 0.0)) {
        throw std::invalid_argument("oracle::solve: U0 must be >= 0");
    }
    const int ny = grid.ny;
    const int nt = grid.nt;
    const int n_int = ny - 1;
    const double dy = grid.dy();
    const double dt = grid.dt();
    const double nu = params.nu();
    const double p = params.p();
    const double b_ = beta.value();

    const double sigma = std::pow(dt, -b_) / specfun::gamma(2.0 - b_);
    const double ce = nu + p * sigma;  // effective diffusivity of the implicit step
    const double r = dt * ce / (dy * dy);

    OracleSolution sol{grid, U0, nu, p, b_, {}, {}, std::nullopt};
    sol.u.assign(static_cast<std::size_t>(nt + 1) * (ny + 1), 0.0);
    sol.wall_stress.assign(nt + 1, 0.0);

    const auto b = l1_weights(nt, b_);

    // Thomas algorithm for the constant tridiagonal (-r, 1+2r, -r):
    // precompute the forward-elimination multipliers once.
    std::vector<double> cp(n_int);
    {
        double denom = 1.0 + 2.0 * r;
        cp[0] = -r / denom;
        for (int i = 1; i < n_int; ++i) {
            denom = 1.0 + 2.0 * r + r * cp[i - 1];
            cp[i] = -r / denom;
        }
    }

    // history of w = d2u/dy2 on interior nodes (only needed for p > 0)
    std::vector<double> W;
    if (p > 0.0) W.assign(static_cast<std::size_t>(nt + 1) * n_int, 0.0);
    const auto w_row = [&](int k) { return W.data() + static_cast<std::size_t>(k) * n_int; };

    std::vector<double> rhs(n_int), H(n_int), g(nt + 1, 0.0);

    for (int k = 1; k <= nt; ++k) {
        double* uk = sol.u.data() + static_cast<std::size_t>(k) * (ny + 1);
        const double* ukm = sol.u.data() + static_cast<std::size_t>(k - 1) * (ny + 1);

        if (p > 0.0) {
            std::fill(H.begin(), H.end(), 0.0);
            for (int j = 1; j < k; ++j) {
                const double bj = b[j];
                const double* wa = w_row(k - j);
                const double* wb = w_row(k - j - 1);
                for (int i = 0; i < n_int; ++i) H[i] += bj * (wa[i] - wb[i]);
            }
            const double* wkm = w_row(k - 1);
            for (int i = 0; i < n_int; ++i) {
                rhs[i] = ukm[i + 1] + dt * p * sigma * (H[i] - wkm[i]);
            }
        } else {
            for (int i = 0; i < n_int; ++i) rhs[i] = ukm[i + 1];
        }
        rhs[0] += r * U0;  // Dirichlet wall value folded into the first row

        // Thomas forward sweep / back substitution
        double denom = 1.0 + 2.0 * r;
        rhs[0] /= denom;
        for (int i = 1; i < n_int; ++i) {
            denom = 1.0 + 2.0 * r + r * cp[i - 1];
            rhs[i] = (rhs[i] + r * rhs[i - 1]) / denom;
        }
        for (int i = n_int - 2; i >= 0; --i) {
            rhs[i] -= cp[i] * rhs[i + 1];
        }

        uk[0] = U0;
        for (int i = 0; i < n_int; ++i) uk[i + 1] = rhs[i];
        uk[ny] = 0.0;

        if (p > 0.0) {
            double* wk = w_row(k);
            for (int i = 0; i < n_int; ++i) {
                wk[i] = (uk[i] - 2.0 * uk[i + 1] + uk[i + 2]) / (dy * dy);
            }
        }

        if (!sol.far_boundary_breach_time && std::abs(uk[ny - 1]) > 1e-6 * U0) {
            sol.far_boundary_breach_time = k * dt;
        }

        // wall stress: nu*g + p * L1 fractional derivative of the g history
        g[k] = wall_gradient(sol.slice(k), dy);
        double frac = 0.0;
        if (p > 0.0) {
            for (int j = 0; j < k; ++j) frac += b[j] * (g[k - j] - g[k - j - 1]);
        }
        sol.wall_stress[k] = nu * g[k] + p * sigma * frac;
    }
    return sol;
}

std::vector<SliceMetrics> compare(const OracleSolution& solution,
                                  const FluidParameters& params,
                                  const ProfileSpec& spec,
                                  std::span<const double> times) {
    const auto& grid = solution.grid;
    const double dy = grid.dy();
    const double dt = grid.dt();
    std::vector<SliceMetrics> out;
    out.reserve(times.size());

    for (double t_req : times) {
        const int k = std::clamp(static_cast<int>(std::llround(t_req / dt)), 1, grid.nt);
        const double t = k * dt;
        const auto u_oracle = solution.slice(k);

        const FlowState probe(solution.U0 > 0.0 ? solution.U0 : 1.0, t, 0.0,
                              FractionalOrder(solution.beta));
        const auto depth = kinematics::penetration_depth(params, probe, spec);

        // empirical depth: first node where the oracle fell to 0.1% of U0
        double depth_emp = grid.y_max;
        for (int i = 0; i <= grid.ny; ++i) {
            if (u_oracle[i] <= 0.001 * solution.U0) {
                depth_emp = i * dy;
                break;
            }
        }

        const double covered = std::max(depth.delta, depth_emp);
        if (covered > grid.y_max) {
            throw std::runtime_error(
                "oracle::compare: covered layer " + std::to_string(covered) +
                " exceeds y_max " + std::to_string(grid.y_max) +
                " at t = " + std::to_string(t) + " (grid does not cover the flow)");
        }

        double linf = 0.0;
        double l2_acc = 0.0;
        double prev_sq = 0.0;
        const int i_cov = static_cast<int>(std::floor(covered / dy));
        for (int i = 0; i <= grid.ny; ++i) {
            const FlowState st(solution.U0 > 0.0 ? solution.U0 : 1.0, t, i * dy,
                               FractionalOrder(solution.beta));
            const double ucf = solution.U0 * kinematics::velocity(params, st, spec);
            const double diff = ucf - u_oracle[i];
            linf = std::max(linf, std::abs(diff));
            if (i <= i_cov) {
                const double sq = diff * diff;
                if (i > 0) l2_acc += 0.5 * (sq + prev_sq) * dy;  // trapezoid
                prev_sq = sq;
            }
        }

        SliceMetrics m{};
        m.t = t;
        m.linf = linf;
        m.l2 = covered > 0.0 ? std::sqrt(l2_acc / covered) : 0.0;
        m.depth_empirical = depth_emp;
        m.depth_closed_form = depth.delta;
        m.depth_ratio = depth_emp / depth.delta;
        out.push_back(m);
    }
    return out;
}

double wall_stress_truncated(const OracleSolution& solution, int window) {
    if (window < 1) {
        throw std::invalid_argument("wall_stress_truncated: window must be >= 1");
    }
    const auto& grid = solution.grid;
    const double dy = grid.dy();
    const double dt = grid.dt();
    const int k = grid.nt;

    std::vector<double> g(k + 1);
    for (int m = 0; m <= k; ++m) g[m] = wall_gradient(solution.slice(m), dy);

    const auto b = l1_weights(grid.nt, solution.beta);
    const double sigma = std::pow(dt, -solution.beta) /
                         specfun::gamma(2.0 - solution.beta);

    // telescoped L1 sum over values (g_0 = 0): sigma*(g_k + sum_j d_j g_{k-j}),
    // d_j = b_j - b_{j-1}; the short-memory window keeps lags j < window.
    double acc = g[k];
    const int lim = std::min(window, k);
    for (int j = 1; j < lim; ++j) {
        acc += (b[j] - b[j - 1]) * g[k - j];
    }
    return solution.nu * g[k] + solution.p * sigma * acc;
}

}  // namespace fracstokes::oracle
