#ifndef FRACSTOKES_ORACLE_HPP
#define FRACSTOKES_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "fracstokes/types.hpp"

/// Independent finite-difference solver for the governing fractional PDE
///
///   du/dt = nu d2u/dy2 + p D_t^beta d2u/dy2,
///   u(y,0) = 0,  u(0,t) = U0,  u -> 0 as y -> inf,
///
/// used as ground truth for the integral-balance closed forms. Time
/// stepping is implicit (backward difference), space is second-order
/// central, and the fractional term is discretized by the L1 scheme
/// applied to the history of w = d2u/dy2 with weights
/// b_j = (j+1)^(1-beta) - j^(1-beta) and prefactor dt^(-beta)/Gamma(2-beta)
/// (w vanishes at t = 0 in the interior, so the Riemann-Liouville and
/// Caputo forms coincide). Each step solves one tridiagonal system; the
/// full history is retained.
///
/// The boundary jump at t = 0+ makes w non-smooth near the wall at early
/// times; the first few steps carry O(dt^beta) error, so validation
/// tolerances are meant for mid-to-late times.

namespace fracstokes::oracle {

/// Uniform space-time grid. The far boundary must be placed so that the
/// solution never reaches it (y_max >= 2 delta(t_end) in practice); a
/// breach is recorded on the solution rather than guessed here.
struct Grid {
    Grid(double y_max, int ny, double t_end, int nt);

    double y_max;
    int ny;
    double t_end;
    int nt;

    double dy() const { return y_max / ny; }
    double dt() const { return t_end / nt; }

    /// Resolution contract of the validation workflows (ny, nt >= 32).
    /// Coarser grids still solve, but drivers should warn.
    bool meets_resolution_contract() const { return ny >= 32 && nt >= 32; }
};

struct OracleSolution {
    Grid grid;
    double U0;
    double nu;
    double p;
    double beta;

    /// Velocity field, time-major: u[(k, i)] = at(k, i), k = 0..nt, i = 0..ny.
    std::vector<double> u;

    /// Wall stress series T_xy/rho at y = 0 per time step (one-sided
    /// second-order du/dy plus the L1-discretized fractional term).
    std::vector<double> wall_stress;

    /// First time at which the solution measurably reached the far
    /// boundary (u at the last interior node > 1e-6 U0), if it did.
    std::optional<double> far_boundary_breach_time;

    double at(int k, int i) const { return u[static_cast<std::size_t>(k) * (grid.ny + 1) + i]; }
    std::span<const double> slice(int k) const {
        return {u.data() + static_cast<std::size_t>(k) * (grid.ny + 1),
                static_cast<std::size_t>(grid.ny + 1)};
    }
    double y_at(int i) const { return i * grid.dy(); }
    double t_at(int k) const { return k * grid.dt(); }
};

/// Run the solver. U0 = 0 is allowed and yields the zero field.
OracleSolution solve(const FluidParameters& params, double U0, FractionalOrder beta,
                     const Grid& grid);

/// Error metrics of the closed-form profile against the oracle at one
/// time slice.
struct SliceMetrics {
    double t;                 // grid time actually used
    double linf;              // max |closed form - oracle| over all nodes
    /// RMS error over the covered layer [0, max(delta, empirical depth)],
    /// in units of U0. The union domain keeps the metric from rewarding a
    /// profile for truncating its own support.
    double l2;
    double depth_empirical;   // first y with u <= 0.001 U0
    double depth_closed_form; // penetration depth of the profile
    double depth_ratio;       // empirical / closed form
};

/// Compare the closed-form velocity against the oracle at the requested
/// times (snapped to grid steps). Throws std::runtime_error if the
/// covered layer exceeds y_max (grid-coverage failure).
std::vector<SliceMetrics> compare(const OracleSolution& solution,
                                  const FluidParameters& params,
                                  const ProfileSpec& spec,
                                  std::span<const double> times);

/// Diagnostic probe of the memory effect: wall stress at t_end recomputed
/// with only the most recent `window` wall-gradient history values
/// retained in the (telescoped) L1 sum. window >= nt reproduces the full
/// stress; the truncation error decreases monotonically as the window
/// grows. Not used by production runs.
double wall_stress_truncated(const OracleSolution& solution, int window);

}  // namespace fracstokes::oracle

#endif  // FRACSTOKES_ORACLE_HPP
