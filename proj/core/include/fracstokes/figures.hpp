#ifndef FRACSTOKES_FIGURES_HPP
#define FRACSTOKES_FIGURES_HPP

#include <string>
#include <vector>

#include "fracstokes/csv.hpp"

/// Study-figure data generators. Each figure id maps to one CSV table per
/// panel with the parameter grids of the corresponding numerical
/// experiment; the CLI writes them to files, the acceptance suite checks
/// their shape properties. Column schemas are documented in the README.
///
///   1a/1b/1c  relative depth Delta2 vs dimensionless time (short, medium,
///             large ranges), beta sweep at eta = 1
///   1d        velocity profiles vs xi for exponents n = 2, 3, 2.35 and
///             the self-adaptive profile (Newtonian case)
///   2         velocity vs xi for chi in {0, 0.5, 1, 2, 4}; panels
///             (a,b) beta = 0.1, (c,d) beta = 0.5, (e,f) beta = 0.9 with
///             n = 2 (top row) and n = 3 (bottom row)
///   3         velocity vs time (short range) at a fixed wall distance for
///             several p/nu ratios (n = 2, beta = 0.5)
///   4         velocity vs p/nu near/far from the wall, plus (p/nu, y)
///             field tables at t = 0.1 and t = 1 (n = 2, beta = 0.5)
///   5         velocity vs (t, beta) at y = 0.5 for p/nu in {1, 5, 10, 20},
///             beta up to 0.9 (n = 2)
///   6         dimensionless profiles vs y* for eta sweep at three
///             dimensionless times (n = 2, beta = 0.5)

namespace fracstokes::figures {

/// Valid ids: 1a 1b 1c 1d 2 3 4 5 6. Throws std::invalid_argument for
/// anything else.
std::vector<csv::Table> generate(const std::string& figure_id);

std::vector<std::string> known_ids();

}  // namespace fracstokes::figures

#endif  // FRACSTOKES_FIGURES_HPP
