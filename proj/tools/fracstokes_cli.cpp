// fracstokes: parameter sweeps, figure-data reproduction, exponent
// optimization and finite-difference validation for the start-up flow of a
// generalized second grade fluid with a fractional stress memory term.
//
// Subcommands: profile | depth | optimize | validate | figures.
// Output is CSV with a '#'-prefixed config stamp line; identical configs
// produce byte-identical files. Exit codes: 0 success, 2 config error,
// 3 numerical failure (including failed validation tolerances).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracstokes/csv.hpp"
#include "fracstokes/figures.hpp"
#include "fracstokes/groups.hpp"
#include "fracstokes/kinematics.hpp"
#include "fracstokes/optimizer.hpp"
#include "fracstokes/oracle.hpp"
#include "fracstokes/parallel.hpp"
#include "fracstokes/types.hpp"

namespace {

using namespace fracstokes;

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

std::string fmt_double(double v) { return csv::cell(v); }

std::vector<double> parse_range(const std::string& text) {
    double lo = 0, hi = 0, step = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3) {
        throw std::invalid_argument("range must be 'lo:hi:step', got '" + text + "'");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("range step must be positive, got '" + text + "'");
    }
    if (hi < lo) {
        throw std::invalid_argument("range must satisfy lo <= hi, got '" + text + "'");
    }
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = lo + step * static_cast<double>(i);
    return values;
}

std::string join(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += fmt_double(v[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// shared option bundles
// ---------------------------------------------------------------------------

struct FluidOptions {
    std::optional<double> nu, p, lambda_r, rho, mu, alpha1, eta;

    void attach(CLI::App* cmd, bool allow_eta) {
        cmd->add_option("--nu", nu, "kinematic viscosity nu [m^2/s]");
        cmd->add_option("--p", p, "elastic diffusivity p = alpha1/rho (with --nu)");
        cmd->add_option("--lambda-r", lambda_r, "relaxation time; p = nu*lambda_r (with --nu)");
        cmd->add_option("--rho", rho, "density [kg/m^3] (with --mu --alpha1)");
        cmd->add_option("--mu", mu, "dynamic viscosity [Pa s] (with --rho --alpha1)");
        cmd->add_option("--alpha1", alpha1, "first normal-stress modulus (with --rho --mu)");
        if (allow_eta) {
            cmd->add_option("--eta", eta,
                            "dimensionless mode: eta = alpha1 U0^2 rho/mu^2; times and "
                            "positions are then t* and y* (implies nu = 1, U0 = 1)");
        }
    }

    bool dimensionless() const { return eta.has_value(); }

    FluidParameters resolve() const {
        const bool si = rho || mu || alpha1;
        const bool kin = nu.has_value();
        const int styles = int(si) + int(kin) + int(eta.has_value());
        if (styles != 1) {
            throw std::invalid_argument(
                "exactly one fluid-parameter style required: --nu [--p|--lambda-r], "
                "or --rho --mu --alpha1, or --eta");
        }
        if (eta) return FluidParameters::from_kinematic(1.0, *eta);
        if (si) {
            if (!(rho && mu && alpha1)) {
                throw std::invalid_argument("--rho, --mu and --alpha1 must be given together");
            }
            return FluidParameters(*rho, *mu, *alpha1);
        }
        if (p && lambda_r) {
            throw std::invalid_argument("--p and --lambda-r are mutually exclusive");
        }
        if (lambda_r) return FluidParameters::from_relaxation_time(*nu, *lambda_r);
        return FluidParameters::from_kinematic(*nu, p.value_or(0.0));
    }

    std::string stamp() const {
        if (eta) return "eta=" + fmt_double(*eta);
        const auto f = resolve();
        std::string s = "nu=" + fmt_double(f.nu()) + " p=" + fmt_double(f.p());
        if (rho) {
            s += " rho=" + fmt_double(*rho) + " mu=" + fmt_double(*mu) +
                 " alpha1=" + fmt_double(*alpha1);
        }
        return s;
    }
};

struct ProfileOptions {
    std::optional<double> n;
    bool adaptive = false;
    double n0 = 1.675;
    double kj = 0.5;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "fixed profile exponent n > 1 (default 2)");
        cmd->add_flag("--adaptive", adaptive,
                      "self-adaptive exponent n(xi) = n0 + kj*W(xi)");
        cmd->add_option("--n0", n0, "self-adaptive base exponent")->capture_default_str();
        cmd->add_option("--kj", kj, "self-adaptive LambertW weight")->capture_default_str();
    }

    ProfileSpec resolve() const {
        if (n && adaptive) {
            throw std::invalid_argument("--n and --adaptive are mutually exclusive");
        }
        if (adaptive) return ProfileSpec::self_adaptive(n0, kj);
        return ProfileSpec::fixed(n.value_or(2.0));
    }
};

struct AxisOptions {
    std::vector<double> list;
    std::string range;
    const char* name;

    explicit AxisOptions(const char* axis) : name(axis) {}

    void attach(CLI::App* cmd, const std::string& what) {
        cmd->add_option(std::string("--") + name, list,
                        what + " as a comma-separated list")
            ->delimiter(',');
        cmd->add_option(std::string("--") + name + "-range", range,
                        what + " as 'lo:hi:step'");
    }

    std::vector<double> resolve(bool required = true) const {
        if (!list.empty() && !range.empty()) {
            throw std::invalid_argument(std::string("--") + name + " and --" + name +
                                        "-range are mutually exclusive");
        }
        std::vector<double> values = !range.empty() ? parse_range(range) : list;
        if (required && values.empty()) {
            throw std::invalid_argument(std::string("--") + name + " or --" + name +
                                        "-range required");
        }
        return values;
    }

    std::string stamp() const {
        return !range.empty() ? range : join(list);
    }
};

void write_or_print(const csv::Table& table, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << csv::to_string(table);
    } else {
        csv::write_file(table, out);
        std::cerr << "wrote " << out << " (" << table.rows.size() << " rows)\n";
    }
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int run_profile(const FluidOptions& fluid, const ProfileOptions& prof, double beta,
                double u0, const AxisOptions& taxis, const AxisOptions& yaxis,
                const std::string& out) {
    const auto params = fluid.resolve();
    const auto spec = prof.resolve();
    const double U0 = fluid.dimensionless() ? 1.0 : u0;
    const auto times = taxis.resolve();
    const auto ys = yaxis.resolve();
    const FractionalOrder order(beta);

    csv::Table table;
    table.name = "profile";
    table.config_stamp = "cmd=profile " + fluid.stamp() + " beta=" + fmt_double(beta) +
                         " u0=" + fmt_double(U0) + " profile=" + spec.describe() +
                         " t=" + taxis.stamp() + " y=" + yaxis.stamp();
    table.columns = {"t", "y", "xi", "chi", "D0", "u_over_U0", "formulation"};
    table.rows.resize(times.size() * ys.size());

    const std::string desc = spec.describe();
    parallel_for(table.rows.size(), [&](std::size_t idx) {
        const double t = times[idx / ys.size()];
        const double y = ys[idx % ys.size()];
        const FlowState state(U0, t, y, order);
        const auto g = groups::similarity(params, state);
        const double u = kinematics::velocity(params, state, spec);
        table.rows[idx] = {fmt_double(t),     fmt_double(y),  fmt_double(g.xi),
                           fmt_double(g.chi), fmt_double(g.D0), fmt_double(u), desc};
    });

    write_or_print(table, out);
    return 0;
}

int run_depth(const FluidOptions& fluid, const ProfileOptions& prof, double beta,
              double u0, const AxisOptions& taxis, const std::string& out) {
    const auto params = fluid.resolve();
    const auto spec = prof.resolve();
    const double U0 = fluid.dimensionless() ? 1.0 : u0;
    const auto times = taxis.resolve();
    const FractionalOrder order(beta);

    csv::Table table;
    table.name = "depth";
    table.config_stamp = "cmd=depth " + fluid.stamp() + " beta=" + fmt_double(beta) +
                         " u0=" + fmt_double(U0) + " profile=" + spec.describe() +
                         " t=" + taxis.stamp();
    table.columns = {"t", "t_star", "delta", "delta_bar", "delta_star",
                     "Delta", "Delta1", "Delta2"};
    table.rows.resize(times.size());

    parallel_for(times.size(), [&](std::size_t idx) {
        const FlowState state(U0, times[idx], 0.0, order);
        const auto d = kinematics::penetration_depth(params, state, spec);
        const auto g = groups::similarity(params, state);
        table.rows[idx] = {fmt_double(times[idx]),
                           fmt_double(g.t_star),
                           fmt_double(d.delta),
                           d.delta_bar ? fmt_double(*d.delta_bar) : std::string{},
                           fmt_double(d.delta_star),
                           fmt_double(d.Delta),
                           fmt_double(d.Delta1),
                           fmt_double(d.Delta2)};
    });

    write_or_print(table, out);
    return 0;
}

int run_optimize(const FluidOptions& fluid, double beta, double t_eval,
                 const std::string& bracket_text, double tol, int nodes,
                 const std::string& out) {
    const auto params = fluid.resolve();
    const FlowState state(1.0, t_eval, 0.0, FractionalOrder(beta));

    double lo = 1.6, hi = 5.0;
    if (!bracket_text.empty()) {
        char extra = 0;
        if (std::sscanf(bracket_text.c_str(), "%lf:%lf%c", &lo, &hi, &extra) != 2) {
            throw std::invalid_argument("--bracket must be 'lo:hi', got '" +
                                        bracket_text + "'");
        }
    }

    const double D0 = groups::deborah_number(params, state);
    std::optional<optimizer::ExponentResult> closed;
    if (D0 > 0.0) closed = optimizer::optimal_n_closed(D0);
    const auto numeric = optimizer::optimize_n(params, state, {lo, hi}, tol, nodes);
    const double residual_at_opt =
        optimizer::residual_l2(params, state, numeric.n_opt, nodes).residual_l2;

    std::ostringstream report;
    report << "D0(t_eval) = " << fmt_double(D0) << "\n";
    if (closed) {
        report << "closed-form n = " << fmt_double(closed->n_opt)
               << (closed->below_validity_floor ? "  [below n > 1 validity floor]" : "")
               << "\n";
    } else {
        report << "closed-form n = (undefined: Newtonian, D0 = 0)\n";
    }
    report << "numeric-scan n = " << fmt_double(numeric.n_opt)
           << (numeric.at_bracket_edge ? "  [minimum at bracket edge]" : "") << "\n";
    if (closed) {
        report << "discrepancy |closed - numeric| = "
               << fmt_double(std::abs(closed->n_opt - numeric.n_opt)) << "\n";
    }
    report << "residual_l2(numeric n) = " << fmt_double(residual_at_opt) << " ("
           << nodes << " nodes)\n";
    std::cout << report.str();

    if (!out.empty() && out != "-") {
        csv::Table table;
        table.name = "optimize";
        table.config_stamp = "cmd=optimize " + fluid.stamp() +
                             " beta=" + fmt_double(beta) +
                             " t_eval=" + fmt_double(t_eval) + " bracket=" +
                             fmt_double(lo) + ":" + fmt_double(hi) +
                             " tol=" + fmt_double(tol) +
                             " nodes=" + std::to_string(nodes);
        table.columns = {"D0", "n_closed", "below_floor", "n_numeric",
                         "at_bracket_edge", "discrepancy", "residual_l2"};
        table.rows.push_back(
            {fmt_double(D0),
             closed ? fmt_double(closed->n_opt) : std::string{},
             closed ? (closed->below_validity_floor ? "1" : "0") : std::string{},
             fmt_double(numeric.n_opt),
             numeric.at_bracket_edge ? "1" : "0",
             closed ? fmt_double(std::abs(closed->n_opt - numeric.n_opt)) : std::string{},
             fmt_double(residual_at_opt)});
        csv::write_file(table, out);
        std::cerr << "wrote " << out << "\n";
    }
    return 0;
}

int run_validate(const FluidOptions& fluid, const ProfileOptions& prof, double beta,
                 double u0, double ymax, int ny, double tend, int nt,
                 std::vector<double> times, bool optimize_exponent, double linf_tol,
                 double l2_tol, const std::string& depth_band_text,
                 const std::string& out, const std::string& dump_field) {
    const auto params = fluid.resolve();
    const FractionalOrder order(beta);

    double band_lo = 0.5, band_hi = 1.75;
    if (!depth_band_text.empty()) {
        char extra = 0;
        if (std::sscanf(depth_band_text.c_str(), "%lf:%lf%c", &band_lo, &band_hi,
                        &extra) != 2) {
            throw std::invalid_argument("--depth-band must be 'lo:hi', got '" +
                                        depth_band_text + "'");
        }
    }

    ProfileSpec spec = prof.resolve();
    if (optimize_exponent) {
        const FlowState at_end(u0, tend, 0.0, order);
        const auto result = optimizer::optimize_n(params, at_end);
        if (result.at_bracket_edge) {
            std::cerr << "note: optimized exponent sits at the bracket edge (n = "
                      << fmt_double(result.n_opt) << ")\n";
        }
        spec = ProfileSpec::fixed(result.n_opt);
        std::cout << "optimized exponent n = " << fmt_double(result.n_opt)
                  << " at D0 = " << fmt_double(result.D0_at_eval) << "\n";
    }

    const oracle::Grid grid(ymax, ny, tend, nt);
    if (!grid.meets_resolution_contract()) {
        std::cerr << "warning: grid below the ny, nt >= 32 resolution contract; "
                     "convergence of the error metrics is not assured\n";
    }
    if (times.empty()) times = {tend / 2.0, tend};

    const auto solution = oracle::solve(params, u0, order, grid);
    if (solution.far_boundary_breach_time) {
        std::cerr << "warning: solution reached the far boundary at t = "
                  << fmt_double(*solution.far_boundary_breach_time)
                  << "; enlarge --ymax\n";
    }
    const auto metrics = oracle::compare(solution, params, spec, times);

    csv::Table table;
    table.name = "validate";
    table.config_stamp = "cmd=validate " + fluid.stamp() + " beta=" + fmt_double(beta) +
                         " u0=" + fmt_double(u0) + " profile=" + spec.describe() +
                         " ymax=" + fmt_double(ymax) + " ny=" + std::to_string(ny) +
                         " tend=" + fmt_double(tend) + " nt=" + std::to_string(nt) +
                         " linf_tol=" + fmt_double(linf_tol) +
                         " l2_tol=" + fmt_double(l2_tol) + " depth_band=" +
                         fmt_double(band_lo) + ":" + fmt_double(band_hi);
    table.columns = {"t", "linf", "l2", "depth_empirical", "depth_closed_form",
                     "depth_ratio", "pass"};

    bool all_pass = true;
    for (const auto& m : metrics) {
        const bool pass = m.linf <= linf_tol * u0 && m.l2 <= l2_tol * u0 &&
                          m.depth_ratio >= band_lo && m.depth_ratio <= band_hi;
        all_pass = all_pass && pass;
        table.rows.push_back({fmt_double(m.t), fmt_double(m.linf), fmt_double(m.l2),
                              fmt_double(m.depth_empirical),
                              fmt_double(m.depth_closed_form),
                              fmt_double(m.depth_ratio), pass ? "1" : "0"});
        std::cout << (pass ? "PASS" : "FAIL") << " t=" << fmt_double(m.t)
                  << " linf=" << fmt_double(m.linf) << " l2=" << fmt_double(m.l2)
                  << " depth_ratio=" << fmt_double(m.depth_ratio) << "\n";
    }

    if (!out.empty() && out != "-") {
        csv::write_file(table, out);
        std::cerr << "wrote " << out << "\n";
    }

    if (!dump_field.empty()) {
        csv::Table field;
        field.name = "field";
        field.config_stamp = table.config_stamp + " dump=field";
        field.columns = {"t", "y", "u"};
        field.rows.reserve(static_cast<std::size_t>(nt + 1) * (ny + 1));
        for (int k = 0; k <= nt; ++k) {
            for (int i = 0; i <= ny; ++i) {
                field.rows.push_back({fmt_double(solution.t_at(k)),
                                      fmt_double(solution.y_at(i)),
                                      fmt_double(solution.at(k, i))});
            }
        }
        csv::write_file(field, dump_field);
        std::cerr << "wrote " << dump_field << "\n";
    }

    if (!all_pass) {
        std::cerr << "validation FAILED against the configured tolerances\n";
        return kExitNumericalFailure;
    }
    return 0;
}

int run_figures(const std::string& figure_id, const std::string& outdir) {
    const auto tables = figures::generate(figure_id);
    for (const auto& t : tables) {
        const std::string path = outdir + "/" + t.name + ".csv";
        csv::write_file(t, path);
        std::cout << "wrote " << path << " (" << t.rows.size() << " rows)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Closed-form start-up flow of a generalized second grade fluid with a "
        "fractional stress memory term: sweeps, figures, exponent optimization "
        "and finite-difference validation"};
    app.require_subcommand(1);

    // ---- profile ----
    auto* profile_cmd = app.add_subcommand("profile", "velocity profile sweep -> CSV");
    FluidOptions pr_fluid;
    ProfileOptions pr_prof;
    AxisOptions pr_t("t"), pr_y("y");
    double pr_beta = 0.5, pr_u0 = 1.0;
    std::string pr_out;
    pr_fluid.attach(profile_cmd, true);
    pr_prof.attach(profile_cmd);
    profile_cmd->add_option("--beta", pr_beta, "fractional order in (0,1)")->required();
    profile_cmd->add_option("--u0", pr_u0, "plate velocity U0")->capture_default_str();
    pr_t.attach(profile_cmd, "times");
    pr_y.attach(profile_cmd, "wall distances");
    profile_cmd->add_option("--out", pr_out, "output CSV path ('-' = stdout)");
    profile_cmd->set_config("--config", "", "key = value config file");

    // ---- depth ----
    auto* depth_cmd = app.add_subcommand("depth", "penetration depth sweep -> CSV");
    FluidOptions dp_fluid;
    ProfileOptions dp_prof;
    AxisOptions dp_t("t");
    double dp_beta = 0.5, dp_u0 = 1.0;
    std::string dp_out;
    dp_fluid.attach(depth_cmd, true);
    dp_prof.attach(depth_cmd);
    depth_cmd->add_option("--beta", dp_beta, "fractional order in (0,1)")->required();
    depth_cmd->add_option("--u0", dp_u0, "plate velocity U0")->capture_default_str();
    dp_t.attach(depth_cmd, "times");
    depth_cmd->add_option("--out", dp_out, "output CSV path ('-' = stdout)");
    depth_cmd->set_config("--config", "", "key = value config file");

    // ---- optimize ----
    auto* opt_cmd = app.add_subcommand(
        "optimize", "calibrate the profile exponent (closed form + numeric scan)");
    FluidOptions op_fluid;
    double op_beta = 0.5, op_teval = 1.0, op_tol = 1e-6;
    int op_nodes = 64;
    std::string op_bracket, op_out;
    op_fluid.attach(opt_cmd, false);
    opt_cmd->add_option("--beta", op_beta, "fractional order in (0,1)")->required();
    opt_cmd->add_option("--t-eval", op_teval, "evaluation time for the residual")
        ->capture_default_str();
    opt_cmd->add_option("--bracket", op_bracket, "search bracket 'lo:hi' (default 1.6:5)");
    opt_cmd->add_option("--tol", op_tol, "bracket tolerance")->capture_default_str();
    opt_cmd->add_option("--nodes", op_nodes, "quadrature nodes")->capture_default_str();
    opt_cmd->add_option("--out", op_out, "optional report CSV path");
    opt_cmd->set_config("--config", "", "key = value config file");

    // ---- validate ----
    auto* val_cmd = app.add_subcommand(
        "validate", "finite-difference oracle vs closed form -> metrics + PASS/FAIL");
    FluidOptions va_fluid;
    ProfileOptions va_prof;
    double va_beta = 0.5, va_u0 = 1.0, va_ymax = 0.0, va_tend = 0.0;
    int va_ny = 0, va_nt = 0;
    std::vector<double> va_times;
    bool va_optimize = false;
    double va_linf = 0.05, va_l2 = 0.10;
    std::string va_band, va_out, va_dump;
    va_fluid.attach(val_cmd, false);
    va_prof.attach(val_cmd);
    val_cmd->add_option("--beta", va_beta, "fractional order in (0,1)")->required();
    val_cmd->add_option("--u0", va_u0, "plate velocity U0")->capture_default_str();
    val_cmd->add_option("--ymax", va_ymax, "far boundary position")->required();
    val_cmd->add_option("--ny", va_ny, "space intervals")->required();
    val_cmd->add_option("--tend", va_tend, "final time")->required();
    val_cmd->add_option("--nt", va_nt, "time steps")->required();
    val_cmd->add_option("--times", va_times, "comparison times (default tend/2, tend)")
        ->delimiter(',');
    val_cmd->add_flag("--optimize-n", va_optimize,
                      "replace the profile exponent by the optimizer's result at tend");
    val_cmd->add_option("--linf-tol", va_linf, "Linf tolerance in units of U0")
        ->capture_default_str();
    val_cmd->add_option("--l2-tol", va_l2, "layer-RMS tolerance in units of U0")
        ->capture_default_str();
    val_cmd->add_option("--depth-band", va_band,
                        "accepted empirical/closed-form depth ratio 'lo:hi' "
                        "(default 0.5:1.75)");
    val_cmd->add_option("--out", va_out, "metrics CSV path");
    val_cmd->add_option("--dump-field", va_dump, "write the full (t,y,u) field CSV here");
    val_cmd->set_config("--config", "", "key = value config file");

    // ---- figures ----
    auto* fig_cmd = app.add_subcommand("figures", "figure-data CSV bundles");
    std::string fg_id, fg_outdir = ".";
    fig_cmd->add_option("--figure", fg_id, "figure id: 1a 1b 1c 1d 2 3 4 5 6")->required();
    fig_cmd->add_option("--outdir", fg_outdir, "output directory")->capture_default_str();
    fig_cmd->set_config("--config", "", "key = value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (profile_cmd->parsed()) {
            return run_profile(pr_fluid, pr_prof, pr_beta, pr_u0, pr_t, pr_y, pr_out);
        }
        if (depth_cmd->parsed()) {
            return run_depth(dp_fluid, dp_prof, dp_beta, dp_u0, dp_t, dp_out);
        }
        if (opt_cmd->parsed()) {
            return run_optimize(op_fluid, op_beta, op_teval, op_bracket, op_tol,
                                op_nodes, op_out);
        }
        if (val_cmd->parsed()) {
            return run_validate(va_fluid, va_prof, va_beta, va_u0, va_ymax, va_ny,
                                va_tend, va_nt, va_times, va_optimize, va_linf, va_l2,
                                va_band, va_out, va_dump);
        }
        if (fig_cmd->parsed()) {
            return run_figures(fg_id, fg_outdir);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
    return 0;
}
