#include "fracstokes/figures.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fracstokes/groups.hpp"
#include "fracstokes/kinematics.hpp"
#include "fracstokes/types.hpp"

namespace fracstokes::figures {

namespace {

using csv::Table;
using csv::cell;

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

// Eq.-29 profile as a function of the similarity pair (xi, chi): realized
// through the unit mapping nu = U0 = t = 1, p = chi^2, y = xi.
double profile_xi(double xi, double chi, double beta, const ProfileSpec& spec) {
    const auto params = FluidParameters::from_kinematic(1.0, chi * chi);
    const FlowState state(1.0, 1.0, xi, FractionalOrder(beta));
    return kinematics::velocity(params, state, spec);
}

// Example-1 velocity at (y, t) for ratio pv = p/nu (nu = 1, U0 = 1).
double velocity_example1(double y, double t, double pv, double beta, double n) {
    const auto params = FluidParameters::from_kinematic(1.0, pv);
    const FlowState state(1.0, t, y, FractionalOrder(beta));
    return kinematics::velocity(params, state, ProfileSpec::fixed(n));
}

// Example-2 dimensionless velocity at (y*, t*) for a given eta: the
// dimensionless system coincides with the SI one under nu = U0 = 1,
// p = eta, t = t*, y = y*.
double velocity_example2(double y_star, double t_star, double eta, double beta,
                         double n) {
    const auto params = FluidParameters::from_kinematic(1.0, eta);
    const FlowState state(1.0, t_star, y_star, FractionalOrder(beta));
    return kinematics::velocity(params, state, ProfileSpec::fixed(n));
}

Table delta2_table(const std::string& name, double t_lo, double t_hi, int count) {
    static const double betas[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    const double eta = 1.0;
    Table t;
    t.name = name;
    t.config_stamp = "figure=" + name + " eta=1 beta=0.1,0.3,0.5,0.7,0.9 t_star=" +
                     fmt("%g:%g", t_lo, t_hi) + fmt(" points=%g", double(count));
    t.columns = {"t_star"};
    for (double b : betas) t.columns.push_back(fmt("Delta2_beta%g", b));
    for (int i = 0; i < count; ++i) {
        const double ts = t_lo + (t_hi - t_lo) * i / (count - 1);
        std::vector<std::string> row{cell(ts)};
        for (double b : betas) {
            const double d2 = std::sqrt(1.0 + eta * groups::j_beta(b) / std::pow(ts, b));
            row.push_back(cell(d2));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table fig1d_table() {
    Table t;
    t.name = "fig1d";
    t.config_stamp =
        "figure=1d D0=0 profiles=n2,n3,n2.35,adaptive(n0=1.675,kj=0.5) xi=0:5:0.01";
    t.columns = {"xi", "u_n2", "u_n3", "u_n2.35", "u_adaptive"};
    const auto adaptive = ProfileSpec::self_adaptive();
    for (int i = 0; i <= 500; ++i) {
        const double xi = 0.01 * i;
        t.rows.push_back({cell(xi),
                          cell(profile_xi(xi, 0.0, 0.5, ProfileSpec::fixed(2.0))),
                          cell(profile_xi(xi, 0.0, 0.5, ProfileSpec::fixed(3.0))),
                          cell(profile_xi(xi, 0.0, 0.5, ProfileSpec::fixed(2.35))),
                          cell(profile_xi(xi, 0.0, 0.5, adaptive))});
    }
    return t;
}

std::vector<Table> fig2_tables() {
    static const double chis[] = {0.0, 0.5, 1.0, 2.0, 4.0};
    static const double betas[] = {0.1, 0.5, 0.9};
    static const double exps[] = {2.0, 3.0};
    static const char* panels[] = {"a", "b", "c", "d", "e", "f"};
    std::vector<Table> out;
    int panel = 0;
    for (double beta : betas) {
        for (double n : exps) {
            Table t;
            t.name = std::string("fig2") + panels[panel++];
            t.config_stamp = fmt("figure=2 beta=%g n=%g", beta, n) +
                             " chi=0,0.5,1,2,4 xi=0:4:0.01";
            t.columns = {"xi"};
            for (double chi : chis) t.columns.push_back(fmt("u_chi%g", chi));
            const auto spec = ProfileSpec::fixed(n);
            for (int i = 0; i <= 400; ++i) {
                const double xi = 0.01 * i;
                std::vector<std::string> row{cell(xi)};
                for (double chi : chis) row.push_back(cell(profile_xi(xi, chi, beta, spec)));
                t.rows.push_back(std::move(row));
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

Table fig3_table() {
    static const double ratios[] = {0.1, 0.5, 1.0, 5.0, 10.0};
    const double y = 0.1;
    Table t;
    t.name = "fig3";
    t.config_stamp = "figure=3 example=1 n=2 beta=0.5 y=0.1 pv=0.1,0.5,1,5,10 t=0.001:0.1:0.001";
    t.columns = {"t"};
    for (double pv : ratios) t.columns.push_back(fmt("u_pv%g", pv));
    for (int i = 1; i <= 100; ++i) {
        const double time = 0.001 * i;
        std::vector<std::string> row{cell(time)};
        for (double pv : ratios) row.push_back(cell(velocity_example1(y, time, pv, 0.5, 2.0)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<Table> fig4_tables() {
    static const double times[] = {0.1, 0.5, 1.0};
    std::vector<Table> out;

    for (auto [name, y] : {std::pair<const char*, double>{"fig4a", 0.1}, {"fig4b", 1.0}}) {
        Table t;
        t.name = name;
        t.config_stamp = fmt("figure=4 example=1 n=2 beta=0.5 y=%g", y) +
                         " pv=0.01:10:0.01 t=0.1,0.5,1";
        t.columns = {"pv"};
        for (double time : times) t.columns.push_back(fmt("u_t%g", time));
        for (int i = 1; i <= 1000; ++i) {
            const double pv = 0.01 * i;
            std::vector<std::string> row{cell(pv)};
            for (double time : times) row.push_back(cell(velocity_example1(y, time, pv, 0.5, 2.0)));
            t.rows.push_back(std::move(row));
        }
        out.push_back(std::move(t));
    }

    for (auto [name, time] : {std::pair<const char*, double>{"fig4c", 0.1}, {"fig4d", 1.0}}) {
        Table t;
        t.name = name;
        t.config_stamp = fmt("figure=4 example=1 n=2 beta=0.5 t=%g", time) +
                         " pv=0.1:10:0.1 y=0:4:0.05";
        t.columns = {"pv", "y", "u"};
        for (int i = 1; i <= 100; ++i) {
            const double pv = 0.1 * i;
            for (int k = 0; k <= 80; ++k) {
                const double y = 0.05 * k;
                t.rows.push_back({cell(pv), cell(y),
                                  cell(velocity_example1(y, time, pv, 0.5, 2.0))});
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Table> fig5_tables() {
    static const double ratios[] = {1.0, 5.0, 10.0, 20.0};
    static const char* panels[] = {"a", "b", "c", "d"};
    const double y = 0.5;
    std::vector<Table> out;
    int panel = 0;
    for (double pv : ratios) {
        Table t;
        t.name = std::string("fig5") + panels[panel++];
        t.config_stamp = fmt("figure=5 example=1 n=2 y=0.5 pv=%g", pv) +
                         " t=0.1:1:0.02 beta=0.1:0.9:0.02";
        t.columns = {"t", "beta", "u"};
        for (int i = 0; i <= 45; ++i) {
            const double time = 0.1 + 0.02 * i;
            for (int k = 0; k <= 40; ++k) {
                const double beta = 0.1 + 0.02 * k;
                t.rows.push_back({cell(time), cell(beta),
                                  cell(velocity_example1(y, time, pv, beta, 2.0))});
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Table> fig6_tables() {
    static const double etas[] = {0.0, 1.0, 5.0, 10.0, 20.0};
    static const double t_stars[] = {0.1, 1.0, 10.0};
    static const char* panels[] = {"a", "b", "c"};
    std::vector<Table> out;
    int panel = 0;
    for (double ts : t_stars) {
        Table t;
        t.name = std::string("fig6") + panels[panel++];
        t.config_stamp = fmt("figure=6 example=2 n=2 beta=0.5 t_star=%g", ts) +
                         " eta=0,1,5,10,20 y_star=0:30:0.05";
        t.columns = {"y_star"};
        for (double eta : etas) t.columns.push_back(fmt("u_eta%g", eta));
        for (int i = 0; i <= 600; ++i) {
            const double ys = 0.05 * i;
            std::vector<std::string> row{cell(ys)};
            for (double eta : etas) row.push_back(cell(velocity_example2(ys, ts, eta, 0.5, 2.0)));
            t.rows.push_back(std::move(row));
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::vector<std::string> known_ids() {
    return {"1a", "1b", "1c", "1d", "2", "3", "4", "5", "6"};
}

std::vector<Table> generate(const std::string& id) {
    if (id == "1a") return {delta2_table("fig1a", 0.01, 2.0, 200)};
    if (id == "1b") return {delta2_table("fig1b", 0.01, 20.0, 200)};
    if (id == "1c") return {delta2_table("fig1c", 0.01, 200.0, 200)};
    if (id == "1d") return {fig1d_table()};
    if (id == "2") return fig2_tables();
    if (id == "3") return {fig3_table()};
    if (id == "4") return fig4_tables();
    if (id == "5") return fig5_tables();
    if (id == "6") return fig6_tables();
    throw std::invalid_argument("figures: unknown figure id '" + id +
                                "' (valid: 1a 1b 1c 1d 2 3 4 5 6)");
}

}  // namespace fracstokes::figures
