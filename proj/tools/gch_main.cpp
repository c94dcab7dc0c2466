#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gch/errors.hpp"
#include "gch/eta.hpp"
#include "gch/eulerian.hpp"
#include "gch/io.hpp"
#include "gch/solver.hpp"
#include "gch/verify.hpp"

namespace fs = std::filesystem;
using namespace gch;

namespace {

std::string label_for(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "t=%g", t);
    return buf;
}

std::vector<double> default_snapshot_times(const RunConfig& cfg) {
    if (!cfg.snapshot_times.empty()) return cfg.snapshot_times;
    std::vector<double> ts;
    for (int i = 0; i <= 4; ++i) ts.push_back(cfg.t_end * i / 4.0);
    return ts;
}

struct LagrangianRun {
    Trajectory traj;
    double dt = 0.0;
};

LagrangianRun run_lagrangian(const RunConfig& cfg) {
    InitialData data = make_initial(cfg.initial, cfg.span, 2 * cfg.n);
    GridSpec grid{cfg.n, cfg.span};
    LagrangianState s0 = forward_transform(data, grid);
    double E0 = energy(s0, cfg.params, 0.0).E;
    double dt = resolve_dt(cfg, E0);
    LagrangianRun run;
    run.dt = dt;
    run.traj.params = cfg.params;
    run.traj.snaps =
        integrate(s0, cfg.params, cfg.t_end, dt, default_snapshot_times(cfg));
    return run;
}

int cmd_simulate(const RunConfig& cfg) {
    auto wall0 = std::chrono::steady_clock::now();
    fs::path out = resolve_out_dir(cfg);
    fs::create_directories(out);

    for (SolverKind kind : cfg.solvers) {
        std::vector<std::pair<std::string, EulerianField>> snaps;
        if (kind == SolverKind::Lagrangian) {
            LagrangianRun run = run_lagrangian(cfg);
            std::vector<EnergyReport> energies;
            for (const auto& s : run.traj.snaps) {
                snaps.emplace_back(label_for(s.report.T),
                                   reconstruct(s.state, cfg.params.lambda));
                energies.push_back(s.report);
            }
            write_energy_csv((out / "energy.csv").string(), energies);
            write_trajectory_json((out / "trajectory.json").string(), run.traj);
        } else if (kind == SolverKind::Eta) {
            InitialData data = make_initial(cfg.initial, cfg.span, 2 * cfg.n);
            EtaState s0 = eta_from_initial(data, GridSpec{cfg.n, cfg.span});
            double E0 = data.h1_norm();
            double dt = resolve_dt(cfg, E0 * E0);
            auto states = integrate_eta(s0, cfg.params, cfg.t_end, dt,
                                        default_snapshot_times(cfg));
            for (const auto& s : states)
                snaps.emplace_back(label_for(s.t),
                                   reconstruct_eta(s, cfg.params.lambda));
        } else {
            InitialData data = make_initial(cfg.initial, cfg.x_span, 2 * cfg.nx);
            EulerianGrid g0 = eulerian_from_initial(data, cfg.nx, cfg.x_span);
            double E0 = data.h1_norm();
            double dt = resolve_dt(cfg, E0 * E0);
            auto grids = integrate_eulerian(g0, cfg.params, cfg.t_end, dt,
                                            default_snapshot_times(cfg));
            for (const auto& g : grids)
                snaps.emplace_back(label_for(g.t),
                                   to_field(g, cfg.params.lambda));
        }
        write_snapshots_csv(
            (out / (solver_name(kind) + "_snapshots.csv")).string(), snaps);
        nlohmann::json js = nlohmann::json::array();
        for (const auto& [label, f] : snaps)
            js.push_back({{"label", label},
                          {"t", f.t},
                          {"x", f.x},
                          {"u", f.u},
                          {"ux", f.ux},
                          {"energy_density", f.energy_density}});
        std::ofstream jf(out / (solver_name(kind) + "_snapshots.json"));
        jf << js.dump(1) << '\n';
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                wall0)
                      .count();
    write_manifest((out / "manifest.json").string(), cfg, wall);
    return 0;
}

double get_tol(const RunConfig& cfg, const std::string& key, double dflt) {
    auto it = cfg.tolerances.find(key);
    return it == cfg.tolerances.end() ? dflt : it->second;
}

int cmd_verify(const RunConfig& cfg, const std::string& run_dir) {
    Trajectory traj;
    if (!run_dir.empty()) {
        traj = read_trajectory_json(
            (fs::path(run_dir) / "trajectory.json").string());
    } else {
        traj = run_lagrangian(cfg).traj;
    }
    if (traj.snaps.empty()) throw MissingArtifacts("trajectory has no snapshots");

    double t_end = traj.snaps.back().state.T;
    const auto& s0 = traj.snaps.front().state;
    double xw = 0.9 * std::min(-s0.x.front(), s0.x.back());
    auto battery = default_battery(t_end, xw);

    double tol_weak = get_tol(cfg, "weak_form", 1e-2);
    double tol_bal = get_tol(cfg, "balance_law", 1e-2);

    nlohmann::json checks = nlohmann::json::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, double value, double tol,
                   bool gated) {
        bool pass = !gated || value <= tol;
        all_pass = all_pass && pass;
        checks.push_back({{"name", name},
                          {"value", value},
                          {"tolerance", gated ? tol : 0.0},
                          {"gated", gated},
                          {"pass", pass}});
        std::printf("%-34s %12.4e %s\n", name.c_str(), value,
                    gated ? (pass ? "pass" : "FAIL") : "(info)");
    };

    // tolerances scale with the C1 size of the test function so narrow
    // (large-derivative) functions are not held to an absolute bar
    auto c1_size = [](const TestFunction& phi) {
        return phi.amp * (1.0 + 1.0 / phi.rt + 1.0 / phi.rx);
    };
    for (std::size_t i = 0; i < battery.size(); ++i)
        add("weak_form_residual_" + std::to_string(i),
            weak_form_residual(traj, battery[i]),
            tol_weak * c1_size(battery[i]), true);
    for (std::size_t i = 0; i < battery.size(); ++i)
        add("balance_law_residual_" + std::to_string(i),
            balance_law_residual(traj, battery[i]),
            tol_bal * c1_size(battery[i]), true);
    if (traj.params.lambda != 0.0)
        add("balance_law_unweighted_0",
            balance_law_residual(traj, battery[0], false), 0.0, false);

    double worst_bound = 0.0;
    for (const auto& s : traj.snaps)
        if (s.report.E_bound > 0.0)
            worst_bound =
                std::max(worst_bound, s.report.E / s.report.E_bound - 1.0);
    add("energy_bound_excess", worst_bound, 1e-6, true);

    RegularityReport reg = regularity_check(traj);
    add("holder_quotient", reg.holder_quotient, 0.0, false);
    add("l2_time_quotient", reg.l2_time_quotient, 0.0, false);
    BreakingReport br = breaking_diagnostics(traj);
    add("breaking_time_fraction", br.breaking_time_fraction, 0.0, false);

    fs::path out = resolve_out_dir(cfg);
    fs::create_directories(out);
    nlohmann::json rep = {{"checks", checks}, {"pass", all_pass}};
    std::ofstream rf(out / "verify_report.json");
    rf << rep.dump(2) << '\n';
    std::printf("overall: %s\n", all_pass ? "pass" : "FAIL");
    return all_pass ? 0 : 1;
}

int cmd_compare(const RunConfig& cfg) {
    if (cfg.solvers.size() < 2)
        throw ConfigError("compare needs at least two solvers");
    auto times = default_snapshot_times(cfg);

    std::vector<std::pair<SolverKind, std::vector<EulerianField>>> fields;
    for (SolverKind kind : cfg.solvers) {
        std::vector<EulerianField> fs_;
        if (kind == SolverKind::Lagrangian) {
            for (const auto& s : run_lagrangian(cfg).traj.snaps)
                fs_.push_back(reconstruct(s.state, cfg.params.lambda));
        } else if (kind == SolverKind::Eta) {
            InitialData data = make_initial(cfg.initial, cfg.span, 2 * cfg.n);
            EtaState s0 = eta_from_initial(data, GridSpec{cfg.n, cfg.span});
            double E0 = data.h1_norm();
            for (const auto& s : integrate_eta(s0, cfg.params, cfg.t_end,
                                               resolve_dt(cfg, E0 * E0), times))
                fs_.push_back(reconstruct_eta(s, cfg.params.lambda));
        } else {
            InitialData data = make_initial(cfg.initial, cfg.x_span, 2 * cfg.nx);
            EulerianGrid g0 = eulerian_from_initial(data, cfg.nx, cfg.x_span);
            double E0 = data.h1_norm();
            for (const auto& g :
                 integrate_eulerian(g0, cfg.params, cfg.t_end,
                                    resolve_dt(cfg, E0 * E0), times))
                fs_.push_back(to_field(g, cfg.params.lambda));
        }
        fields.emplace_back(kind, std::move(fs_));
    }

    std::size_t n_snaps = fields.front().second.size();
    for (const auto& [kind, fs_] : fields)
        if (fs_.size() != n_snaps)
            throw WindowMismatch("solvers produced different snapshot counts");

    fs::path out = resolve_out_dir(cfg);
    fs::create_directories(out);
    std::ofstream csv(out / "compare.csv");
    csv << "t,solver_a,solver_b,l2,linf\n";
    for (std::size_t s = 0; s < n_snaps; ++s) {
        for (std::size_t a = 0; a < fields.size(); ++a)
            for (std::size_t b = a + 1; b < fields.size(); ++b) {
                const auto& fa = fields[a].second[s];
                const auto& fb = fields[b].second[s];
                double lo = std::max(fa.x.front(), fb.x.front());
                double hi = std::min(fa.x.back(), fb.x.back());
                if (!(hi > lo))
                    throw WindowMismatch("no common spatial window");
                const int m = 4001;
                double l2 = 0.0, linf = 0.0, dq = (hi - lo) / (m - 1);
                for (int q = 0; q < m; ++q) {
                    double xq = std::min(lo + dq * q, hi);
                    double d = eval_u_at(fa, xq) - eval_u_at(fb, xq);
                    l2 += d * d * dq;
                    linf = std::max(linf, std::abs(d));
                }
                l2 = std::sqrt(l2);
                char row[160];
                std::snprintf(row, sizeof row, "%.17g,%s,%s,%.17g,%.17g\n",
                              fa.t, solver_name(fields[a].first).c_str(),
                              solver_name(fields[b].first).c_str(), l2, linf);
                csv << row;
                std::printf("t=%-8g %s vs %s: L2 %.4e  Linf %.4e\n", fa.t,
                            solver_name(fields[a].first).c_str(),
                            solver_name(fields[b].first).c_str(), l2, linf);
            }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic-coordinate solvers and verification checks "
                 "for a family of nonlocal shallow-water equations"};
    app.require_subcommand(1);

    std::string cfg_path, run_dir;
    auto* sim = app.add_subcommand("simulate", "Run solver(s), write outputs");
    sim->add_option("-c,--config", cfg_path, "Run configuration file")
        ->required();
    auto* ver = app.add_subcommand("verify", "Check weak-solution properties");
    ver->add_option("-c,--config", cfg_path, "Run configuration file")
        ->required();
    ver->add_option("--run-dir", run_dir,
                    "Verify an existing run directory instead of re-running");
    auto* cmp = app.add_subcommand("compare", "Cross-solver distance table");
    cmp->add_option("-c,--config", cfg_path, "Run configuration file")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = parse_config(cfg_path);
        if (sim->parsed()) return cmd_simulate(cfg);
        if (ver->parsed()) return cmd_verify(cfg, run_dir);
        return cmd_compare(cfg);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
