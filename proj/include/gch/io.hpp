#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gch/lagrangian.hpp"
#include "gch/model.hpp"
#include "gch/solver.hpp"
#include "gch/verify.hpp"

namespace gch {

enum class SolverKind { Lagrangian, Eta, Eulerian };

struct InitialSpec {
    std::string kind = "gaussian";  // zero | gaussian | peakon | steep | file
    double amp = 0.25, width = 1.0, center = 0.0, c = 1.0;
    std::string path;  // for kind = file: CSV with columns x,u0,u0x
};

/// Resolved run configuration (INI-style file; see parse_config).
struct RunConfig {
    std::string preset = "ch";
    GchParams params;  // resolved: preset first, explicit keys override

    InitialSpec initial;

    int n = 1024;          // label-grid nodes (Y- and eta-solvers)
    double span = 20.0;    // label-grid half width
    int nx = 2001;         // physical grid nodes (Eulerian reference)
    double x_span = 30.0;  // physical half width

    double t_end = 1.0;
    double dt = -1.0;  // <= 0 means "auto" (step-size rule)
    std::vector<double> snapshot_times;

    std::vector<SolverKind> solvers = {SolverKind::Lagrangian};
    std::string out_dir = "out";
    std::map<std::string, double> tolerances;
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& name);

/// Output directory after applying the GCH_OUT environment override.
std::string resolve_out_dir(const RunConfig& cfg);

double resolve_dt(const RunConfig& cfg, double E0);

InitialData make_initial(const InitialSpec& spec, double span, int n_samples);

/// Snapshot CSV: label,x,u,ux_or_nan,energy_density (one row per node).
void write_snapshots_csv(
    const std::string& path,
    const std::vector<std::pair<std::string, EulerianField>>& snaps);

/// Energy CSV: T,E,E_bound,dE_dT_analytic,sup_u.
void write_energy_csv(const std::string& path,
                      const std::vector<EnergyReport>& rows);

/// Trajectory JSON: full solver state per snapshot, bit-exact double
/// round trip (shortest-representation doubles).
void write_trajectory_json(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory_json(const std::string& path);

void write_manifest(const std::string& path, const RunConfig& cfg,
                    double wall_seconds);

std::string solver_name(SolverKind kind);

}  // namespace gch
