#include "gch/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gch/errors.hpp"

namespace gch {

namespace {

using Section = std::map<std::string, std::pair<std::string, int>>;  // value, line

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& val, int line) {
    try {
        std::size_t pos = 0;
        double d = std::stod(val, &pos);
        if (pos != val.size()) throw std::invalid_argument(val);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("field '" + key + "' (line " + std::to_string(line) +
                          "): not a number: '" + val + "'");
    }
}

std::vector<double> to_list(const std::string& key, const std::string& val,
                            int line) {
    std::vector<double> out;
    std::istringstream ss(val);
    std::string tok;
    while (ss >> tok) {
        if (tok == ",") continue;
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        out.push_back(to_double(key, tok, line));
    }
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& name) {
    std::map<std::string, Section> sections;
    std::istringstream in(text);
    std::string line, section = "run";
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(name + " line " + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(name + " line " + std::to_string(lineno) +
                              ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        sections[section][key] = {val, lineno};
    }

    RunConfig cfg;
    auto get = [&](const std::string& sec, const std::string& key,
                   std::string* out, int* ln = nullptr) {
        auto si = sections.find(sec);
        if (si == sections.end()) return false;
        auto ki = si->second.find(key);
        if (ki == si->second.end()) return false;
        *out = ki->second.first;
        if (ln) *ln = ki->second.second;
        return true;
    };
    auto getd = [&](const std::string& sec, const std::string& key, double* out) {
        std::string v;
        int ln = 0;
        if (!get(sec, key, &v, &ln)) return false;
        *out = to_double(key, v, ln);
        return true;
    };

    // [model]
    std::string sval;
    int sline = 0;
    std::map<std::string, double> preset_args;
    if (auto si = sections.find("model"); si != sections.end())
        for (const auto& [key, vl] : si->second)
            if (key != "preset" && key != "h")
                preset_args[key] = to_double(key, vl.first, vl.second);
    if (get("model", "preset", &sval)) cfg.preset = sval;
    cfg.params = make_preset(cfg.preset, preset_args);
    for (const char* key : {"alpha", "beta", "k", "lambda"}) {
        double v;
        if (getd("model", key, &v)) {
            if (key == std::string("alpha")) cfg.params.alpha = v;
            if (key == std::string("beta")) cfg.params.beta = v;
            if (key == std::string("k")) cfg.params.k = v;
            if (key == std::string("lambda")) cfg.params.lambda = v;
        }
    }
    if (get("model", "h", &sval, &sline))
        cfg.params.h = NonlinearitySpec::polynomial(to_list("h", sval, sline));

    // [initial]
    if (get("initial", "kind", &sval)) cfg.initial.kind = sval;
    getd("initial", "amp", &cfg.initial.amp);
    getd("initial", "width", &cfg.initial.width);
    getd("initial", "center", &cfg.initial.center);
    getd("initial", "c", &cfg.initial.c);
    if (get("initial", "path", &sval)) cfg.initial.path = sval;

    // [grid]
    double dv;
    if (getd("grid", "n", &dv)) cfg.n = int(dv);
    getd("grid", "span", &cfg.span);
    if (getd("grid", "nx", &dv)) cfg.nx = int(dv);
    getd("grid", "x_span", &cfg.x_span);

    // [time]
    getd("time", "t_end", &cfg.t_end);
    if (get("time", "dt", &sval, &sline))
        cfg.dt = (sval == "auto") ? -1.0 : to_double("dt", sval, sline);
    if (get("time", "snapshots", &sval, &sline))
        cfg.snapshot_times = to_list("snapshots", sval, sline);

    // [run]
    if (get("run", "solver", &sval, &sline)) {
        cfg.solvers.clear();
        std::istringstream ss(sval);
        std::string tok;
        while (ss >> tok) {
            if (!tok.empty() && tok.back() == ',') tok.pop_back();
            if (tok == "lagrangian")
                cfg.solvers.push_back(SolverKind::Lagrangian);
            else if (tok == "eta")
                cfg.solvers.push_back(SolverKind::Eta);
            else if (tok == "eulerian")
                cfg.solvers.push_back(SolverKind::Eulerian);
            else if (tok == "all")
                cfg.solvers = {SolverKind::Lagrangian, SolverKind::Eta,
                               SolverKind::Eulerian};
            else
                throw ConfigError("field 'solver' (line " +
                                  std::to_string(sline) +
                                  "): unknown solver '" + tok + "'");
        }
    }
    if (get("run", "out_dir", &sval)) cfg.out_dir = sval;

    // [tolerances]
    if (auto si = sections.find("tolerances"); si != sections.end())
        for (const auto& [key, vl] : si->second)
            cfg.tolerances[key] = to_double(key, vl.first, vl.second);

    if (cfg.n < 3) throw ConfigError("field 'n': must be >= 3");
    if (!(cfg.t_end > 0.0)) throw ConfigError("field 't_end': must be > 0");
    if (!(cfg.span > 0.0) || !(cfg.x_span > 0.0))
        throw ConfigError("grid spans must be > 0");
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

std::string resolve_out_dir(const RunConfig& cfg) {
    if (const char* env = std::getenv("GCH_OUT"); env && *env) return env;
    return cfg.out_dir;
}

double resolve_dt(const RunConfig& cfg, double E0) {
    if (cfg.dt > 0.0) return cfg.dt;
    return suggest_dt(cfg.params, E0, cfg.t_end);
}

InitialData make_initial(const InitialSpec& spec, double span, int n_samples) {
    if (spec.kind == "zero") return initial_zero(span, n_samples);
    if (spec.kind == "gaussian")
        return initial_gaussian(spec.amp, spec.width, spec.center, span,
                                n_samples);
    if (spec.kind == "peakon")
        return initial_peakon(spec.c, spec.center, span, n_samples);
    if (spec.kind == "steep") return initial_steep(spec.amp, span, n_samples);
    if (spec.kind == "file") {
        std::ifstream in(spec.path);
        if (!in) throw ConfigError("cannot open initial-data file: " + spec.path);
        InitialData d;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            line = trim(line);
            if (line.empty()) continue;
            char c0 = line[0];
            bool numeric = (c0 >= '0' && c0 <= '9') || c0 == '-' || c0 == '+' ||
                           c0 == '.';
            if (!numeric) continue;  // header line
            for (auto& c : line)
                if (c == ',') c = ' ';
            std::istringstream ss(line);
            double x, u, ux;
            if (!(ss >> x >> u >> ux))
                throw CorruptData("initial-data file line " +
                                  std::to_string(lineno) +
                                  ": expected x,u0,u0x");
            d.x.push_back(x);
            d.u0.push_back(u);
            d.u0x.push_back(ux);
        }
        d.validate();
        return d;
    }
    throw ConfigError("unknown initial-data kind '" + spec.kind + "'");
}

void write_snapshots_csv(
    const std::string& path,
    const std::vector<std::pair<std::string, EulerianField>>& snaps) {
    std::ofstream out(path);
    out << "label,x,u,ux_or_nan,energy_density\n";
    for (const auto& [label, f] : snaps)
        for (std::size_t j = 0; j < f.x.size(); ++j)
            out << label << ',' << fmt(f.x[j]) << ',' << fmt(f.u[j]) << ','
                << fmt(f.ux[j]) << ',' << fmt(f.energy_density[j]) << '\n';
}

void write_energy_csv(const std::string& path,
                      const std::vector<EnergyReport>& rows) {
    std::ofstream out(path);
    out << "T,E,E_bound,dE_dT_analytic,sup_u\n";
    for (const auto& r : rows)
        out << fmt(r.T) << ',' << fmt(r.E) << ',' << fmt(r.E_bound) << ','
            << fmt(r.dE_dT_analytic) << ',' << fmt(r.sup_u) << '\n';
}

namespace {
nlohmann::json params_to_json(const GchParams& p) {
    return {{"alpha", p.alpha},
            {"beta", p.beta},
            {"k", p.k},
            {"lambda", p.lambda},
            {"h_coeffs", p.h.coeffs}};
}

GchParams params_from_json(const nlohmann::json& j) {
    GchParams p;
    p.alpha = j.at("alpha").get<double>();
    p.beta = j.at("beta").get<double>();
    p.k = j.at("k").get<double>();
    p.lambda = j.at("lambda").get<double>();
    p.h = NonlinearitySpec::polynomial(
        j.at("h_coeffs").get<std::vector<double>>());
    return p;
}
}  // namespace

void write_trajectory_json(const std::string& path, const Trajectory& traj) {
    nlohmann::json j;
    j["params"] = params_to_json(traj.params);
    j["snaps"] = nlohmann::json::array();
    for (const auto& s : traj.snaps) {
        nlohmann::json js = {
            {"T", s.state.T},   {"y0", s.state.y0}, {"dY", s.state.dY},
            {"u", s.state.u},   {"v", s.state.v},   {"xi", s.state.xi},
            {"x", s.state.x},
            {"report",
             {{"T", s.report.T},
              {"E", s.report.E},
              {"E_bound", s.report.E_bound},
              {"dE_dT_analytic", s.report.dE_dT_analytic},
              {"sup_u", s.report.sup_u}}}};
        j["snaps"].push_back(std::move(js));
    }
    std::ofstream out(path);
    out << j.dump(1) << '\n';
}

Trajectory read_trajectory_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingArtifacts("cannot open trajectory file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CorruptData(std::string("trajectory JSON: ") + e.what());
    }
    Trajectory traj;
    traj.params = params_from_json(j.at("params"));
    for (const auto& js : j.at("snaps")) {
        Snapshot s;
        s.state.T = js.at("T").get<double>();
        s.state.y0 = js.at("y0").get<double>();
        s.state.dY = js.at("dY").get<double>();
        s.state.u = js.at("u").get<std::vector<double>>();
        s.state.v = js.at("v").get<std::vector<double>>();
        s.state.xi = js.at("xi").get<std::vector<double>>();
        s.state.x = js.at("x").get<std::vector<double>>();
        const auto& jr = js.at("report");
        s.report.T = jr.at("T").get<double>();
        s.report.E = jr.at("E").get<double>();
        s.report.E_bound = jr.at("E_bound").get<double>();
        s.report.dE_dT_analytic = jr.at("dE_dT_analytic").get<double>();
        s.report.sup_u = jr.at("sup_u").get<double>();
        traj.snaps.push_back(std::move(s));
    }
    return traj;
}

void write_manifest(const std::string& path, const RunConfig& cfg,
                    double wall_seconds) {
    nlohmann::json j;
    j["version"] = "1.0";
    j["preset"] = cfg.preset;
    j["params"] = params_to_json(cfg.params);
    j["initial"] = {{"kind", cfg.initial.kind}, {"amp", cfg.initial.amp},
                    {"width", cfg.initial.width}, {"center", cfg.initial.center},
                    {"c", cfg.initial.c},         {"path", cfg.initial.path}};
    j["grid"] = {{"n", cfg.n},
                 {"span", cfg.span},
                 {"nx", cfg.nx},
                 {"x_span", cfg.x_span}};
    j["time"] = {{"t_end", cfg.t_end},
                 {"dt", cfg.dt},
                 {"snapshots", cfg.snapshot_times}};
    std::vector<std::string> names;
    for (auto s : cfg.solvers) names.push_back(solver_name(s));
    j["solvers"] = names;
    j["out_dir"] = cfg.out_dir;
    j["tolerances"] = cfg.tolerances;
    j["wall_seconds"] = wall_seconds;
    std::ofstream out(path);
    out << j.dump(2) << '\n';
}

std::string solver_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::Lagrangian: return "lagrangian";
        case SolverKind::Eta: return "eta";
        case SolverKind::Eulerian: return "eulerian";
    }
    return "?";
}

}  // namespace gch
