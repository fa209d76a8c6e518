#include "radlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "radlab/ball_lab.hpp"
#include "radlab/entire_solution.hpp"
#include "radlab/errors.hpp"
#include "radlab/table.hpp"

namespace radlab {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<double> power_grid(int k_min, int k_max) {
    std::vector<double> mu;
    for (int k = k_min; k <= k_max; ++k) mu.push_back(std::ldexp(1.0, k));
    return mu;
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Splices every `key = value` pair of the file(s) named by --config into the
// argument list as --key=value, right after the subcommand token.  Pairs
// whose flag already appears on the command line are dropped, so explicit
// flags always win.  Lines starting with # are comments.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> paths;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            paths.push_back(args[i + 1]);
        } else if (args[i].rfind("--config=", 0) == 0) {
            paths.push_back(args[i].substr(9));
        }
    }
    if (paths.empty()) return args;

    auto given_explicitly = [&](const std::string& key) {
        const std::string flag = "--" + key;
        for (std::size_t i = 1; i < args.size(); ++i) {
            if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) return true;
        }
        return false;
    };

    std::vector<std::pair<std::string, std::string>> pairs; // later keys overwrite
    for (const std::string& path : paths) {
        std::ifstream file(path);
        if (!file) throw domain_error("config: cannot open " + path);
        std::string line;
        int lineno = 0;
        while (std::getline(file, line)) {
            ++lineno;
            const std::string t = strip(line);
            if (t.empty() || t[0] == '#') continue;
            const auto eq = t.find('=');
            const std::string key = eq == std::string::npos ? "" : strip(t.substr(0, eq));
            if (key.empty() || key == "config")
                throw domain_error("config: expected `key = value` at " + path + ":" +
                                   std::to_string(lineno));
            const std::string value = strip(t.substr(eq + 1));
            bool replaced = false;
            for (auto& p : pairs) {
                if (p.first == key) {
                    p.second = value;
                    replaced = true;
                }
            }
            if (!replaced) pairs.emplace_back(key, value);
        }
    }

    std::vector<std::string> out;
    out.reserve(args.size() + pairs.size());
    out.push_back(args.front());
    for (const auto& [key, value] : pairs) {
        if (!given_explicitly(key)) out.push_back("--" + key + "=" + value);
    }
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

void add_common(CLI::App* sc, RunConfig& cfg, bool with_gamma) {
    sc->add_option("--n", cfg.params.n, "dimension, integer >= 3");
    if (with_gamma) sc->add_option("--gamma", cfg.params.gamma, "nonlinearity exponent");
    sc->add_flag("--oracle", cfg.params.oracle_mode,
                 "admit gamma = 1 for closed-form validation");
    sc->add_option("--tol-ode", cfg.params.tol_ode, "integrator step tolerance");
    sc->add_option("--tol-root", cfg.params.tol_root, "first-zero location tolerance");
    sc->add_option("--r-max", cfg.params.r_max, "give up if no zero before this radius");
    sc->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--output", cfg.output, "write the table to this file");
    sc->add_option("--config", cfg.config_path, "key = value option file; command line wins");
}

Table ground_table() {
    Table t;
    t.columns = {"n",           "gamma",         "r_star",      "alpha_star",
                 "lambda_flux", "lambda_flux_quad", "lambda_mass", "q"};
    return t;
}

void append_ground_row(Table& t, const GroundState& gs) {
    t.add_row({std::int64_t(gs.params.n), gs.params.gamma, gs.r_star, gs.alpha_star,
               gs.lambda_flux, gs.lambda_flux_quad, gs.lambda_mass, gs.q});
}

Table run_ground(const RunConfig& cfg) {
    Table t = ground_table();
    append_ground_row(t, ground_state(cfg.params));
    return t;
}

Table run_sweep(const RunConfig& cfg) {
    if (cfg.steps < 1) throw domain_error("sweep: steps must be >= 1");
    if (!(cfg.gamma_min <= cfg.gamma_max))
        throw domain_error("sweep: need gamma-min <= gamma-max");
    std::vector<ProblemParams> grid;
    for (int i = 0; i < cfg.steps; ++i) {
        ProblemParams p = cfg.params;
        p.gamma = cfg.steps == 1 ? cfg.gamma_min
                                 : cfg.gamma_min + (cfg.gamma_max - cfg.gamma_min) * i /
                                                       double(cfg.steps - 1);
        p.validate(); // all grid points are checked before any solve starts
        grid.push_back(p);
    }
    Table t = ground_table();
    for (const auto& p : grid) append_ground_row(t, ground_state(p));
    return t;
}

Table run_entire(const RunConfig& cfg) {
    auto gs = std::make_shared<const GroundState>(ground_state(cfg.params));
    const EntireSolution sol =
        entire_solution(gs, std::vector<double>(cfg.params.n, 0.0), cfg.mu);
    const FarField ff = far_field_constants(sol);

    std::vector<double> radii = cfg.radii;
    if (radii.empty()) {
        if (cfg.radii_count < 2) throw domain_error("entire: radii-count must be >= 2");
        if (!(cfg.radii_span > 0.0)) throw domain_error("entire: radii-span must be positive");
        const double hi = cfg.radii_span * gs->r_star;
        const double lo = hi * 1e-3;
        radii.push_back(0.0);
        for (int i = 0; i + 1 < cfg.radii_count; ++i) {
            radii.push_back(lo * std::pow(hi / lo, i / double(cfg.radii_count - 2)));
        }
    }
    for (double s : radii)
        if (!(s >= 0.0) || !std::isfinite(s)) throw domain_error("entire: radii must be >= 0");

    Table t;
    t.columns = {"n", "gamma", "mu", "c_gamma", "c_gamma_prime", "s", "v", "newton",
                 "residual"};
    for (double s : radii) {
        const double v = eval_entire_radial(sol, s);
        const double N = newton_potential(sol, s);
        t.add_row({std::int64_t(cfg.params.n), cfg.params.gamma, cfg.mu, ff.c_gamma,
                   ff.c_gamma_prime, s, v, N, std::abs(v - (N - ff.c_gamma))});
    }
    return t;
}

std::vector<double> probe_grid(const RunConfig& cfg) {
    if (!cfg.mu_list.empty()) return cfg.mu_list;
    if (cfg.k_min > cfg.k_max) throw domain_error("probe: need k-min <= k-max");
    return power_grid(cfg.k_min, cfg.k_max);
}

Table run_blowup(const RunConfig& cfg) {
    const BlowupReport rep = blowup_family(cfg.params, cfg.A0, probe_grid(cfg), cfg.R);
    Table t;
    t.columns = {"n",  "gamma", "a0",     "r_ball", "quantum", "mu",
                 "sup", "inf",  "v_half", "v_edge", "mass",    "residual"};
    for (std::size_t i = 0; i < rep.mu_values.size(); ++i) {
        t.add_row({std::int64_t(cfg.params.n), cfg.params.gamma, cfg.A0, cfg.R, rep.quantum,
                   rep.mu_values[i], rep.sups[i], rep.infs[i], rep.v_half[i], rep.v_edge[i],
                   rep.masses[i], rep.residuals[i]});
    }
    return t;
}

Table run_supinf(const RunConfig& cfg) {
    const std::vector<double> grid = probe_grid(cfg);
    double c_used = cfg.C_used;
    if (c_used < 0.0) {
        const GroundState gs = ground_state(cfg.params);
        c_used = 2.0 * unit_sphere_area(cfg.params.n) * (cfg.params.n - 2.0) *
                 std::pow(gs.r_star, cfg.params.n - 2.0) / gs.lambda_flux;
    }
    const SupInfReport rep = sup_inf_probe(cfg.params, cfg.A0, grid, cfg.R, c_used);
    Table t;
    t.columns = {"n",     "gamma", "a0",  "r_ball", "c_used", "c_star",
                 "bound", "mu",    "sup", "inf",    "value"};
    for (std::size_t i = 0; i < rep.mu_values.size(); ++i) {
        t.add_row({std::int64_t(cfg.params.n), cfg.params.gamma, cfg.A0, cfg.R, rep.C_used,
                   rep.C_star, rep.bound, rep.mu_values[i], rep.sups[i], rep.infs[i],
                   rep.values[i]});
    }
    return t;
}

Table run_epsreg(const RunConfig& cfg) {
    if (cfg.eps_frac.empty()) throw domain_error("epsreg: eps-frac list is empty");
    // the quantum is fixed by (n, gamma); resolve it once so the fractions
    // can be validated before any probe runs
    const GroundState gs = ground_state(cfg.params);
    for (double f : cfg.eps_frac)
        if (!(f > 0.0) || !(f < 1.0))
            throw domain_error("epsreg: eps fractions must lie in (0, 1)");
    Table t;
    t.columns = {"n",   "gamma",    "r_ball",    "quantum",  "eps",
                 "c_of_eps", "mu_at_sup", "converged", "iterations"};
    for (double f : cfg.eps_frac) {
        const EpsRegReport rep = eps_regularity_probe(cfg.params, f * gs.lambda_mass, cfg.R);
        t.add_row({std::int64_t(cfg.params.n), cfg.params.gamma, cfg.R, rep.quantum, rep.eps,
                   rep.c_of_eps, rep.mu_at_sup, std::int64_t(rep.converged ? 1 : 0),
                   std::int64_t(rep.iterations)});
    }
    return t;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"radial ground states, entire solutions, and concentration probes"};
    app.set_version_flag("--version", "radlab 1.0.0");
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* ground = app.add_subcommand("ground", "one ground-state solve");
    add_common(ground, cfg, true);

    CLI::App* sweep = app.add_subcommand("sweep", "ground states over a gamma grid");
    add_common(sweep, cfg, false);
    sweep->add_option("--gamma-min", cfg.gamma_min, "lowest gamma")->required();
    sweep->add_option("--gamma-max", cfg.gamma_max, "highest gamma")->required();
    sweep->add_option("--steps", cfg.steps, "grid size, endpoints included");

    CLI::App* entire = app.add_subcommand("entire", "entire solution sampled over radii");
    add_common(entire, cfg, true);
    entire->add_option("--mu", cfg.mu, "concentration scale");
    entire->add_option("--radii", cfg.radii, "explicit radii")->delimiter(',');
    entire->add_option("--radii-count", cfg.radii_count, "points when --radii is absent");
    entire->add_option("--radii-span", cfg.radii_span, "top radius in units of r*");

    CLI::App* blowup = app.add_subcommand("blowup", "mass quantization along a blowup family");
    add_common(blowup, cfg, true);
    blowup->add_option("--a0", cfg.A0, "constant coefficient A");
    blowup->add_option("--r", cfg.R, "ball radius");
    blowup->add_option("--k-min", cfg.k_min, "mu grid starts at 2^k-min");
    blowup->add_option("--k-max", cfg.k_max, "mu grid ends at 2^k-max");
    blowup->add_option("--mu-list", cfg.mu_list, "explicit increasing mu grid")
        ->delimiter(',');

    CLI::App* supinf = app.add_subcommand("supinf", "sup + C inf probe over a blowup family");
    add_common(supinf, cfg, true);
    supinf->add_option("--a0", cfg.A0, "constant coefficient A");
    supinf->add_option("--r", cfg.R, "ball radius");
    supinf->add_option("--k-min", cfg.k_min, "mu grid starts at 2^k-min");
    supinf->add_option("--k-max", cfg.k_max, "mu grid ends at 2^k-max");
    supinf->add_option("--mu-list", cfg.mu_list, "explicit increasing mu grid")
        ->delimiter(',');
    supinf->add_option("--c-used", cfg.C_used, "coefficient C; default 2 C_star");

    CLI::App* epsreg = app.add_subcommand("epsreg", "concentration scale below the quantum");
    add_common(epsreg, cfg, true);
    epsreg->add_option("--r", cfg.R, "ball radius");
    epsreg->add_option("--eps-frac", cfg.eps_frac, "targets as fractions of the quantum")
        ->delimiter(',');

    std::vector<std::string> full;
    try {
        full = expand_config(args);
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        std::vector<std::string> rev(full.rbegin(), full.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        Table t;
        if (app.got_subcommand(ground)) {
            cfg.command = "ground";
            cfg.params.validate();
            t = run_ground(cfg);
        } else if (app.got_subcommand(sweep)) {
            cfg.command = "sweep";
            t = run_sweep(cfg);
        } else if (app.got_subcommand(entire)) {
            cfg.command = "entire";
            cfg.params.validate();
            if (!(cfg.mu > 0.0) || !std::isfinite(cfg.mu))
                throw domain_error("entire: mu must be positive and finite");
            t = run_entire(cfg);
        } else if (app.got_subcommand(blowup)) {
            cfg.command = "blowup";
            cfg.params.validate();
            t = run_blowup(cfg);
        } else if (app.got_subcommand(supinf)) {
            cfg.command = "supinf";
            cfg.params.validate();
            t = run_supinf(cfg);
        } else {
            cfg.command = "epsreg";
            cfg.params.validate();
            t = run_epsreg(cfg);
        }

        const TableFormat fmt = cfg.format == "json" ? TableFormat::json : TableFormat::csv;
        if (cfg.output.empty()) {
            emit_table(t, fmt, out);
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) {
                err << "error: cannot open output file " << cfg.output << "\n";
                return 1;
            }
            emit_table(t, fmt, file);
            if (!file.good()) {
                err << "error: short write to " << cfg.output << "\n";
                return 1;
            }
        }
        return 0;
    } catch (const zero_not_found& e) {
        err << "{\"error\":\"zero_not_found\",\"message\":\"" << json_escape(e.what())
            << "\",\"r_last\":" << format_double(e.r_last)
            << ",\"phi_last\":" << format_double(e.phi_last) << "}\n";
        return 1;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        err << "{\"error\":\"numerical\",\"message\":\"" << json_escape(e.what()) << "\"}\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace radlab
