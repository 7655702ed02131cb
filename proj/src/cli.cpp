#include "pwsb/cli.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pwsb/io.hpp"
#include "pwsb/schema.hpp"
#include "pwsb/verify.hpp"
#include "pwsb/zoo.hpp"

namespace pwsb {

namespace {

struct ModelArgs {
    std::string positional;  // "zoo:NAME" or a file path
    std::string model_file;
    std::string zoo_name;
    std::string mechanism;
    std::vector<std::string> params;
    std::string mu;  // scalar, or lo..hi for the scaling command
};

void add_model_options(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("source", args.positional, "model source: zoo:NAME or a document path");
    cmd->add_option("--model", args.model_file, "model document path");
    cmd->add_option("--zoo", args.zoo_name, "zoo model name");
    cmd->add_option("--mechanism", args.mechanism,
                    "mechanism override for relay-style zoo models");
    cmd->add_option("--param", args.params, "parameter override k=v (repeatable)");
    cmd->add_option("--mu", args.mu, "bifurcation parameter value (lo..hi for scaling)");
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const std::string& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ModelError("--param expects k=v, got '" + kv + "'");
        out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return out;
}

PWSystem build_system(const ModelArgs& args) {
    std::string zoo = args.zoo_name;
    std::string file = args.model_file;
    if (!args.positional.empty()) {
        if (args.positional.rfind("zoo:", 0) == 0)
            zoo = args.positional.substr(4);
        else
            file = args.positional;
    }
    PWSystem sys;
    if (!zoo.empty()) {
        sys = zoo_build_mech(zoo, args.mechanism, parse_params(args.params));
    } else if (!file.empty()) {
        sys = load_model_file(file);
    } else {
        throw ModelError("no model given: use zoo:NAME, --zoo, or --model");
    }
    if (!args.mu.empty()) {
        if (args.mu.find("..") != std::string::npos)
            throw ModelError("--mu ranges (lo..hi) are only meaningful for the scaling command");
        sys.mu = std::stod(args.mu);
    }
    return sys;
}

struct GridSpec {
    double lo = 0.0, hi = 0.0;
    int n = 0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char colon1, colon2;
    std::istringstream ss(text);
    if (!(ss >> g.lo >> colon1 >> g.hi >> colon2 >> g.n) || colon1 != ':' || colon2 != ':')
        throw ModelError("--mu-grid expects lo:hi:n, got '" + text + "'");
    if (g.n < 2 || g.lo == 0.0 || g.hi == 0.0 || (g.lo > 0) != (g.hi > 0))
        throw ModelError("--mu-grid wants a geometric range with matching signs and n >= 2");
    return g;
}

std::vector<double> geometric(const GridSpec& g) {
    std::vector<double> v(g.n);
    const double ratio = std::pow(g.hi / g.lo, 1.0 / (g.n - 1));
    double x = g.lo;
    for (int i = 0; i < g.n; ++i, x *= ratio) v[i] = x;
    return v;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw ModelError("--mu range expects lo..hi, got '" + text + "'");
    return {std::stod(text.substr(0, pos)), std::stod(text.substr(pos + 2))};
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_file(out_path, content);
}

SimPolicy policy_from(double tol, const std::string& exit_side, std::size_t events_max) {
    SimPolicy p;
    if (tol > 0.0) {
        p.abs_tol = tol * 1e-2;
        p.rel_tol = tol;
    }
    if (exit_side == "left")
        p.repelling_exit = ExitSide::Left;
    else if (exit_side == "right")
        p.repelling_exit = ExitSide::Right;
    else if (!exit_side.empty())
        throw ModelError("--policy-exit expects left|right");
    if (events_max > 0) p.max_events = events_max;
    return p;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"piecewise-smooth Hopf-like bifurcation toolkit"};
    app.require_subcommand(1);

    // shared options
    std::string out_path;
    double tol = 0.0;
    std::string exit_side;
    std::size_t events_max = 0;

    // --- simulate ---
    auto* sim = app.add_subcommand("simulate", "integrate a trajectory, emit CSV");
    ModelArgs sim_model;
    add_model_options(sim, sim_model);
    double tmax = 10.0;
    std::vector<double> state0{0.1, 0.1};
    sim->add_option("--tmax", tmax, "integration horizon");
    sim->add_option("--state", state0, "initial state x,y")->expected(2)->delimiter(',');
    sim->add_option("--out", out_path, "output path (default stdout)");
    sim->add_option("--tol", tol, "integration tolerance");
    sim->add_option("--policy-exit", exit_side, "repelling-region exit side: left|right");
    sim->add_option("--events-max", events_max, "event budget");

    // --- classify ---
    auto* cls = app.add_subcommand("classify", "classify the bifurcation, emit report JSON");
    ModelArgs cls_model;
    add_model_options(cls, cls_model);
    double mu0 = 0.0;
    cls->add_option("--mu0", mu0, "candidate bifurcation parameter value");
    cls->add_option("--out", out_path, "output path (default stdout)");

    // --- diagram ---
    auto* dia = app.add_subcommand("diagram", "sweep mu, emit bifurcation-diagram CSV");
    ModelArgs dia_model;
    add_model_options(dia, dia_model);
    std::string grid_text;
    double r_hi = 1.0;
    dia->add_option("--mu-grid", grid_text, "geometric grid lo:hi:n")->required();
    dia->add_option("--r-max", r_hi, "cycle search upper radius");
    dia->add_option("--out", out_path, "output path (default stdout)");
    dia->add_option("--tol", tol, "integration tolerance");
    dia->add_option("--policy-exit", exit_side, "repelling-region exit side");
    dia->add_option("--events-max", events_max, "event budget");

    // --- scaling ---
    auto* sca = app.add_subcommand("scaling", "fit amplitude/period scaling exponents");
    ModelArgs sca_model;
    add_model_options(sca, sca_model);
    std::string mu_range;
    int n_points = 10;
    std::string csv_out;
    sca->add_option("--mu-range", mu_range, "geometric mu range lo..hi");
    sca->add_option("--points", n_points, "number of grid points");
    sca->add_option("--out", out_path, "JSON output path (default stdout)");
    sca->add_option("--csv", csv_out, "per-point CSV output path");
    sca->add_option("--tol", tol, "integration tolerance");

    // --- verify-lemmas ---
    auto* ver = app.add_subcommand("verify-lemmas",
                                   "run the return-map verification battery");
    ver->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (sim->parsed()) {
            PWSystem sys = build_system(sim_model);
            SimPolicy pol = policy_from(tol, exit_side, events_max);
            Trajectory tr = simulate(sys, {state0[0], state0[1]}, tmax, pol);
            emit(out_path, trajectory_csv(tr));
            return 0;
        }
        if (cls->parsed()) {
            PWSystem sys = build_system(cls_model);
            HLBReport rep = classify(sys, mu0);
            if (rep.classified() && rep.period_form == PeriodForm::Unavailable) {
                try {
                    rep.predicted_period = predicted_period(rep, sys);
                    rep.period_form = PeriodForm::Limit;
                } catch (const std::exception&) {
                }
            }
            emit(out_path, report_json(rep, sys.name, well_posedness_issues(sys)));
            return rep.classified() ? 0 : 2;
        }
        if (dia->parsed()) {
            PWSystem sys = build_system(dia_model);
            SweepOptions opt;
            opt.search.policy = policy_from(tol, exit_side, events_max);
            opt.search.r_hi = r_hi;
            std::vector<double> grid = geometric(parse_grid(grid_text));
            emit(out_path, diagram_csv(sweep_diagram(sys, grid, opt)));
            return 0;
        }
        if (sca->parsed()) {
            // The mu range may arrive as --mu lo..hi or --mu-range lo..hi.
            std::string range_text = mu_range;
            if (range_text.empty() && sca_model.mu.find("..") != std::string::npos) {
                range_text = sca_model.mu;
                sca_model.mu.clear();
            }
            if (range_text.empty())
                throw ModelError("scaling needs a mu range: --mu lo..hi or --mu-range lo..hi");
            PWSystem sys = build_system(sca_model);
            auto [lo, hi] = parse_range(range_text);
            HLBReport rep = classify(sys, 0.0);
            ScalingOptions opt;
            opt.n_points = n_points;
            if (tol > 0.0) {
                opt.search.policy.rel_tol = tol;
                opt.search.policy.abs_tol = tol * 1e-2;
            }
            if (rep.period_form == PeriodForm::Limit &&
                rep.exponents.period == Rational(0))
                opt.period_limit = rep.predicted_period;
            ScalingFit fit = fit_scaling(sys, rep.kind, lo, hi, opt);
            if (!csv_out.empty()) write_file(csv_out, scaling_csv(fit));
            emit(out_path, scaling_json(fit, sys.name));
            return 0;
        }
        if (ver->parsed()) {
            std::ostringstream table;
            bool all = true;
            table << "# schema: pwsb-lemma-verification-v1\n";
            table << "status,check,value,expected,error\n";
            for (const LemmaCheck& c : verify_lemmas()) {
                all = all && c.passed;
                table << (c.passed ? "PASS" : "FAIL") << ',' << c.name << ','
                      << format_double(c.value) << ',' << format_double(c.expected) << ','
                      << format_double(c.error) << '\n';
            }
            emit(out_path, table.str());
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fputs(error_json(command, e.what()).c_str(), stderr);
        return 1;
    }
    return 1;
}

}  // namespace pwsb
