// Copyright 2026 The falqon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "falqon/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "falqon/analysis.hpp"
#include "falqon/config.hpp"
#include "falqon/error.hpp"
#include "falqon/io.hpp"
#include "falqon/svg.hpp"

namespace falqon::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using io::format_real;

/// Raised for anything the user must fix before a command can start.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config_path;
    std::string graph_path;
    std::vector<std::size_t> regular;
    std::vector<std::string> er;
    std::optional<std::uint64_t> graph_seed;
    std::optional<double> delta_t;
    std::optional<std::size_t> depth;
    std::optional<double> lambda;
    std::optional<double> w;
    std::optional<std::string> noise;
    std::optional<double> epsilon_bar;
    std::optional<std::uint64_t> seed;
    std::vector<std::uint64_t> seeds;
    std::optional<std::size_t> num_seeds;
    std::vector<double> epsilon_bars;
    std::vector<double> lambdas;
    std::optional<std::size_t> draws;
    std::string out;
    std::size_t jobs = 1;
    bool svg = false;
    std::string trace_path;
};

void add_graph_source(CLI::App *cmd, Options &o) {
    cmd->add_option("--regular", o.regular, "Random d-regular graph: N D")->expected(2);
    cmd->add_option("--er", o.er, "Erdos-Renyi graph: N P")->expected(2);
}

void add_experiment_options(CLI::App *cmd, Options &o) {
    cmd->add_option("--config", o.config_path, "JSON experiment config");
    cmd->add_option("--graph", o.graph_path, "Edge-list file");
    add_graph_source(cmd, o);
    cmd->add_option("--graph-seed", o.graph_seed, "Seed for generated graphs");
    cmd->add_option("--delta-t", o.delta_t, "Layer time step");
    cmd->add_option("--depth", o.depth, "Number of layers");
    cmd->add_option("--lambda", o.lambda, "Regularization weight");
    cmd->add_option("--w", o.w, "Feedback gain");
    cmd->add_option("--noise", o.noise, "none | systematic | independent");
    cmd->add_option("--epsilon-bar", o.epsilon_bar, "Error magnitude");
    cmd->add_option("--seed", o.seed, "Noise seed");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_flag("--svg", o.svg, "Also write SVG plots");
}

Graph generated_graph(const Options &o, std::uint64_t seed) {
    if (!o.regular.empty()) {
        return random_regular(o.regular[0], o.regular[1], seed);
    }
    const auto n = static_cast<std::size_t>(io::parse_u64(o.er[0]));
    return erdos_renyi(n, io::parse_real(o.er[1]), seed);
}

ExperimentConfig prepare(const Options &o) {
    try {
        ExperimentConfig cfg = o.config_path.empty() ? ExperimentConfig{} : load_config(o.config_path);
        if (static_cast<int>(!o.graph_path.empty()) + static_cast<int>(!o.regular.empty()) +
                static_cast<int>(!o.er.empty()) > 1) {
            throw UsageError("--graph, --regular and --er are mutually exclusive");
        }
        if (!o.graph_path.empty()) {
            cfg.graph.type = GraphSource::Type::file;
            cfg.graph.path = o.graph_path;
        } else if (!o.regular.empty()) {
            cfg.graph.type = GraphSource::Type::regular;
            cfg.graph.n = o.regular[0];
            cfg.graph.d = o.regular[1];
        } else if (!o.er.empty()) {
            cfg.graph.type = GraphSource::Type::er;
            cfg.graph.n = static_cast<std::size_t>(io::parse_u64(o.er[0]));
            cfg.graph.p = io::parse_real(o.er[1]);
        }
        if (o.graph_seed) cfg.graph.seed = *o.graph_seed;
        if (o.delta_t) cfg.delta_t = *o.delta_t;
        if (o.depth) cfg.depth = *o.depth;
        if (o.lambda) cfg.lambda = *o.lambda;
        if (o.w) cfg.w = *o.w;
        if (o.noise) cfg.noise.kind = parse_noise_kind(*o.noise);
        if (o.epsilon_bar) cfg.noise.epsilon_bar = *o.epsilon_bar;
        if (o.seed) cfg.noise.seed = *o.seed;
        if (!o.seeds.empty()) cfg.seeds = o.seeds;
        if (o.num_seeds) {
            if (!o.seeds.empty()) {
                throw UsageError("--seeds and --num-seeds are mutually exclusive");
            }
            cfg.seeds.clear();
            for (std::size_t k = 1; k <= *o.num_seeds; ++k) {
                cfg.seeds.push_back(k);
            }
        }
        if (!o.epsilon_bars.empty()) cfg.epsilon_bars = o.epsilon_bars;
        if (!o.lambdas.empty()) cfg.lambdas = o.lambdas;
        if (o.draws) cfg.draws = *o.draws;
        if (!o.out.empty()) {
            cfg.out_dir = o.out;
        }
        if (cfg.out_dir.empty()) {
            const char *env = std::getenv(kOutDirEnv);
            cfg.out_dir = env != nullptr && *env != '\0' ? env : "falqon_out";
        }
        cfg.validate();
        return cfg;
    } catch (const UsageError &) {
        throw;
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
}

/// Builds the graph and checks the full run preconditions. Generation
/// failures propagate as runtime errors; everything else is a usage error.
Graph prepare_graph(const ExperimentConfig &cfg) {
    try {
        auto g = cfg.graph.build();
        cfg.run_config(g).validate();
        return g;
    } catch (const GenerationFailure &) {
        throw;
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
}

/// Output files of one command; removed again unless committed.
class OutputSet {
  public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}
    OutputSet(const OutputSet &) = delete;
    OutputSet &operator=(const OutputSet &) = delete;
    ~OutputSet() {
        if (committed_) {
            return;
        }
        std::error_code ec;
        for (const auto &p : written_) {
            fs::remove(p, ec);
        }
    }

    void write(const std::string &name, std::string_view contents) {
        const auto path = dir_ / name;
        fs::create_directories(path.parent_path());
        written_.push_back(path);
        io::write_file(path.string(), contents);
    }

    void commit() { committed_ = true; }
    [[nodiscard]] const fs::path &dir() const { return dir_; }

  private:
    fs::path dir_;
    std::vector<fs::path> written_;
    bool committed_ = false;
};

std::string format_bool(bool b) { return b ? "true" : "false"; }

std::string trace_csv(const RunTrace &trace) {
    io::CsvTable t{{"layer", "beta", "a", "cost", "cost_error"}, {}};
    for (const auto &r : trace.layers) {
        t.rows.push_back({std::to_string(r.t), format_real(r.beta), format_real(r.a),
                          format_real(r.cost), format_real(r.cost - trace.ground_energy)});
    }
    return io::format_csv(t);
}

std::vector<double> cost_errors(const RunTrace &trace) {
    std::vector<double> out;
    for (const auto &r : trace.layers) {
        out.push_back(r.cost - trace.ground_energy);
    }
    return out;
}

std::string label(double epsilon_bar, double lambda) {
    return "eps=" + format_real(epsilon_bar) + " lambda=" + format_real(lambda);
}

// ---------------------------------------------------------------- graph

int cmd_graph(const Options &o, std::ostream &out, std::ostream &err) {
    if (o.regular.empty() == o.er.empty()) {
        throw UsageError("graph: give exactly one of --regular N D or --er N P");
    }
    Graph g = [&] {
        try {
            return generated_graph(o, o.seed.value_or(42));
        } catch (const GenerationFailure &) {
            throw;
        } catch (const std::exception &e) {
            throw UsageError(e.what());
        }
    }();

    std::ostream &info = o.out.empty() ? err : out;
    if (o.out.empty()) {
        out << format_edge_list(g);
    } else {
        const fs::path path(o.out);
        if (path.has_parent_path()) {
            fs::create_directories(path.parent_path());
        }
        io::write_file(o.out, format_edge_list(g));
    }
    info << "nodes " << g.n_nodes() << " edges " << g.edges().size() << "\n";
    if (!o.regular.empty()) {
        info << "degree check " << (is_regular(g, o.regular[1]) ? "passed" : "FAILED") << "\n";
    }
    if (g.n_nodes() <= 20) {
        const auto mc = max_cut_brute_force(g);
        info << "maxcut " << format_real(mc.value) << " assignment " << mc.assignment << "\n";
    }
    return kSuccess;
}

// ---------------------------------------------------------------- run

int cmd_run(const Options &o, std::ostream &out) {
    const auto cfg = prepare(o);
    const auto graph = prepare_graph(cfg);
    const auto rc = cfg.run_config(graph);

    OutputSet files(cfg.out_dir);
    const auto trace = run(rc);
    const auto diag = maxcut_hamiltonian(graph);
    const auto driver = driver_x(graph.n_nodes());
    const auto lip = lipschitz_bound(trace, rc.delta_t, diag, driver, rc.noise.epsilon_bar);
    const auto report = assumption_report(diag, driver, uniform_state(graph.n_nodes()));
    const double final_cost = trace.layers.back().cost;
    const double success = success_probability(trace.final_state, trace.ground_states);

    json summary = {
        {"n_qubits", graph.n_nodes()},
        {"n_edges", graph.edges().size()},
        {"ground_energy", trace.ground_energy},
        {"ground_state_count", trace.ground_states.size()},
        {"final_cost", final_cost},
        {"cost_error", final_cost - trace.ground_energy},
        {"success_probability", success},
        {"l_falqon", lip.l_falqon},
        {"fidelity_lower_bound", lip.fidelity_lower_bound},
        {"bound_vacuous", lip.vacuous},
        {"layer_applications", trace.layer_applications},
        {"assumptions",
         {{"degenerate_eigenvalues", report.degenerate_eigenvalues},
          {"degenerate_gaps", report.degenerate_gaps},
          {"driver_connected", report.driver_connected},
          {"initial_energy_ok", report.initial_energy_ok},
          {"first_excited_energy", report.first_excited_energy}}},
        {"seeds", {{"graph", cfg.graph.seed}, {"noise", cfg.noise.seed}}},
        {"config", config_to_json(cfg)},
    };

    files.write("trace.csv", trace_csv(trace));
    files.write("summary.json", summary.dump(2) + "\n");
    if (o.svg) {
        files.write("trace.svg",
                    svg_line_plot({{label(rc.noise.epsilon_bar, rc.law.lambda), cost_errors(trace)}},
                                  "layer", "cost error"));
    }
    files.commit();
    out << "final cost " << format_real(final_cost) << " cost_error "
        << format_real(final_cost - trace.ground_energy) << " success_probability "
        << format_real(success) << "\n";
    return kSuccess;
}

// ---------------------------------------------------------------- sweep

struct Cell {
    double epsilon_bar;
    double lambda;
};

int cmd_sweep(const Options &o, std::ostream &out) {
    const auto cfg = prepare(o);
    const auto graph = prepare_graph(cfg);
    if (o.jobs < 1) {
        throw UsageError("--jobs must be >= 1");
    }

    const auto eps_list =
        cfg.epsilon_bars.empty() ? std::vector<double>{cfg.noise.epsilon_bar} : cfg.epsilon_bars;
    const auto lambda_list = cfg.lambdas.empty() ? std::vector<double>{cfg.lambda} : cfg.lambdas;
    const auto seeds = cfg.seeds.empty() ? std::vector<std::uint64_t>{cfg.noise.seed} : cfg.seeds;

    std::vector<Cell> cells;
    for (double eps : eps_list) {
        for (double lam : lambda_list) {
            cells.push_back({eps, lam});
        }
    }

    const std::size_t n_jobs = cells.size() * seeds.size();
    std::vector<std::optional<RunTrace>> results(n_jobs);
    std::vector<std::string> failures(n_jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t job = next++; job < n_jobs; job = next++) {
            const auto &cell = cells[job / seeds.size()];
            const auto seed = seeds[job % seeds.size()];
            try {
                results[job] = run(cfg.run_config(graph, cell.epsilon_bar, cell.lambda, seed));
            } catch (const std::exception &e) {
                failures[job] = "cell " + label(cell.epsilon_bar, cell.lambda) +
                                " seed=" + std::to_string(seed) + ": " + e.what();
            }
        }
    };
    const std::size_t n_threads = std::min(o.jobs, n_jobs);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < n_threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (const auto &f : failures) {
        if (!f.empty()) {
            throw std::runtime_error(f);
        }
    }

    OutputSet files(cfg.out_dir);
    io::CsvTable aggregate_csv{
        {"epsilon_bar", "lambda", "n_seeds", "mean_final_cost_error", "std_final_cost_error"}, {}};
    std::vector<Series> plot;
    const double p0 = results.front()->ground_energy;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        std::vector<RunTrace> runs;
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            runs.push_back(std::move(*results[c * seeds.size() + s]));
        }
        const auto summary = aggregate(runs, p0);
        const auto layers = layer_statistics(runs, p0);

        aggregate_csv.rows.push_back(
            {format_real(summary.epsilon_bar), format_real(summary.lambda),
             std::to_string(summary.n_seeds), format_real(summary.mean_final_cost_error),
             summary.std_final_cost_error ? format_real(*summary.std_final_cost_error) : ""});

        char prefix[32];
        std::snprintf(prefix, sizeof prefix, "cells/cell_%03zu", c);
        io::CsvTable layer_csv{{"layer", "mean_cost_error", "std_cost_error"}, {}};
        for (std::size_t t = 0; t < layers.mean_cost_error.size(); ++t) {
            layer_csv.rows.push_back({std::to_string(t + 1), format_real(layers.mean_cost_error[t]),
                                      format_real(layers.std_cost_error[t])});
        }
        io::CsvTable seed_csv{
            {"epsilon_bar", "lambda", "seed", "final_cost", "final_cost_error", "success_probability"},
            {}};
        for (std::size_t s = 0; s < runs.size(); ++s) {
            const double cost = runs[s].layers.back().cost;
            seed_csv.rows.push_back(
                {format_real(cells[c].epsilon_bar), format_real(cells[c].lambda),
                 std::to_string(seeds[s]), format_real(cost), format_real(cost - p0),
                 format_real(success_probability(runs[s].final_state, runs[s].ground_states))});
        }
        files.write(std::string(prefix) + "_layers.csv", io::format_csv(layer_csv));
        files.write(std::string(prefix) + "_seeds.csv", io::format_csv(seed_csv));
        plot.push_back({label(cells[c].epsilon_bar, cells[c].lambda), layers.mean_cost_error});
    }
    files.write("aggregate.csv", io::format_csv(aggregate_csv));
    if (o.svg) {
        files.write("sweep.svg", svg_line_plot(plot, "layer", "mean cost error"));
    }
    files.commit();
    out << "wrote " << cells.size() << " cells x " << seeds.size() << " seeds to "
        << cfg.out_dir << "\n";
    return kSuccess;
}

// ---------------------------------------------------------------- bound

std::vector<double> read_trace_betas(const std::string &path) {
    std::istringstream in(io::read_file(path));
    const auto table = io::parse_csv(in);
    const auto col = table.column("beta");
    std::vector<double> betas;
    for (const auto &row : table.rows) {
        betas.push_back(io::parse_real(row[col]));
    }
    if (betas.empty()) {
        throw InvalidArgument("trace '" + path + "' has no rows");
    }
    return betas;
}

int cmd_bound(const Options &o, std::ostream &out) {
    const auto cfg = prepare(o);
    const auto graph = prepare_graph(cfg);
    std::vector<double> betas;
    if (!o.trace_path.empty()) {
        try {
            betas = read_trace_betas(o.trace_path);
        } catch (const std::exception &e) {
            throw UsageError(e.what());
        }
    } else {
        betas = run(cfg.run_config(graph)).betas();
    }

    const auto diag = maxcut_hamiltonian(graph);
    const auto driver = driver_x(graph.n_nodes());
    const auto eps_list =
        cfg.epsilon_bars.empty() ? std::vector<double>{cfg.noise.epsilon_bar} : cfg.epsilon_bars;
    for (double eps : eps_list) {
        try {
            NoiseModel{NoiseKind::independent, eps, 0}.validate();
        } catch (const std::exception &e) {
            throw UsageError(e.what());
        }
    }

    OutputSet files(cfg.out_dir);
    const auto lip = lipschitz_bound(betas, cfg.delta_t, diag, driver, 0.0);
    io::CsvTable table{{"epsilon_bar", "l_falqon", "fidelity_lower_bound",
                        "empirical_min_fidelity", "draws", "vacuous"},
                       {}};
    for (double eps : eps_list) {
        const auto bound = fidelity_bound(lip.l_falqon, eps);
        const auto empirical = sample_replay_fidelity(betas, cfg.delta_t, diag, driver, eps,
                                                      cfg.draws, cfg.noise.seed);
        table.rows.push_back({format_real(eps), format_real(lip.l_falqon),
                              format_real(bound.value), format_real(empirical.min_fidelity),
                              std::to_string(empirical.draws), format_bool(bound.vacuous)});
    }
    files.write("bound.csv", io::format_csv(table));
    files.commit();
    out << "l_falqon " << format_real(lip.l_falqon) << " over " << betas.size() << " layers\n";
    return kSuccess;
}

} // namespace

int main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Feedback-based quantum optimization on MaxCut: statevector experiments",
                 "falqon"};
    app.require_subcommand(1);
    Options o;

    auto *graph = app.add_subcommand("graph", "Generate an instance graph as an edge list");
    add_graph_source(graph, o);
    graph->add_option("--seed", o.seed, "Generator seed (default 42)");
    graph->add_option("--out", o.out, "Edge-list file (default: stdout)");

    auto *run_cmd = app.add_subcommand("run", "Run one feedback loop; writes trace.csv and summary.json");
    add_experiment_options(run_cmd, o);

    auto *sweep = app.add_subcommand("sweep", "Run a grid of (epsilon_bar, lambda) cells over seeds");
    add_experiment_options(sweep, o);
    sweep->add_option("--epsilon-bars", o.epsilon_bars, "Comma-separated error magnitudes")
        ->delimiter(',');
    sweep->add_option("--lambdas", o.lambdas, "Comma-separated regularization weights")
        ->delimiter(',');
    sweep->add_option("--seeds", o.seeds, "Comma-separated noise seeds")->delimiter(',');
    sweep->add_option("--num-seeds", o.num_seeds, "Use noise seeds 1..K");
    sweep->add_option("--jobs", o.jobs, "Parallel workers")->default_val(1);

    auto *bound = app.add_subcommand("bound", "Fidelity bound against Monte-Carlo replay");
    add_experiment_options(bound, o);
    bound->add_option("--trace", o.trace_path, "trace.csv whose beta column is replayed");
    bound->add_option("--epsilon-bars", o.epsilon_bars, "Comma-separated error magnitudes")
        ->delimiter(',');
    bound->add_option("--draws", o.draws, "Monte-Carlo draws per epsilon_bar (default 100)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (graph->parsed()) {
            return cmd_graph(o, out, err);
        }
        if (run_cmd->parsed()) {
            return cmd_run(o, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(o, out);
        }
        return cmd_bound(o, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeFailure;
    }
}

} // namespace falqon::cli
