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
#include "falqon/config.hpp"

#include <filesystem>
#include <set>

#include "falqon/error.hpp"
#include "falqon/io.hpp"

namespace falqon::cli {

using nlohmann::json;

Graph GraphSource::build() const {
    switch (type) {
    case Type::regular:
        return random_regular(n, d, seed);
    case Type::er:
        return erdos_renyi(n, p, seed);
    case Type::file:
        return read_edge_list_file(path);
    }
    throw InvalidArgument("unknown graph source");
}

RunConfig ExperimentConfig::run_config(const Graph &g, double epsilon_bar, double lam,
                                       std::uint64_t noise_seed) const {
    RunConfig rc{g, delta_t, depth, FeedbackLaw{lam, w},
                 NoiseModel{noise.kind, epsilon_bar, noise_seed}};
    return rc;
}

RunConfig ExperimentConfig::run_config(const Graph &g) const {
    return run_config(g, noise.epsilon_bar, lambda, noise.seed);
}

void ExperimentConfig::validate() const {
    if (graph.type == GraphSource::Type::file && graph.path.empty()) {
        throw InvalidArgument("config: graph file path is empty");
    }
    if (graph.type != GraphSource::Type::file) {
        if (graph.n < 1 || graph.n > kMaxQubits) {
            throw InvalidArgument("config: graph node count must lie in [1, " +
                                  std::to_string(kMaxQubits) + "]");
        }
        if (graph.type == GraphSource::Type::er && !(graph.p >= 0.0 && graph.p <= 1.0)) {
            throw InvalidArgument("config: edge probability must lie in [0, 1]");
        }
        if (graph.type == GraphSource::Type::regular &&
            (graph.d >= graph.n || (graph.n * graph.d) % 2 != 0)) {
            throw InvalidArgument("config: no " + std::to_string(graph.d) + "-regular graph on " +
                                  std::to_string(graph.n) + " nodes (need d < n, n*d even)");
        }
    }
    // Probe the run preconditions with a placeholder graph of the right size.
    const Graph probe(graph.type == GraphSource::Type::file ? 1 : graph.n, {});
    run_config(probe).validate();
    for (double eps : epsilon_bars) {
        run_config(probe, eps, lambda, 0).validate();
    }
    for (double lam : lambdas) {
        run_config(probe, noise.epsilon_bar, lam, 0).validate();
    }
    if (draws < 1) {
        throw InvalidArgument("config: draws must be >= 1");
    }
}

namespace {

template <typename T> T get(const json &obj, const char *key) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw InvalidArgument(std::string("config: bad or missing '") + key + "': " + e.what());
    }
}

void reject_unknown(const json &obj, std::initializer_list<const char *> allowed,
                    const char *where) {
    std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto &item : obj.items()) {
        if (names.count(item.key()) == 0) {
            throw InvalidArgument(std::string("config: unknown key '") + item.key() + "' in " +
                                  where);
        }
    }
}

} // namespace

ExperimentConfig config_from_json(const json &doc, const std::string &base_dir) {
    if (!doc.is_object()) {
        throw InvalidArgument("config: top level must be an object");
    }
    reject_unknown(doc,
                   {"graph", "delta_t", "depth", "lambda", "w", "noise", "seeds",
                    "epsilon_bars", "lambdas", "draws", "out"},
                   "config");
    ExperimentConfig cfg;
    if (doc.contains("graph")) {
        const auto &g = doc.at("graph");
        const auto type = get<std::string>(g, "type");
        if (type == "regular") {
            reject_unknown(g, {"type", "n", "d", "seed"}, "graph");
            cfg.graph.type = GraphSource::Type::regular;
            cfg.graph.n = get<std::size_t>(g, "n");
            cfg.graph.d = get<std::size_t>(g, "d");
            cfg.graph.seed = g.contains("seed") ? get<std::uint64_t>(g, "seed") : 42;
        } else if (type == "er") {
            reject_unknown(g, {"type", "n", "p", "seed"}, "graph");
            cfg.graph.type = GraphSource::Type::er;
            cfg.graph.n = get<std::size_t>(g, "n");
            cfg.graph.p = get<double>(g, "p");
            cfg.graph.seed = g.contains("seed") ? get<std::uint64_t>(g, "seed") : 42;
        } else if (type == "file") {
            reject_unknown(g, {"type", "path"}, "graph");
            cfg.graph.type = GraphSource::Type::file;
            std::filesystem::path p = get<std::string>(g, "path");
            if (p.is_relative() && !base_dir.empty()) {
                p = std::filesystem::path(base_dir) / p;
            }
            cfg.graph.path = p.string();
        } else {
            throw InvalidArgument("config: graph type must be regular, er or file");
        }
    }
    if (doc.contains("delta_t")) cfg.delta_t = get<double>(doc, "delta_t");
    if (doc.contains("depth")) cfg.depth = get<std::size_t>(doc, "depth");
    if (doc.contains("lambda")) cfg.lambda = get<double>(doc, "lambda");
    if (doc.contains("w")) cfg.w = get<double>(doc, "w");
    if (doc.contains("noise")) {
        const auto &n = doc.at("noise");
        reject_unknown(n, {"kind", "epsilon_bar", "seed"}, "noise");
        cfg.noise.kind = parse_noise_kind(get<std::string>(n, "kind"));
        if (n.contains("epsilon_bar")) cfg.noise.epsilon_bar = get<double>(n, "epsilon_bar");
        if (n.contains("seed")) cfg.noise.seed = get<std::uint64_t>(n, "seed");
    }
    if (doc.contains("seeds")) cfg.seeds = get<std::vector<std::uint64_t>>(doc, "seeds");
    if (doc.contains("epsilon_bars")) cfg.epsilon_bars = get<std::vector<double>>(doc, "epsilon_bars");
    if (doc.contains("lambdas")) cfg.lambdas = get<std::vector<double>>(doc, "lambdas");
    if (doc.contains("draws")) cfg.draws = get<std::size_t>(doc, "draws");
    if (doc.contains("out")) {
        std::filesystem::path p = get<std::string>(doc, "out");
        if (p.is_relative() && !base_dir.empty()) {
            p = std::filesystem::path(base_dir) / p;
        }
        cfg.out_dir = p.string();
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    json doc;
    try {
        doc = json::parse(io::read_file(path));
    } catch (const json::parse_error &e) {
        throw InvalidArgument("config '" + path + "': " + e.what());
    }
    return config_from_json(doc, std::filesystem::path(path).parent_path().string());
}

json config_to_json(const ExperimentConfig &cfg) {
    json g;
    switch (cfg.graph.type) {
    case GraphSource::Type::regular:
        g = {{"type", "regular"}, {"n", cfg.graph.n}, {"d", cfg.graph.d}, {"seed", cfg.graph.seed}};
        break;
    case GraphSource::Type::er:
        g = {{"type", "er"}, {"n", cfg.graph.n}, {"p", cfg.graph.p}, {"seed", cfg.graph.seed}};
        break;
    case GraphSource::Type::file:
        g = {{"type", "file"}, {"path", std::filesystem::path(cfg.graph.path).filename().string()}};
        break;
    }
    return {{"graph", g},
            {"delta_t", cfg.delta_t},
            {"depth", cfg.depth},
            {"lambda", cfg.lambda},
            {"w", cfg.w},
            {"noise",
             {{"kind", std::string(to_string(cfg.noise.kind))},
              {"epsilon_bar", cfg.noise.epsilon_bar},
              {"seed", cfg.noise.seed}}},
            {"seeds", cfg.seeds},
            {"epsilon_bars", cfg.epsilon_bars},
            {"lambdas", cfg.lambdas},
            {"draws", cfg.draws}};
}

} // namespace falqon::cli
