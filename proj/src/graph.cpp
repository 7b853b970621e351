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
#include "falqon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <optional>
#include <sstream>
#include <utility>

#include "falqon/error.hpp"
#include "falqon/io.hpp"
#include "falqon/rng.hpp"

namespace falqon {

namespace {

constexpr int kPairingRetries = 1000;
constexpr std::size_t kBruteForceMaxNodes = 20;

} // namespace

Graph::Graph(std::size_t n_nodes, std::vector<Edge> edges)
    : n_nodes_(n_nodes), edges_(std::move(edges)) {
    if (n_nodes_ < 1) {
        throw InvalidArgument("graph must have at least one node");
    }
    for (auto &e : edges_) {
        if (e.u >= n_nodes_ || e.v >= n_nodes_) {
            throw ValidationError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has a node index >= " + std::to_string(n_nodes_));
        }
        if (e.u == e.v) {
            throw ValidationError("self-loop on node " + std::to_string(e.u));
        }
        if (!std::isfinite(e.weight)) {
            throw ValidationError("non-finite edge weight");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return a.u == b.u && a.v == b.v;
    });
    if (dup != edges_.end()) {
        throw ValidationError("duplicate edge (" + std::to_string(dup->u) + ", " +
                              std::to_string(dup->v) + ")");
    }
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> deg(n_nodes_, 0);
    for (const auto &e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 1) {
        throw InvalidArgument("random_regular: need at least one node");
    }
    if (d >= n) {
        throw InvalidArgument("random_regular: degree " + std::to_string(d) +
                              " must be below node count " + std::to_string(n));
    }
    if ((n * d) % 2 != 0) {
        throw InvalidArgument("random_regular: n*d = " + std::to_string(n * d) +
                              " is odd, no d-regular graph exists (parity)");
    }

    rng::Engine engine(seed);
    std::vector<std::size_t> stubs(n * d);
    for (int attempt = 0; attempt < kPairingRetries; ++attempt) {
        for (std::size_t i = 0; i < stubs.size(); ++i) {
            stubs[i] = i / d;
        }
        // Fisher-Yates with the portable bounded draw.
        for (std::size_t i = stubs.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(rng::uniform_below(engine, i));
            std::swap(stubs[i - 1], stubs[j]);
        }

        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const std::size_t u = stubs[i];
            const std::size_t v = stubs[i + 1];
            if (u == v || adjacent[u][v]) {
                simple = false;
                break;
            }
            adjacent[u][v] = adjacent[v][u] = true;
            edges.push_back({u, v, 1.0});
        }
        if (simple) {
            return {n, std::move(edges)};
        }
    }
    throw GenerationFailure("random_regular: no simple pairing after " +
                            std::to_string(kPairingRetries) + " attempts");
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("erdos_renyi: probability must lie in [0, 1]");
    }
    rng::Engine engine(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng::uniform01(engine) < p) {
                edges.push_back({u, v, 1.0});
            }
        }
    }
    return {n, std::move(edges)};
}

bool is_regular(const Graph &graph, std::size_t d) {
    const auto deg = graph.degrees();
    return std::all_of(deg.begin(), deg.end(), [d](std::size_t k) { return k == d; });
}

double cut_value(const Graph &graph, std::uint64_t assignment) {
    double cut = 0.0;
    for (const auto &e : graph.edges()) {
        if (((assignment >> e.u) ^ (assignment >> e.v)) & 1U) {
            cut += e.weight;
        }
    }
    return cut;
}

MaxCut max_cut_brute_force(const Graph &graph) {
    if (graph.n_nodes() > kBruteForceMaxNodes) {
        throw InvalidArgument("max_cut_brute_force: refusing " + std::to_string(graph.n_nodes()) +
                              " nodes (limit " + std::to_string(kBruteForceMaxNodes) + ")");
    }
    MaxCut best{cut_value(graph, 0), 0};
    const std::uint64_t count = std::uint64_t{1} << graph.n_nodes();
    for (std::uint64_t x = 1; x < count; ++x) {
        const double c = cut_value(graph, x);
        if (c > best.value) {
            best = {c, x};
        }
    }
    return best;
}

Graph parse_edge_list(std::istream &in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> n_nodes;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = io::trim(line);
        if (line.empty()) {
            continue;
        }
        std::istringstream fields{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) {
            tokens.push_back(tok);
        }
        try {
            if (!n_nodes) {
                if (tokens.size() != 2 || tokens[0] != "nodes") {
                    throw ParseError(line_no, "expected 'nodes N' header");
                }
                n_nodes = static_cast<std::size_t>(io::parse_u64(tokens[1]));
                continue;
            }
            if (tokens.size() != 2 && tokens.size() != 3) {
                throw ParseError(line_no, "expected 'u v' or 'u v w'");
            }
            Edge e{static_cast<std::size_t>(io::parse_u64(tokens[0])),
                   static_cast<std::size_t>(io::parse_u64(tokens[1])),
                   tokens.size() == 3 ? io::parse_real(tokens[2]) : 1.0};
            if (e.u >= *n_nodes || e.v >= *n_nodes) {
                throw ValidationError("line " + std::to_string(line_no) + ": node index >= " +
                                      std::to_string(*n_nodes));
            }
            edges.push_back(e);
        } catch (const InvalidArgument &ex) {
            throw ParseError(line_no, ex.what());
        }
    }
    if (!n_nodes) {
        throw ParseError(line_no, "missing 'nodes N' header");
    }
    return {*n_nodes, std::move(edges)};
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph &graph) {
    std::string out = "nodes " + std::to_string(graph.n_nodes()) + "\n";
    for (const auto &e : graph.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v);
        if (e.weight != 1.0) {
            out += " " + io::format_real(e.weight);
        }
        out += "\n";
    }
    return out;
}

Graph read_edge_list_file(const std::string &path) {
    std::istringstream in(io::read_file(path));
    return parse_edge_list(in);
}

} // namespace falqon
