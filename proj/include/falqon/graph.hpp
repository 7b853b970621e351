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
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace falqon {

struct Edge {
    std::size_t u;
    std::size_t v;
    double weight = 1.0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/**
 * Undirected weighted graph with canonical edges.
 *
 * The constructor swaps each edge so u < v, sorts the list, and rejects
 * self-loops, duplicate pairs, and indices outside [0, n_nodes).
 */
class Graph {
  public:
    Graph(std::size_t n_nodes, std::vector<Edge> edges);

    [[nodiscard]] std::size_t n_nodes() const noexcept { return n_nodes_; }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::vector<std::size_t> degrees() const;

    friend bool operator==(const Graph &, const Graph &) = default;

  private:
    std::size_t n_nodes_;
    std::vector<Edge> edges_;
};

/// Uniform d-regular graph from the pairing (configuration) model.
/// Pairings with self-loops or multi-edges are rejected, up to 1000 attempts.
[[nodiscard]] Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// G(n, p): every pair u < v is kept independently with probability p.
[[nodiscard]] Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

[[nodiscard]] bool is_regular(const Graph &graph, std::size_t d);

/// Cut weight of the partition given by the bits of `assignment`.
[[nodiscard]] double cut_value(const Graph &graph, std::uint64_t assignment);

struct MaxCut {
    double value;
    std::uint64_t assignment;
};

/// Exhaustive search; refuses graphs above 20 nodes. Ties go to the smallest index.
[[nodiscard]] MaxCut max_cut_brute_force(const Graph &graph);

/**
 * Edge-list text format:
 *
 *     # comment
 *     nodes 3
 *     0 1 2.5
 *     1 2
 *
 * The first non-comment line declares the node count. Each later non-empty
 * line is "u v" or "u v w". '#' starts a comment anywhere on a line.
 */
[[nodiscard]] Graph parse_edge_list(std::istream &in);
[[nodiscard]] Graph parse_edge_list(std::string_view text);

/// Canonical serialization: LF endings, weight omitted when exactly 1.
[[nodiscard]] std::string format_edge_list(const Graph &graph);

[[nodiscard]] Graph read_edge_list_file(const std::string &path);

} // namespace falqon
