// Copyright 2026 The MQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mqc/topology.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mqc/rng.h"

namespace mqc {

namespace {

void check_range(const Range &range, const char *what) {
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.lo > range.hi) {
        throw std::invalid_argument(std::string("invalid ") + what + " range");
    }
}

}  // namespace

Graph gen_chimera_edges(const ChimeraSpec &spec) {
    if (spec.rows == 0 || spec.cols == 0 || spec.shore == 0) {
        throw std::invalid_argument("Chimera dimensions must be positive");
    }
    Graph graph;
    graph.num_vertices = spec.num_qubits();
    graph.edges.reserve(spec.num_couplers());
    for (std::size_t r = 0; r < spec.rows; ++r) {
        for (std::size_t c = 0; c < spec.cols; ++c) {
            for (std::size_t k = 0; k < spec.shore; ++k) {
                for (std::size_t k2 = 0; k2 < spec.shore; ++k2) {
                    graph.edges.push_back({spec.qubit(r, c, false, k), spec.qubit(r, c, true, k2)});
                }
            }
            for (std::size_t k = 0; k < spec.shore; ++k) {
                if (r + 1 < spec.rows) {
                    graph.edges.push_back({spec.qubit(r, c, false, k), spec.qubit(r + 1, c, false, k)});
                }
                if (c + 1 < spec.cols) {
                    graph.edges.push_back({spec.qubit(r, c, true, k), spec.qubit(r, c + 1, true, k)});
                }
            }
        }
    }
    return graph;
}

Graph gen_complete_edges(std::size_t num_vertices) {
    if (num_vertices == 0) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    Graph graph;
    graph.num_vertices = num_vertices;
    for (std::size_t u = 0; u < num_vertices; ++u) {
        for (std::size_t v = u + 1; v < num_vertices; ++v) {
            graph.edges.push_back({static_cast<Index>(u), static_cast<Index>(v)});
        }
    }
    return graph;
}

Graph gen_erdos_edges(std::size_t num_vertices, double edge_probability, std::uint64_t seed) {
    if (num_vertices == 0) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    Rng rng = Rng::stream(seed, StreamDomain::graph_generation, 0);
    Graph graph;
    graph.num_vertices = num_vertices;
    for (std::size_t u = 0; u < num_vertices; ++u) {
        for (std::size_t v = u + 1; v < num_vertices; ++v) {
            if (rng.uniform() < edge_probability) {
                graph.edges.push_back({static_cast<Index>(u), static_cast<Index>(v)});
            }
        }
    }
    return graph;
}

IsingModel gen_random_model(const Graph &graph, std::uint64_t seed, Range linear_range, Range quadratic_range) {
    if (graph.num_vertices == 0) {
        throw std::invalid_argument("cannot generate a model on an empty graph");
    }
    check_range(linear_range, "linear");
    check_range(quadratic_range, "quadratic");
    Rng rng = Rng::stream(seed, StreamDomain::model_generation, 0);
    std::vector<double> linear(graph.num_vertices);
    for (auto &a : linear) {
        a = rng.uniform(linear_range.lo, linear_range.hi);
    }
    std::vector<Coupler> couplers;
    couplers.reserve(graph.edges.size());
    for (const auto &e : graph.edges) {
        couplers.push_back({e.u, e.v, rng.uniform(quadratic_range.lo, quadratic_range.hi)});
    }
    return IsingModel(graph.num_vertices, std::move(linear), std::move(couplers));
}

ChainModel gen_chain_model(const ChainSpec &spec) {
    if (spec.length == 0 || spec.count == 0) {
        throw std::invalid_argument("chain length and count must be positive");
    }
    const std::size_t n = spec.length * spec.count;
    std::vector<double> linear(n, spec.linear);
    std::vector<Coupler> couplers;
    couplers.reserve((spec.length - 1) * spec.count);
    ChainMap chains(spec.count);
    for (std::size_t c = 0; c < spec.count; ++c) {
        const auto base = static_cast<Index>(c * spec.length);
        for (std::size_t k = 0; k < spec.length; ++k) {
            chains[c].push_back(base + static_cast<Index>(k));
            if (k + 1 < spec.length) {
                couplers.push_back({base + static_cast<Index>(k), base + static_cast<Index>(k + 1), spec.coupling});
            }
        }
    }
    return {IsingModel(n, std::move(linear), std::move(couplers)), std::move(chains)};
}

}  // namespace mqc
