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

#ifndef MQC_TOPOLOGY_H
#define MQC_TOPOLOGY_H

#include <cstdint>
#include <vector>

#include "mqc/model.h"

namespace mqc {

struct Edge {
    Index u = 0;
    Index v = 0;

    bool operator==(const Edge &) const = default;
};

/// Simple undirected graph: every edge has u < v, no duplicates.
struct Graph {
    std::size_t num_vertices = 0;
    std::vector<Edge> edges;
};

/// Grid of `rows` x `cols` K_{shore,shore} cells.
///
/// Indexing is row-major over cells; inside a cell the `shore` left-shore
/// qubits precede the `shore` right-shore qubits. Left-shore qubit k couples
/// vertically to left-shore qubit k of the cell below, right-shore qubit k
/// couples horizontally to right-shore qubit k of the cell to the right.
struct ChimeraSpec {
    std::size_t rows = 16;
    std::size_t cols = 16;
    std::size_t shore = 4;

    std::size_t num_qubits() const {
        return rows * cols * 2 * shore;
    }
    std::size_t num_couplers() const {
        return rows * cols * shore * shore + shore * (rows * (cols - 1) + cols * (rows - 1));
    }
    Index qubit(std::size_t row, std::size_t col, bool right_shore, std::size_t k) const {
        return static_cast<Index>((row * cols + col) * 2 * shore + (right_shore ? shore : 0) + k);
    }
};

Graph gen_chimera_edges(const ChimeraSpec &spec);
Graph gen_complete_edges(std::size_t num_vertices);
/// G(n, p) random graph, deterministic given seed.
Graph gen_erdos_edges(std::size_t num_vertices, double edge_probability, std::uint64_t seed);

/// Closed interval for uniform coefficient draws.
struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

inline constexpr Range kHardwareLinearRange{-kHardwareLinearBound, kHardwareLinearBound};
inline constexpr Range kHardwareQuadraticRange{-kHardwareQuadraticBound, kHardwareQuadraticBound};

/// Uniform a_i for every vertex, then uniform b_ij for every edge in edge
/// order, all from one stream of `seed`.
IsingModel gen_random_model(
    const Graph &graph,
    std::uint64_t seed,
    Range linear_range = kHardwareLinearRange,
    Range quadratic_range = kHardwareQuadraticRange);

/// Disjoint paths of physical qubits, each standing in for one virtual qubit.
struct ChainSpec {
    std::size_t length = 12;
    double linear = 0.0;
    double coupling = -1.0;
    std::size_t count = 1;
};

/// physical qubit indices of each virtual qubit
using ChainMap = std::vector<std::vector<Index>>;

struct ChainModel {
    IsingModel model;
    ChainMap chains;
};

/// Chain c occupies indices [c * length, (c + 1) * length).
ChainModel gen_chain_model(const ChainSpec &spec);

}  // namespace mqc

#endif
