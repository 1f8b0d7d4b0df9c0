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

#ifndef MQC_CORRECTION_H
#define MQC_CORRECTION_H

#include <optional>
#include <span>
#include <vector>

#include "mqc/model.h"
#include "mqc/samplers.h"

namespace mqc {

/// Influences with magnitude at or below this are treated as exact ties.
inline constexpr double kTieEpsilon = 1e-12;

/// Single-qubit correction.
///
/// Sweeps qubits in index order, negating any qubit whose flip lowers the
/// energy by more than kTieEpsilon, until a sweep makes no flip. The result is
/// 1-flip stable. Throws std::runtime_error after `max_sweeps` sweeps.
Sample sqc(const IsingModel &model, const Sample &sample, std::size_t max_sweeps = 1000);

/// `same` holds indices where the two samples agree, `differ` the rest.
/// Both are sorted.
struct DiffPartition {
    std::vector<Index> same;
    std::vector<Index> differ;
};

DiffPartition diff_partition(const Sample &a, const Sample &b);

/// Connected components of the disagreement set under nonzero couplers,
/// each sorted, listed by smallest index.
std::vector<std::vector<Index>> tunnel_decompose(const IsingModel &model, const DiffPartition &partition);

/// Energy contribution of `tunnel` to sample `a`: its linear terms plus its
/// couplers into the agreement set. Couplers inside the tunnel are left out
/// since negating the whole tunnel leaves them unchanged. Flipping the tunnel
/// in `a` changes the energy by exactly -2x this value.
///
/// Throws std::invalid_argument if `tunnel` is not inside `partition.differ`.
double tunnel_influence(
    const IsingModel &model, const Sample &a, const DiffPartition &partition, std::span<const Index> tunnel);

struct Tunnel {
    std::vector<Index> indices;
    double influence = 0.0;
    bool flipped = false;
};

struct MergeReport {
    Sample merged;
    std::vector<Tunnel> tunnels;
    double energy_a = 0.0;
    double energy_b = 0.0;
    double energy_c = 0.0;

    std::size_t flipped_count() const;
};

/// Multi-qubit correction of one pair.
///
/// Starts from `a` and flips every tunnel whose influence relative to `a`
/// exceeds kTieEpsilon. Zero-influence tunnels keep a's values, so the merge
/// is deterministic and mqc_merge(a, b) and mqc_merge(b, a) agree in energy
/// but not necessarily bit for bit. energy_c <= min(energy_a, energy_b).
MergeReport mqc_merge(const IsingModel &model, const Sample &a, const Sample &b);

/// One pairwise merge inside a tournament. `round` counts from 1, `pair`
/// from 0 within its round.
struct MergeSummary {
    std::size_t round = 0;
    std::size_t pair = 0;
    double energy_a = 0.0;
    double energy_b = 0.0;
    double energy_c = 0.0;
    std::size_t tunnels = 0;
    std::size_t flipped = 0;
};

struct AggregateResult {
    Sample sample;
    double energy = 0.0;
    std::vector<MergeSummary> merges;
};

/// Halves the population each round by merging neighbours (0 with 1, 2 with
/// 3, ...); an odd trailing sample advances unchanged. Stops at one sample.
AggregateResult tournament_aggregate(const IsingModel &model, const SamplePopulation &population);

/// Tournament over `prior` followed by `batch`, or over `batch` alone when
/// there is no prior. The returned energy never exceeds the prior's.
AggregateResult aggregate_incremental(
    const IsingModel &model, const std::optional<Sample> &prior, const SamplePopulation &batch);

}  // namespace mqc

#endif
