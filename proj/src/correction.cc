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

#include "mqc/correction.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mqc {

namespace {

void require_same_length(const Sample &a, const Sample &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "sample lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

void require_model_length(const IsingModel &model, const Sample &s) {
    if (s.size() != model.num_qubits()) {
        throw std::invalid_argument(
            "sample length " + std::to_string(s.size()) + " does not match model size " +
            std::to_string(model.num_qubits()));
    }
}

// Reusable scratch space for merging many pairs of one model.
//
// `mark_` is all zero between calls: 1 flags a disagreeing qubit not yet
// assigned to a tunnel, 2 one already assigned.
class Merger {
   public:
    explicit Merger(const IsingModel &model) : model_(model), mark_(model.num_qubits(), 0) {
    }

    struct Outcome {
        std::size_t tunnels = 0;
        std::size_t flipped = 0;
    };

    // Writes the merge of a and b into `out` (which must start as a copy of a).
    // When `records` is non-null every tunnel is appended to it.
    Outcome merge(const Sample &a, const Sample &b, Sample &out, std::vector<Tunnel> *records) {
        differ_.clear();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) {
                differ_.push_back(static_cast<Index>(i));
                mark_[i] = 1;
            }
        }
        Outcome outcome;
        for (Index root : differ_) {
            if (mark_[root] != 1) {
                continue;
            }
            component_.clear();
            component_.push_back(root);
            mark_[root] = 2;
            double influence = 0.0;
            // Breadth-first: component_ doubles as the queue.
            for (std::size_t head = 0; head < component_.size(); ++head) {
                const Index i = component_[head];
                const double qi = a[i];
                influence += model_.linear(i) * qi;
                for (const auto &nb : model_.neighbors(i)) {
                    const auto m = mark_[nb.index];
                    if (m == 0) {
                        influence += nb.weight * qi * a[nb.index];
                    } else if (m == 1) {
                        mark_[nb.index] = 2;
                        component_.push_back(nb.index);
                    }
                }
            }
            ++outcome.tunnels;
            const bool flip = influence > kTieEpsilon;
            if (flip) {
                ++outcome.flipped;
                for (Index i : component_) {
                    out.flip(i);
                }
            }
            if (records) {
                std::vector<Index> indices(component_);
                std::sort(indices.begin(), indices.end());
                records->push_back({std::move(indices), influence, flip});
            }
        }
        for (Index i : differ_) {
            mark_[i] = 0;
        }
        return outcome;
    }

   private:
    const IsingModel &model_;
    std::vector<std::uint8_t> mark_;
    std::vector<Index> differ_;
    std::vector<Index> component_;
};

}  // namespace

Sample sqc(const IsingModel &model, const Sample &sample, std::size_t max_sweeps) {
    require_model_length(model, sample);
    Sample out = sample;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (flip_delta(model, out, i) < -kTieEpsilon) {
                out.flip(i);
                changed = true;
            }
        }
        if (!changed) {
            return out;
        }
    }
    throw std::runtime_error("single-qubit correction did not settle within " + std::to_string(max_sweeps) + " sweeps");
}

DiffPartition diff_partition(const Sample &a, const Sample &b) {
    require_same_length(a, b);
    DiffPartition part;
    for (std::size_t i = 0; i < a.size(); ++i) {
        (a[i] == b[i] ? part.same : part.differ).push_back(static_cast<Index>(i));
    }
    return part;
}

std::vector<std::vector<Index>> tunnel_decompose(const IsingModel &model, const DiffPartition &partition) {
    const std::size_t n = model.num_qubits();
    std::vector<std::uint8_t> mark(n, 0);
    for (Index i : partition.differ) {
        if (i >= n) {
            throw std::out_of_range("partition index " + std::to_string(i) + " out of range");
        }
        mark[i] = 1;
    }
    std::vector<std::vector<Index>> tunnels;
    for (Index root : partition.differ) {
        if (mark[root] != 1) {
            continue;
        }
        std::vector<Index> component{root};
        mark[root] = 2;
        for (std::size_t head = 0; head < component.size(); ++head) {
            for (const auto &nb : model.neighbors(component[head])) {
                if (mark[nb.index] == 1) {
                    mark[nb.index] = 2;
                    component.push_back(nb.index);
                }
            }
        }
        std::sort(component.begin(), component.end());
        tunnels.push_back(std::move(component));
    }
    // Roots are visited in ascending order when `differ` is sorted; sort
    // anyway so hand-built partitions give the same contract.
    std::sort(tunnels.begin(), tunnels.end(), [](const auto &x, const auto &y) { return x.front() < y.front(); });
    return tunnels;
}

double tunnel_influence(
    const IsingModel &model, const Sample &a, const DiffPartition &partition, std::span<const Index> tunnel) {
    require_model_length(model, a);
    const std::size_t n = model.num_qubits();
    // 0: agreement set, 1: disagreement set, 2: this tunnel.
    std::vector<std::uint8_t> mark(n, 0);
    for (Index i : partition.differ) {
        if (i >= n) {
            throw std::out_of_range("partition index " + std::to_string(i) + " out of range");
        }
        mark[i] = 1;
    }
    for (Index i : tunnel) {
        if (i >= n || mark[i] == 0) {
            throw std::invalid_argument("tunnel index " + std::to_string(i) + " is not in the disagreement set");
        }
        mark[i] = 2;
    }
    double influence = 0.0;
    for (Index i : tunnel) {
        if (mark[i] != 2) {
            continue;
        }
        mark[i] = 3;
        influence += model.linear(i) * a[i];
        for (const auto &nb : model.neighbors(i)) {
            if (mark[nb.index] == 0) {
                influence += nb.weight * a[i] * a[nb.index];
            }
        }
    }
    return influence;
}

std::size_t MergeReport::flipped_count() const {
    return static_cast<std::size_t>(std::count_if(tunnels.begin(), tunnels.end(), [](const Tunnel &t) {
        return t.flipped;
    }));
}

MergeReport mqc_merge(const IsingModel &model, const Sample &a, const Sample &b) {
    require_same_length(a, b);
    require_model_length(model, a);
    MergeReport report;
    report.energy_a = energy(model, a);
    report.energy_b = energy(model, b);
    report.merged = a;
    Merger merger(model);
    merger.merge(a, b, report.merged, &report.tunnels);
    report.energy_c = energy(model, report.merged);
    return report;
}

AggregateResult tournament_aggregate(const IsingModel &model, const SamplePopulation &population) {
    if (population.empty()) {
        throw std::invalid_argument("cannot aggregate an empty population");
    }
    for (const auto &s : population.samples()) {
        require_model_length(model, s);
    }
    std::vector<Sample> current(population.samples().begin(), population.samples().end());
    std::vector<double> energies(population.energies().begin(), population.energies().end());
    AggregateResult result;
    Merger merger(model);
    std::size_t round = 0;
    while (current.size() > 1) {
        ++round;
        std::vector<Sample> next;
        std::vector<double> next_energies;
        next.reserve((current.size() + 1) / 2);
        next_energies.reserve(next.capacity());
        for (std::size_t k = 0; k + 1 < current.size(); k += 2) {
            Sample merged = current[k];
            auto outcome = merger.merge(current[k], current[k + 1], merged, nullptr);
            const double e = energy(model, merged);
            result.merges.push_back({round, k / 2, energies[k], energies[k + 1], e, outcome.tunnels, outcome.flipped});
            next.push_back(std::move(merged));
            next_energies.push_back(e);
        }
        if (current.size() % 2 == 1) {
            next.push_back(std::move(current.back()));
            next_energies.push_back(energies.back());
        }
        current = std::move(next);
        energies = std::move(next_energies);
    }
    result.sample = std::move(current.front());
    result.energy = energies.front();
    return result;
}

AggregateResult aggregate_incremental(
    const IsingModel &model, const std::optional<Sample> &prior, const SamplePopulation &batch) {
    if (batch.empty()) {
        throw std::invalid_argument("cannot aggregate an empty batch");
    }
    if (!prior) {
        return tournament_aggregate(model, batch);
    }
    std::vector<Sample> combined;
    combined.reserve(batch.size() + 1);
    combined.push_back(*prior);
    combined.insert(combined.end(), batch.samples().begin(), batch.samples().end());
    return tournament_aggregate(model, SamplePopulation::evaluate(model, std::move(combined)));
}

}  // namespace mqc
