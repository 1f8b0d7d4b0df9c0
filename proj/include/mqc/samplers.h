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

#ifndef MQC_SAMPLERS_H
#define MQC_SAMPLERS_H

#include <cstdint>
#include <span>
#include <vector>

#include "mqc/model.h"

namespace mqc {

/// Ordered samples of one model with their energies cached.
///
/// The population does not hold the model; every operation that needs it
/// takes it explicitly. Entries are only added through `evaluate` or
/// `push_back(model, ...)`, so cached energies always match `energy()`.
class SamplePopulation {
   public:
    SamplePopulation() = default;

    static SamplePopulation evaluate(const IsingModel &model, std::vector<Sample> samples);

    void push_back(const IsingModel &model, Sample sample);

    std::size_t size() const {
        return samples_.size();
    }
    bool empty() const {
        return samples_.empty();
    }
    const Sample &sample(std::size_t k) const {
        return samples_[k];
    }
    double energy(std::size_t k) const {
        return energies_[k];
    }
    std::span<const Sample> samples() const {
        return samples_;
    }
    std::span<const double> energies() const {
        return energies_;
    }

    /// Index of the first lowest-energy sample. Throws on an empty population.
    std::size_t best_index() const;
    double best_energy() const {
        return energies_[best_index()];
    }

    /// The first `count` entries.
    SamplePopulation prefix(std::size_t count) const;
    /// Entries [begin, end).
    SamplePopulation slice(std::size_t begin, std::size_t end) const;

    /// Re-evaluates every cached energy against the model.
    bool verify(const IsingModel &model, double tolerance = kEnergyTolerance) const;

   private:
    std::vector<Sample> samples_;
    std::vector<double> energies_;
};

/// Geometric Metropolis schedule from `t_initial` on the first sweep to
/// `t_final` on the last.
struct AnnealSchedule {
    std::size_t sweeps = 100;
    double t_initial = 3.0;
    double t_final = 0.1;

    void validate() const;
    double temperature(std::size_t sweep) const;
};

/// Every spin independently +-1. Sample k draws from substream k of `seed`.
SamplePopulation sample_uniform(const IsingModel &model, std::size_t count, std::uint64_t seed);

/// `count` independent single-spin-flip Metropolis anneals from uniform
/// random starts. Each sweep visits all qubits in a freshly shuffled order.
/// Sample k draws from substream k of `seed`, so the result does not depend
/// on how the anneals are scheduled.
SamplePopulation sample_sa(
    const IsingModel &model, std::size_t count, std::uint64_t seed, const AnnealSchedule &schedule = {});

/// Negates each spin independently with `flip_probability`, then re-evaluates.
SamplePopulation inject_noise(
    const IsingModel &model, const SamplePopulation &population, double flip_probability, std::uint64_t seed);

}  // namespace mqc

#endif
