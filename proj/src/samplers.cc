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

#include "mqc/samplers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mqc/rng.h"

namespace mqc {

SamplePopulation SamplePopulation::evaluate(const IsingModel &model, std::vector<Sample> samples) {
    SamplePopulation pop;
    pop.energies_.reserve(samples.size());
    for (const auto &s : samples) {
        pop.energies_.push_back(mqc::energy(model, s));
    }
    pop.samples_ = std::move(samples);
    return pop;
}

void SamplePopulation::push_back(const IsingModel &model, Sample sample) {
    energies_.push_back(mqc::energy(model, sample));
    samples_.push_back(std::move(sample));
}

std::size_t SamplePopulation::best_index() const {
    if (samples_.empty()) {
        throw std::invalid_argument("empty population has no best sample");
    }
    return static_cast<std::size_t>(std::min_element(energies_.begin(), energies_.end()) - energies_.begin());
}

SamplePopulation SamplePopulation::prefix(std::size_t count) const {
    return slice(0, count);
}

SamplePopulation SamplePopulation::slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > samples_.size()) {
        throw std::out_of_range("population slice out of range");
    }
    SamplePopulation out;
    out.samples_.assign(samples_.begin() + begin, samples_.begin() + end);
    out.energies_.assign(energies_.begin() + begin, energies_.begin() + end);
    return out;
}

bool SamplePopulation::verify(const IsingModel &model, double tolerance) const {
    for (std::size_t k = 0; k < samples_.size(); ++k) {
        if (samples_[k].size() != model.num_qubits() ||
            std::abs(mqc::energy(model, samples_[k]) - energies_[k]) > tolerance) {
            return false;
        }
    }
    return true;
}

void AnnealSchedule::validate() const {
    if (sweeps < 1) {
        throw std::invalid_argument("anneal schedule needs at least one sweep");
    }
    if (!(t_initial > 0.0) || !(t_final > 0.0) || !std::isfinite(t_initial) || !std::isfinite(t_final)) {
        throw std::invalid_argument("anneal temperatures must be positive and finite");
    }
    if (t_final > t_initial) {
        throw std::invalid_argument("final temperature exceeds initial temperature");
    }
}

double AnnealSchedule::temperature(std::size_t sweep) const {
    if (sweeps == 1) {
        return t_final;
    }
    const double progress = static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
    return t_initial * std::pow(t_final / t_initial, progress);
}

namespace {

std::vector<std::int8_t> random_spins(std::size_t n, Rng &rng) {
    std::vector<std::int8_t> spins(n);
    for (auto &s : spins) {
        s = rng.spin();
    }
    return spins;
}

Sample anneal_one(const IsingModel &model, const AnnealSchedule &schedule, Rng &rng) {
    const std::size_t n = model.num_qubits();
    std::vector<std::int8_t> spins = random_spins(n, rng);
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    for (std::size_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
        const double beta = 1.0 / schedule.temperature(sweep);
        rng.shuffle(std::span<Index>(order));
        for (Index i : order) {
            double field = model.linear(i);
            for (const auto &nb : model.neighbors(i)) {
                field += nb.weight * spins[nb.index];
            }
            const double delta = -2.0 * spins[i] * field;
            if (delta <= 0.0 || rng.uniform() < std::exp(-beta * delta)) {
                spins[i] = static_cast<std::int8_t>(-spins[i]);
            }
        }
    }
    return Sample(std::move(spins));
}

}  // namespace

SamplePopulation sample_uniform(const IsingModel &model, std::size_t count, std::uint64_t seed) {
    if (count < 1) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    std::vector<Sample> samples;
    samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng = Rng::stream(seed, StreamDomain::uniform_sampler, k);
        samples.emplace_back(random_spins(model.num_qubits(), rng));
    }
    return SamplePopulation::evaluate(model, std::move(samples));
}

SamplePopulation sample_sa(
    const IsingModel &model, std::size_t count, std::uint64_t seed, const AnnealSchedule &schedule) {
    if (count < 1) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    schedule.validate();
    std::vector<Sample> samples;
    samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng = Rng::stream(seed, StreamDomain::anneal, k);
        samples.push_back(anneal_one(model, schedule, rng));
    }
    return SamplePopulation::evaluate(model, std::move(samples));
}

SamplePopulation inject_noise(
    const IsingModel &model, const SamplePopulation &population, double flip_probability, std::uint64_t seed) {
    if (!(flip_probability >= 0.0 && flip_probability <= 1.0)) {
        throw std::invalid_argument("flip probability must lie in [0, 1]");
    }
    std::vector<Sample> samples(population.samples().begin(), population.samples().end());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (flip_probability == 0.0) {
            break;
        }
        Rng rng = Rng::stream(seed, StreamDomain::noise, k);
        for (std::size_t i = 0; i < samples[k].size(); ++i) {
            if (rng.uniform() < flip_probability) {
                samples[k].flip(i);
            }
        }
    }
    return SamplePopulation::evaluate(model, std::move(samples));
}

}  // namespace mqc
