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

#include "mqc/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "mqc/topology.h"

namespace mqc {

namespace {

constexpr std::size_t kHardQubitLimit = 62;
// Incremental energies are resynchronised with a full evaluation this often.
constexpr std::uint64_t kResyncPeriod = 1u << 12;
// Candidate window for the incremental pass; membership is decided on exact
// energies afterwards.
constexpr double kCandidateSlack = 1e-7;

// Walks all assignments in Gray-code order, starting from all -1, calling
// visit(spins, approximate_energy) for each.
template <typename Visit>
void gray_walk(const IsingModel &model, Visit &&visit) {
    const std::size_t n = model.num_qubits();
    Sample state(n, -1);
    double e = energy(model, state);
    visit(state, e);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        e += flip_delta(model, state, j);
        state.flip(j);
        if (k % kResyncPeriod == 0) {
            e = energy(model, state);
        }
        visit(state, e);
    }
}

void check_cap(const IsingModel &model, std::size_t max_qubits) {
    const std::size_t cap = std::min(max_qubits, kHardQubitLimit);
    if (model.num_qubits() > cap) {
        throw OracleCapError(
            "exhaustive search refused: " + std::to_string(model.num_qubits()) + " qubits exceeds cap of " +
            std::to_string(cap));
    }
}

}  // namespace

double for_each_ground_state(
    const IsingModel &model, const std::function<void(const Sample &)> &visit, std::size_t max_qubits) {
    check_cap(model, max_qubits);

    double approx_min = std::numeric_limits<double>::infinity();
    gray_walk(model, [&](const Sample &, double e) { approx_min = std::min(approx_min, e); });

    double exact_min = std::numeric_limits<double>::infinity();
    gray_walk(model, [&](const Sample &s, double e) {
        if (e <= approx_min + kCandidateSlack) {
            exact_min = std::min(exact_min, energy(model, s));
        }
    });

    gray_walk(model, [&](const Sample &s, double e) {
        if (e <= approx_min + kCandidateSlack && energy(model, s) <= exact_min + kEnergyTolerance) {
            visit(s);
        }
    });
    return exact_min;
}

GroundSet exact_ground(const IsingModel &model, std::size_t max_qubits) {
    GroundSet ground;
    ground.energy = for_each_ground_state(
        model, [&](const Sample &s) { ground.states.push_back(s); }, max_qubits);
    return ground;
}

double theoretical_vote_prob(std::size_t chain_length, double linear, double coupling, std::size_t max_qubits) {
    auto chain = gen_chain_model({chain_length, linear, coupling, 1});
    std::size_t total = 0;
    std::size_t up_votes = 0;
    for_each_ground_state(
        chain.model,
        [&](const Sample &s) {
            ++total;
            if (2 * static_cast<std::size_t>(s.count_up()) >= chain_length) {
                ++up_votes;
            }
        },
        max_qubits);
    return static_cast<double>(up_votes) / static_cast<double>(total);
}

}  // namespace mqc
