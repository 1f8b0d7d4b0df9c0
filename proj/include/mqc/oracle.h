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

#ifndef MQC_ORACLE_H
#define MQC_ORACLE_H

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mqc/model.h"

namespace mqc {

inline constexpr std::size_t kDefaultOracleQubitCap = 24;

class OracleCapError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Minimum energy and every assignment within kEnergyTolerance of it.
struct GroundSet {
    double energy = 0.0;
    std::vector<Sample> states;
};

/// Exhaustive search over all 2^n assignments in Gray-code order.
///
/// Ground states are listed in enumeration order. Throws OracleCapError when
/// the model has more than `max_qubits` qubits (hard limit 62).
GroundSet exact_ground(const IsingModel &model, std::size_t max_qubits = kDefaultOracleQubitCap);

/// Same search, streaming ground states to `visit` instead of storing them.
/// Returns the ground energy.
double for_each_ground_state(
    const IsingModel &model, const std::function<void(const Sample &)> &visit,
    std::size_t max_qubits = kDefaultOracleQubitCap);

/// Fraction of the ground states of one uniform chain whose majority vote
/// (ties count as +1) is +1. All ground states are weighted equally.
double theoretical_vote_prob(
    std::size_t chain_length, double linear, double coupling, std::size_t max_qubits = kDefaultOracleQubitCap);

}  // namespace mqc

#endif
