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

#ifndef MQC_MODEL_H
#define MQC_MODEL_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mqc {

using Index = std::uint32_t;

/// Absolute tolerance used for every energy comparison in the library.
inline constexpr double kEnergyTolerance = 1e-9;

/// Hardware coefficient ranges: qubit biases in [-2, 2], couplers in [-1, 1].
inline constexpr double kHardwareLinearBound = 2.0;
inline constexpr double kHardwareQuadraticBound = 1.0;

/// One undirected interaction. Models always store it with i < j.
struct Coupler {
    Index i = 0;
    Index j = 0;
    double weight = 0.0;

    bool operator==(const Coupler &) const = default;
};

/// A full spin assignment, every entry exactly -1 or +1.
class Sample {
   public:
    Sample() = default;
    explicit Sample(std::size_t num_qubits, std::int8_t fill = -1);
    explicit Sample(std::vector<std::int8_t> spins);

    /// Maps 0 -> -1 and 1 -> +1; any other value throws.
    static Sample from_bits(std::span<const std::uint8_t> bits);
    std::vector<std::uint8_t> to_bits() const;

    std::size_t size() const {
        return spins_.size();
    }
    std::int8_t operator[](std::size_t i) const {
        return spins_[i];
    }
    std::span<const std::int8_t> spins() const {
        return spins_;
    }

    void flip(std::size_t i) {
        spins_[i] = static_cast<std::int8_t>(-spins_[i]);
    }
    void set(std::size_t i, std::int8_t spin);

    Sample negated() const;
    int count_up() const;

    bool operator==(const Sample &) const = default;

   private:
    std::vector<std::int8_t> spins_;
};

/// Ising objective offset + sum_i a_i q_i + sum_{i<j} b_ij q_i q_j.
///
/// Each stored coupler contributes exactly once. The model is immutable after
/// construction; the sparse adjacency used by every hot loop is built here.
class IsingModel {
   public:
    struct Neighbor {
        Index index;
        double weight;
    };

    /// `linear` may be empty (all zero) or have exactly `num_qubits` entries.
    /// Couplers given as (j, i) are canonicalized to (i, j). Self pairs,
    /// duplicate pairs, out-of-range indices and non-finite values throw
    /// std::invalid_argument.
    IsingModel(std::size_t num_qubits, std::vector<double> linear, std::vector<Coupler> couplers, double offset = 0.0);

    std::size_t num_qubits() const {
        return linear_.size();
    }
    double linear(std::size_t i) const {
        return linear_[i];
    }
    std::span<const double> linear() const {
        return linear_;
    }
    std::span<const Coupler> couplers() const {
        return couplers_;
    }
    double offset() const {
        return offset_;
    }

    /// Neighbors of qubit i through couplers with a nonzero weight.
    std::span<const Neighbor> neighbors(std::size_t i) const {
        return {adjacency_.data() + row_start_[i], adjacency_.data() + row_start_[i + 1]};
    }

    bool conforms_to_hardware_range() const;
    /// Throws std::domain_error naming the first out-of-range coefficient.
    void require_hardware_range() const;

    bool operator==(const IsingModel &other) const;

   private:
    std::vector<double> linear_;
    std::vector<Coupler> couplers_;
    double offset_;
    std::vector<std::size_t> row_start_;
    std::vector<Neighbor> adjacency_;
};

/// Same shape as IsingModel over binary variables x_i in {0, 1}.
class QuboModel {
   public:
    QuboModel(std::size_t num_vars, std::vector<double> linear, std::vector<Coupler> couplers, double offset = 0.0);

    std::size_t num_vars() const {
        return linear_.size();
    }
    double linear(std::size_t i) const {
        return linear_[i];
    }
    std::span<const double> linear() const {
        return linear_;
    }
    std::span<const Coupler> couplers() const {
        return couplers_;
    }
    double offset() const {
        return offset_;
    }

    bool operator==(const QuboModel &) const = default;

   private:
    std::vector<double> linear_;
    std::vector<Coupler> couplers_;
    double offset_;
};

double energy(const IsingModel &model, const Sample &sample);
double qubo_energy(const QuboModel &model, std::span<const std::uint8_t> bits);

/// a_i + sum_j b_ij q_j.
double local_field(const IsingModel &model, const Sample &sample, std::size_t i);

/// Energy change from negating the single spin i.
inline double flip_delta(const IsingModel &model, const Sample &sample, std::size_t i) {
    return -2.0 * sample[i] * local_field(model, sample, i);
}

/// energy(flip(sample, indices)) - energy(sample) without re-evaluating the
/// whole sum. Only linear terms on `indices` and couplers with exactly one
/// endpoint in `indices` change sign. Repeated indices are treated as one.
double delta_energy_flip(const IsingModel &model, const Sample &sample, std::span<const Index> indices);

IsingModel qubo_to_ising(const QuboModel &qubo);
QuboModel ising_to_qubo(const IsingModel &model);

}  // namespace mqc

#endif
