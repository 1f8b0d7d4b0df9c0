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

#include "mqc/model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mqc {

namespace {

void check_finite(double value, const char *what) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string("non-finite ") + what);
    }
}

std::vector<double> validated_linear(std::size_t n, std::vector<double> linear) {
    if (n == 0) {
        throw std::invalid_argument("model needs at least one variable");
    }
    if (linear.empty()) {
        linear.assign(n, 0.0);
    } else if (linear.size() != n) {
        throw std::invalid_argument(
            "linear coefficient count " + std::to_string(linear.size()) + " does not match variable count " +
            std::to_string(n));
    }
    for (double a : linear) {
        check_finite(a, "linear coefficient");
    }
    return linear;
}

// Canonical coupler list: i < j, sorted by (i, j), no duplicates.
std::vector<Coupler> validated_couplers(std::size_t n, std::vector<Coupler> couplers) {
    for (auto &c : couplers) {
        if (c.i >= n || c.j >= n) {
            throw std::invalid_argument(
                "coupler (" + std::to_string(c.i) + ", " + std::to_string(c.j) + ") out of range for " +
                std::to_string(n) + " variables");
        }
        if (c.i == c.j) {
            throw std::invalid_argument("self coupler on variable " + std::to_string(c.i));
        }
        check_finite(c.weight, "coupler coefficient");
        if (c.i > c.j) {
            std::swap(c.i, c.j);
        }
    }
    std::sort(couplers.begin(), couplers.end(), [](const Coupler &x, const Coupler &y) {
        return x.i != y.i ? x.i < y.i : x.j < y.j;
    });
    for (std::size_t k = 1; k < couplers.size(); ++k) {
        if (couplers[k].i == couplers[k - 1].i && couplers[k].j == couplers[k - 1].j) {
            throw std::invalid_argument(
                "duplicate coupler (" + std::to_string(couplers[k].i) + ", " + std::to_string(couplers[k].j) + ")");
        }
    }
    return couplers;
}

}  // namespace

Sample::Sample(std::size_t num_qubits, std::int8_t fill) : spins_(num_qubits, fill) {
    if (fill != 1 && fill != -1) {
        throw std::invalid_argument("spin fill value must be -1 or +1");
    }
}

Sample::Sample(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
    for (auto s : spins_) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("spin value " + std::to_string(s) + " is not -1 or +1");
        }
    }
}

Sample Sample::from_bits(std::span<const std::uint8_t> bits) {
    std::vector<std::int8_t> spins;
    spins.reserve(bits.size());
    for (auto b : bits) {
        if (b > 1) {
            throw std::invalid_argument("binary value " + std::to_string(b) + " is not 0 or 1");
        }
        spins.push_back(b ? 1 : -1);
    }
    return Sample(std::move(spins));
}

std::vector<std::uint8_t> Sample::to_bits() const {
    std::vector<std::uint8_t> bits(spins_.size());
    std::transform(spins_.begin(), spins_.end(), bits.begin(), [](std::int8_t s) {
        return static_cast<std::uint8_t>(s > 0);
    });
    return bits;
}

void Sample::set(std::size_t i, std::int8_t spin) {
    if (spin != 1 && spin != -1) {
        throw std::invalid_argument("spin value must be -1 or +1");
    }
    spins_[i] = spin;
}

Sample Sample::negated() const {
    Sample out = *this;
    for (auto &s : out.spins_) {
        s = static_cast<std::int8_t>(-s);
    }
    return out;
}

int Sample::count_up() const {
    return static_cast<int>(std::count(spins_.begin(), spins_.end(), std::int8_t{1}));
}

IsingModel::IsingModel(
    std::size_t num_qubits, std::vector<double> linear, std::vector<Coupler> couplers, double offset)
    : linear_(validated_linear(num_qubits, std::move(linear))),
      couplers_(validated_couplers(num_qubits, std::move(couplers))),
      offset_(offset) {
    check_finite(offset_, "offset");

    std::vector<std::size_t> degree(num_qubits, 0);
    for (const auto &c : couplers_) {
        if (c.weight != 0.0) {
            ++degree[c.i];
            ++degree[c.j];
        }
    }
    row_start_.assign(num_qubits + 1, 0);
    for (std::size_t i = 0; i < num_qubits; ++i) {
        row_start_[i + 1] = row_start_[i] + degree[i];
    }
    adjacency_.resize(row_start_.back());
    std::vector<std::size_t> cursor(row_start_.begin(), row_start_.end() - 1);
    for (const auto &c : couplers_) {
        if (c.weight != 0.0) {
            adjacency_[cursor[c.i]++] = {c.j, c.weight};
            adjacency_[cursor[c.j]++] = {c.i, c.weight};
        }
    }
}

bool IsingModel::conforms_to_hardware_range() const {
    return std::all_of(linear_.begin(), linear_.end(), [](double a) { return std::abs(a) <= kHardwareLinearBound; }) &&
           std::all_of(couplers_.begin(), couplers_.end(), [](const Coupler &c) {
               return std::abs(c.weight) <= kHardwareQuadraticBound;
           });
}

void IsingModel::require_hardware_range() const {
    for (std::size_t i = 0; i < linear_.size(); ++i) {
        if (std::abs(linear_[i]) > kHardwareLinearBound) {
            throw std::domain_error("qubit " + std::to_string(i) + " coefficient outside [-2, 2]");
        }
    }
    for (const auto &c : couplers_) {
        if (std::abs(c.weight) > kHardwareQuadraticBound) {
            throw std::domain_error(
                "coupler (" + std::to_string(c.i) + ", " + std::to_string(c.j) + ") coefficient outside [-1, 1]");
        }
    }
}

bool IsingModel::operator==(const IsingModel &other) const {
    return offset_ == other.offset_ && linear_ == other.linear_ && couplers_ == other.couplers_;
}

QuboModel::QuboModel(std::size_t num_vars, std::vector<double> linear, std::vector<Coupler> couplers, double offset)
    : linear_(validated_linear(num_vars, std::move(linear))),
      couplers_(validated_couplers(num_vars, std::move(couplers))),
      offset_(offset) {
    check_finite(offset_, "offset");
}

double energy(const IsingModel &model, const Sample &sample) {
    if (sample.size() != model.num_qubits()) {
        throw std::invalid_argument(
            "sample length " + std::to_string(sample.size()) + " does not match model size " +
            std::to_string(model.num_qubits()));
    }
    double total = model.offset();
    for (std::size_t i = 0; i < sample.size(); ++i) {
        total += model.linear(i) * sample[i];
    }
    for (const auto &c : model.couplers()) {
        total += c.weight * sample[c.i] * sample[c.j];
    }
    return total;
}

double qubo_energy(const QuboModel &model, std::span<const std::uint8_t> bits) {
    if (bits.size() != model.num_vars()) {
        throw std::invalid_argument("assignment length does not match model size");
    }
    double total = model.offset();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) {
            throw std::invalid_argument("binary value is not 0 or 1");
        }
        if (bits[i]) {
            total += model.linear(i);
        }
    }
    for (const auto &c : model.couplers()) {
        if (bits[c.i] && bits[c.j]) {
            total += c.weight;
        }
    }
    return total;
}

double local_field(const IsingModel &model, const Sample &sample, std::size_t i) {
    double field = model.linear(i);
    for (const auto &nb : model.neighbors(i)) {
        field += nb.weight * sample[nb.index];
    }
    return field;
}

double delta_energy_flip(const IsingModel &model, const Sample &sample, std::span<const Index> indices) {
    const std::size_t n = model.num_qubits();
    if (sample.size() != n) {
        throw std::invalid_argument("sample length does not match model size");
    }
    if (indices.empty()) {
        return 0.0;
    }
    std::vector<std::uint8_t> in_set(n, 0);
    for (Index i : indices) {
        if (i >= n) {
            throw std::out_of_range("flip index " + std::to_string(i) + " out of range");
        }
        in_set[i] = 1;
    }
    // Each changed term flips sign, so the delta is -2x its current value.
    double kept = 0.0;
    for (Index i : indices) {
        if (in_set[i] != 1) {
            continue;
        }
        in_set[i] = 2;
        kept += model.linear(i) * sample[i];
        for (const auto &nb : model.neighbors(i)) {
            if (!in_set[nb.index]) {
                kept += nb.weight * sample[i] * sample[nb.index];
            }
        }
    }
    return -2.0 * kept;
}

IsingModel qubo_to_ising(const QuboModel &qubo) {
    // x = (1 + q) / 2
    const std::size_t n = qubo.num_vars();
    std::vector<double> linear(n);
    double offset = qubo.offset();
    for (std::size_t i = 0; i < n; ++i) {
        linear[i] = qubo.linear(i) / 2.0;
        offset += qubo.linear(i) / 2.0;
    }
    std::vector<Coupler> couplers;
    couplers.reserve(qubo.couplers().size());
    for (const auto &c : qubo.couplers()) {
        const double quarter = c.weight / 4.0;
        couplers.push_back({c.i, c.j, quarter});
        linear[c.i] += quarter;
        linear[c.j] += quarter;
        offset += quarter;
    }
    return IsingModel(n, std::move(linear), std::move(couplers), offset);
}

QuboModel ising_to_qubo(const IsingModel &model) {
    // q = 2x - 1
    const std::size_t n = model.num_qubits();
    std::vector<double> linear(n);
    double offset = model.offset();
    for (std::size_t i = 0; i < n; ++i) {
        linear[i] = 2.0 * model.linear(i);
        offset -= model.linear(i);
    }
    std::vector<Coupler> couplers;
    couplers.reserve(model.couplers().size());
    for (const auto &c : model.couplers()) {
        couplers.push_back({c.i, c.j, 4.0 * c.weight});
        linear[c.i] -= 2.0 * c.weight;
        linear[c.j] -= 2.0 * c.weight;
        offset += c.weight;
    }
    return QuboModel(n, std::move(linear), std::move(couplers), offset);
}

}  // namespace mqc
