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

#ifndef MQC_RNG_H
#define MQC_RNG_H

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mqc {

/// Stream domains keep unrelated random consumers apart even when callers
/// reuse one root seed for everything.
enum class StreamDomain : std::uint64_t {
    model_generation = 1,
    uniform_sampler = 2,
    anneal = 3,
    noise = 4,
    experiment_case = 5,
    graph_generation = 6,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Reproducible generator: std::mt19937_64 seeded from
/// splitmix64(seed ^ splitmix64(domain ^ splitmix64(index))).
///
/// All derived draws (reals, bounded integers, shuffles) are implemented here
/// rather than through <random> distributions, whose output is not specified
/// by the standard and differs between library vendors.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {
    }

    static Rng stream(std::uint64_t seed, StreamDomain domain, std::uint64_t index);

    std::uint64_t next() {
        return engine_();
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    /// Uniform in [lo, hi]; returns lo when lo == hi.
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }
    /// Unbiased integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    std::int8_t spin() {
        return (next() >> 63) ? 1 : -1;
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t k = items.size(); k > 1; --k) {
            std::swap(items[k - 1], items[below(k)]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace mqc

#endif
