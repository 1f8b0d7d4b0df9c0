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

#ifndef MQC_HARNESS_H
#define MQC_HARNESS_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mqc/samplers.h"
#include "mqc/topology.h"

namespace mqc {

/// Majority vote per chain: true when at least half the physical qubits are
/// +1. Throws std::invalid_argument if chains overlap and std::out_of_range
/// on an index outside the sample.
std::vector<bool> vote(const Sample &sample, const ChainMap &chains);

/// Real values in CSV output: 12 significant digits.
std::string format_csv_real(double value);

// ---------------------------------------------------------------------------
// Random-coefficient convergence study.

struct RandomCoeffConfig {
    std::size_t cases = 20;
    ChimeraSpec chimera{3, 3, 4};
    std::size_t samples_per_case = 2000;
    std::size_t batch_size = 200;
    AnnealSchedule schedule{};
    double noise = 0.1;
    std::uint64_t seed = 1;

    void validate() const;
    std::size_t num_batches() const {
        return samples_per_case / batch_size;
    }
};

struct ConvergenceRow {
    std::size_t case_id = 0;
    std::size_t subset_size = 0;
    double raw_best = 0.0;
    double sqc_best = 0.0;
    double mqc_energy = 0.0;
    /// MQC strictly below the best raw sample of this subset.
    bool improved = false;
    /// No larger subset lowers the MQC energy any further.
    bool reached_final = false;
};

struct ConvergenceSummary {
    std::size_t cases = 0;
    /// Entry 0: cases whose final MQC energy did not beat the best raw sample.
    /// Entry k >= 1: cases that first reached their final MQC energy at the
    /// k-th subset.
    std::vector<std::size_t> reached_final_at;
    std::size_t mqc_improved_over_raw = 0;
    std::size_t sqc_improved_over_raw = 0;
    std::size_t mqc_improved_over_sqc = 0;

    double improved_fraction() const {
        return cases ? static_cast<double>(mqc_improved_over_raw) / static_cast<double>(cases) : 0.0;
    }
};

struct RandomCoeffResult {
    std::vector<ConvergenceRow> rows;
    ConvergenceSummary summary;
};

/// Per case: random Chimera model, noisy annealed samples, nested subsets of
/// growing size evaluated by raw minimum, SQC minimum and incremental MQC.
RandomCoeffResult experiment_random_coeff(const RandomCoeffConfig &config);

/// Header `case,N,raw_best,sqc_best,mqc_energy,improved,reached_final`.
std::string convergence_csv(std::span<const ConvergenceRow> rows);
std::string convergence_summary_text(const ConvergenceSummary &summary, std::size_t batch_size);

// ---------------------------------------------------------------------------
// Virtual-qubit chain study.

enum class ChainMethod { raw, sqc, mqc };

std::string_view method_name(ChainMethod method);
/// Parses "raw", "sqc", "mqc"; throws std::invalid_argument otherwise.
ChainMethod parse_chain_method(std::string_view name);

/// `points` evenly spaced values from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

struct ChainConfig {
    std::size_t chain_length = 12;
    std::size_t chains = 40;
    std::vector<double> a_grid = linear_grid(-2.0, 2.0, 41);
    std::vector<double> b_grid = linear_grid(-1.0, 1.0, 17);
    std::size_t samples = 100;
    AnnealSchedule schedule{};
    double noise = 0.02;
    std::vector<ChainMethod> methods{ChainMethod::raw, ChainMethod::sqc, ChainMethod::mqc};
    bool theoretical = true;
    std::uint64_t seed = 1;

    void validate() const;
};

struct ChainCurvePoint {
    /// "raw", "sqc", "mqc" or "theoretical".
    std::string method;
    double b = 0.0;
    double a = 0.0;
    double p_true = 0.0;
};

/// How far the MQC sample sits above the exact chain ground energy at one
/// grid point, maximised over chains.
struct ChainGroundCheck {
    double a = 0.0;
    double b = 0.0;
    double ground_energy = 0.0;
    double worst_excess = 0.0;
};

struct ChainResult {
    /// Sorted by method (config order, theoretical last), then b, then a.
    std::vector<ChainCurvePoint> points;
    /// One entry per grid point when MQC and theoretical curves both run.
    std::vector<ChainGroundCheck> ground_checks;
};

ChainResult experiment_chain(const ChainConfig &config);

/// Header `method,b,a,p_true`.
std::string chain_curves_csv(std::span<const ChainCurvePoint> points);

}  // namespace mqc

#endif
