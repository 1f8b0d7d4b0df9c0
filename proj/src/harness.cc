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

#include "mqc/harness.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>

#include "mqc/correction.h"
#include "mqc/oracle.h"
#include "mqc/rng.h"

namespace mqc {

std::vector<bool> vote(const Sample &sample, const ChainMap &chains) {
    std::vector<std::uint8_t> used(sample.size(), 0);
    std::vector<bool> votes;
    votes.reserve(chains.size());
    for (const auto &chain : chains) {
        std::size_t up = 0;
        for (Index i : chain) {
            if (i >= sample.size()) {
                throw std::out_of_range("chain index " + std::to_string(i) + " outside sample");
            }
            if (used[i]) {
                throw std::invalid_argument("qubit " + std::to_string(i) + " appears in more than one chain");
            }
            used[i] = 1;
            up += sample[i] > 0;
        }
        votes.push_back(2 * up >= chain.size());
    }
    return votes;
}

std::string format_csv_real(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void RandomCoeffConfig::validate() const {
    if (cases == 0) {
        throw std::invalid_argument("need at least one case");
    }
    if (batch_size == 0 || samples_per_case == 0 || samples_per_case % batch_size != 0) {
        throw std::invalid_argument("batch size must be positive and divide the samples per case");
    }
    if (chimera.rows == 0 || chimera.cols == 0 || chimera.shore == 0) {
        throw std::invalid_argument("Chimera dimensions must be positive");
    }
    if (!(noise >= 0.0 && noise <= 1.0)) {
        throw std::invalid_argument("noise must lie in [0, 1]");
    }
    schedule.validate();
}

RandomCoeffResult experiment_random_coeff(const RandomCoeffConfig &config) {
    config.validate();
    const Graph graph = gen_chimera_edges(config.chimera);
    const std::size_t batches = config.num_batches();

    RandomCoeffResult result;
    result.summary.cases = config.cases;
    result.summary.reached_final_at.assign(batches + 1, 0);

    for (std::size_t c = 0; c < config.cases; ++c) {
        const std::uint64_t case_seed = Rng::stream(config.seed, StreamDomain::experiment_case, c).next();
        const IsingModel model = gen_random_model(graph, case_seed);
        const SamplePopulation raw = inject_noise(
            model, sample_sa(model, config.samples_per_case, case_seed, config.schedule), config.noise, case_seed);

        std::vector<double> sqc_energies;
        sqc_energies.reserve(raw.size());
        for (const auto &s : raw.samples()) {
            sqc_energies.push_back(energy(model, sqc(model, s)));
        }

        std::vector<ConvergenceRow> rows;
        std::optional<Sample> best;
        double raw_best = raw.energy(0);
        double sqc_best = sqc_energies[0];
        for (std::size_t k = 0; k < batches; ++k) {
            const std::size_t begin = k * config.batch_size;
            const std::size_t end = begin + config.batch_size;
            for (std::size_t i = begin; i < end; ++i) {
                raw_best = std::min(raw_best, raw.energy(i));
                sqc_best = std::min(sqc_best, sqc_energies[i]);
            }
            AggregateResult agg = aggregate_incremental(model, best, raw.slice(begin, end));
            best = std::move(agg.sample);
            ConvergenceRow row;
            row.case_id = c;
            row.subset_size = end;
            row.raw_best = raw_best;
            row.sqc_best = sqc_best;
            row.mqc_energy = agg.energy;
            row.improved = agg.energy < raw_best - kEnergyTolerance;
            rows.push_back(row);
        }

        const ConvergenceRow &last = rows.back();
        std::size_t first_final = batches;
        for (std::size_t k = 0; k < batches; ++k) {
            rows[k].reached_final = rows[k].mqc_energy <= last.mqc_energy + kEnergyTolerance;
            if (rows[k].reached_final && first_final == batches) {
                first_final = k;
            }
        }
        if (last.improved) {
            ++result.summary.mqc_improved_over_raw;
            ++result.summary.reached_final_at[first_final + 1];
        } else {
            ++result.summary.reached_final_at[0];
        }
        if (last.sqc_best < last.raw_best - kEnergyTolerance) {
            ++result.summary.sqc_improved_over_raw;
        }
        if (last.mqc_energy < last.sqc_best - kEnergyTolerance) {
            ++result.summary.mqc_improved_over_sqc;
        }
        result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    }
    return result;
}

std::string convergence_csv(std::span<const ConvergenceRow> rows) {
    std::string out = "case,N,raw_best,sqc_best,mqc_energy,improved,reached_final\n";
    for (const auto &row : rows) {
        out += std::to_string(row.case_id) + "," + std::to_string(row.subset_size) + "," +
               format_csv_real(row.raw_best) + "," + format_csv_real(row.sqc_best) + "," +
               format_csv_real(row.mqc_energy) + "," + (row.improved ? "1" : "0") + "," +
               (row.reached_final ? "1" : "0") + "\n";
    }
    return out;
}

std::string convergence_summary_text(const ConvergenceSummary &summary, std::size_t batch_size) {
    std::string header = "N";
    std::string counts = "cases";
    for (std::size_t k = 0; k < summary.reached_final_at.size(); ++k) {
        header += "," + std::to_string(k * batch_size);
        counts += "," + std::to_string(summary.reached_final_at[k]);
    }
    std::string out = header + "\n" + counts + "\n";
    out += "mqc_improved_over_raw," + std::to_string(summary.mqc_improved_over_raw) + "/" +
           std::to_string(summary.cases) + "\n";
    out += "sqc_improved_over_raw," + std::to_string(summary.sqc_improved_over_raw) + "/" +
           std::to_string(summary.cases) + "\n";
    out += "mqc_improved_over_sqc," + std::to_string(summary.mqc_improved_over_sqc) + "/" +
           std::to_string(summary.cases) + "\n";
    return out;
}

std::string_view method_name(ChainMethod method) {
    switch (method) {
        case ChainMethod::raw:
            return "raw";
        case ChainMethod::sqc:
            return "sqc";
        case ChainMethod::mqc:
            return "mqc";
    }
    return "?";
}

ChainMethod parse_chain_method(std::string_view name) {
    if (name == "raw") {
        return ChainMethod::raw;
    }
    if (name == "sqc") {
        return ChainMethod::sqc;
    }
    if (name == "mqc") {
        return ChainMethod::mqc;
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    if (points == 0) {
        return {};
    }
    if (points == 1) {
        return {lo};
    }
    std::vector<double> grid(points);
    for (std::size_t k = 0; k < points; ++k) {
        // Computed from the endpoints so 0 lands exactly on symmetric grids.
        grid[k] = (lo * static_cast<double>(points - 1 - k) + hi * static_cast<double>(k)) /
                  static_cast<double>(points - 1);
    }
    return grid;
}

void ChainConfig::validate() const {
    if (chain_length == 0 || chains == 0) {
        throw std::invalid_argument("chain length and chain count must be positive");
    }
    if (a_grid.empty() || b_grid.empty()) {
        throw std::invalid_argument("coefficient grids must not be empty");
    }
    if (samples == 0) {
        throw std::invalid_argument("need at least one sample");
    }
    if (!(noise >= 0.0 && noise <= 1.0)) {
        throw std::invalid_argument("noise must lie in [0, 1]");
    }
    if (theoretical && chain_length > kDefaultOracleQubitCap) {
        throw OracleCapError(
            "chain length " + std::to_string(chain_length) + " exceeds the exhaustive-search cap of " +
            std::to_string(kDefaultOracleQubitCap));
    }
    schedule.validate();
}

namespace {

double vote_fraction(std::span<const Sample> samples, const ChainMap &chains) {
    std::size_t up = 0;
    std::size_t total = 0;
    for (const auto &s : samples) {
        for (bool v : vote(s, chains)) {
            up += v;
            ++total;
        }
    }
    return static_cast<double>(up) / static_cast<double>(total);
}

Sample chain_slice(const Sample &sample, std::span<const Index> chain) {
    std::vector<std::int8_t> spins;
    spins.reserve(chain.size());
    for (Index i : chain) {
        spins.push_back(sample[i]);
    }
    return Sample(std::move(spins));
}

}  // namespace

ChainResult experiment_chain(const ChainConfig &config) {
    config.validate();
    const std::size_t methods = config.methods.size();
    const std::size_t grid_points = config.a_grid.size() * config.b_grid.size();

    // p[m][bi * |a| + ai]; index `methods` holds the theoretical curve.
    std::vector<std::vector<double>> p(methods + 1, std::vector<double>(grid_points, 0.0));
    ChainResult result;

    for (std::size_t bi = 0; bi < config.b_grid.size(); ++bi) {
        for (std::size_t ai = 0; ai < config.a_grid.size(); ++ai) {
            const double a = config.a_grid[ai];
            const double b = config.b_grid[bi];
            const std::size_t g = bi * config.a_grid.size() + ai;

            if (config.theoretical) {
                p[methods][g] = theoretical_vote_prob(config.chain_length, a, b);
            }
            if (methods == 0) {
                continue;
            }

            const std::uint64_t point_seed = Rng::stream(config.seed, StreamDomain::experiment_case, g).next();
            const ChainModel chain = gen_chain_model({config.chain_length, a, b, config.chains});
            const SamplePopulation raw = inject_noise(
                chain.model, sample_sa(chain.model, config.samples, point_seed, config.schedule), config.noise,
                point_seed);

            for (std::size_t m = 0; m < methods; ++m) {
                switch (config.methods[m]) {
                    case ChainMethod::raw:
                        p[m][g] = vote_fraction(raw.samples(), chain.chains);
                        break;
                    case ChainMethod::sqc: {
                        std::vector<Sample> corrected;
                        corrected.reserve(raw.size());
                        for (const auto &s : raw.samples()) {
                            corrected.push_back(sqc(chain.model, s));
                        }
                        p[m][g] = vote_fraction(corrected, chain.chains);
                        break;
                    }
                    case ChainMethod::mqc: {
                        const AggregateResult agg = tournament_aggregate(chain.model, raw);
                        p[m][g] = vote_fraction(std::span<const Sample>(&agg.sample, 1), chain.chains);
                        if (config.theoretical) {
                            const auto single = gen_chain_model({config.chain_length, a, b, 1});
                            const double ground = exact_ground(single.model).energy;
                            double worst = -std::numeric_limits<double>::infinity();
                            for (const auto &indices : chain.chains) {
                                worst = std::max(worst, energy(single.model, chain_slice(agg.sample, indices)) - ground);
                            }
                            result.ground_checks.push_back({a, b, ground, worst});
                        }
                        break;
                    }
                }
            }
        }
    }

    for (std::size_t m = 0; m <= methods; ++m) {
        if (m == methods && !config.theoretical) {
            break;
        }
        const std::string name = m == methods ? "theoretical" : std::string(method_name(config.methods[m]));
        for (std::size_t bi = 0; bi < config.b_grid.size(); ++bi) {
            for (std::size_t ai = 0; ai < config.a_grid.size(); ++ai) {
                result.points.push_back(
                    {name, config.b_grid[bi], config.a_grid[ai], p[m][bi * config.a_grid.size() + ai]});
            }
        }
    }
    return result;
}

std::string chain_curves_csv(std::span<const ChainCurvePoint> points) {
    std::string out = "method,b,a,p_true\n";
    for (const auto &pt : points) {
        out += pt.method + "," + format_csv_real(pt.b) + "," + format_csv_real(pt.a) + "," +
               format_csv_real(pt.p_true) + "\n";
    }
    return out;
}

}  // namespace mqc
