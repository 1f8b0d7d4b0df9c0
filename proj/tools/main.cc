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

// mqc: generate Ising/QUBO instances, sample them classically, correct the
// samples with SQC or MQC, solve small instances exactly and run the
// convergence and chain experiments.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mqc/correction.h"
#include "mqc/harness.h"
#include "mqc/model_io.h"
#include "mqc/oracle.h"
#include "mqc/samplers.h"
#include "mqc/topology.h"

namespace {

using namespace mqc;

constexpr int kUsageExit = 2;

void emit(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_text_file(path, content);
    }
}

struct LoadedModel {
    AnyModel original;
    IsingModel ising;
    ModelKind kind;
};

LoadedModel load_model(const std::string &path, bool hardware_range) {
    AnyModel any = parse_model(read_text_file(path));
    IsingModel ising = std::holds_alternative<IsingModel>(any) ? std::get<IsingModel>(any)
                                                               : qubo_to_ising(std::get<QuboModel>(any));
    if (hardware_range) {
        ising.require_hardware_range();
    }
    const ModelKind kind = kind_of(any);
    return {std::move(any), std::move(ising), kind};
}

Range parse_range(const std::vector<double> &values, Range fallback) {
    if (values.empty()) {
        return fallback;
    }
    return {values[0], values[1]};
}

struct GenModelArgs {
    std::string topology;
    std::size_t rows = 16, cols = 16, shore = 4;
    std::size_t chain_length = 12, chains = 1;
    std::size_t vertices = 0;
    double edge_probability = 0.5;
    double a = 0.0, b = -1.0;
    std::vector<double> a_range, b_range;
    std::optional<std::uint64_t> seed;
    bool hardware_range = false;
    bool qubo = false;
    std::string out;
};

int run_gen_model(const GenModelArgs &args) {
    std::optional<IsingModel> model;
    if (args.topology == "chain") {
        model = gen_chain_model({args.chain_length, args.a, args.b, args.chains}).model;
    } else {
        if (!args.seed) {
            throw CLI::RequiredError("--seed is required for random coefficients");
        }
        Graph graph;
        if (args.topology == "chimera") {
            graph = gen_chimera_edges({args.rows, args.cols, args.shore});
        } else if (args.topology == "complete") {
            graph = gen_complete_edges(args.vertices);
        } else {
            graph = gen_erdos_edges(args.vertices, args.edge_probability, *args.seed);
        }
        model = gen_random_model(
            graph, *args.seed, parse_range(args.a_range, kHardwareLinearRange),
            parse_range(args.b_range, kHardwareQuadraticRange));
    }
    if (args.hardware_range) {
        model->require_hardware_range();
    }
    emit(args.out, args.qubo ? serialize_model(ising_to_qubo(*model)) : serialize_model(*model));
    return 0;
}

struct SampleArgs {
    std::string model, method = "sa", out;
    std::size_t count = 1000;
    std::uint64_t seed = 0;
    AnnealSchedule schedule;
    double noise = 0.0;
    bool hardware_range = false;
};

int run_sample(const SampleArgs &args) {
    const LoadedModel m = load_model(args.model, args.hardware_range);
    SamplePopulation pop = args.method == "uniform" ? sample_uniform(m.ising, args.count, args.seed)
                                                    : sample_sa(m.ising, args.count, args.seed, args.schedule);
    if (args.noise > 0.0) {
        pop = inject_noise(m.ising, pop, args.noise, args.seed);
    }
    emit(args.out, serialize_samples(pop.samples(), m.kind));
    return 0;
}

struct CorrectArgs {
    std::string model, samples, method = "mqc", report, out;
    bool hardware_range = false;
};

int run_correct(const CorrectArgs &args) {
    const LoadedModel m = load_model(args.model, args.hardware_range);
    auto samples = parse_samples(read_text_file(args.samples), m.ising.num_qubits(), m.kind);
    if (samples.empty()) {
        throw std::invalid_argument("samples file '" + args.samples + "' holds no samples");
    }
    std::string report = "round,pair,E_A,E_B,E_C,tunnels,flipped\n";
    std::vector<Sample> output;

    if (args.method == "sqc" || args.method == "sqc+mqc") {
        for (auto &s : samples) {
            s = sqc(m.ising, s);
        }
    }
    if (args.method == "mqc" || args.method == "sqc+mqc") {
        const AggregateResult agg = tournament_aggregate(m.ising, SamplePopulation::evaluate(m.ising, samples));
        for (const auto &merge : agg.merges) {
            report += std::to_string(merge.round) + "," + std::to_string(merge.pair) + "," +
                      format_csv_real(merge.energy_a) + "," + format_csv_real(merge.energy_b) + "," +
                      format_csv_real(merge.energy_c) + "," + std::to_string(merge.tunnels) + "," +
                      std::to_string(merge.flipped) + "\n";
        }
        output.push_back(agg.sample);
    } else {
        output = std::move(samples);
    }
    if (!args.report.empty()) {
        write_text_file(args.report, report);
    }
    emit(args.out, serialize_samples(output, m.kind));
    return 0;
}

struct SolveArgs {
    std::string model, out;
    std::size_t max_qubits = kDefaultOracleQubitCap;
    bool all_ground = false;
    bool hardware_range = false;
};

int run_solve_exact(const SolveArgs &args) {
    const LoadedModel m = load_model(args.model, args.hardware_range);
    std::vector<Sample> states;
    const double ground = for_each_ground_state(
        m.ising,
        [&](const Sample &s) {
            if (args.all_ground || states.empty()) {
                states.push_back(s);
            }
        },
        args.max_qubits);
    std::string text = "# ground_energy " + format_real(ground) + "\n";
    if (args.all_ground) {
        text += "# ground_states " + std::to_string(states.size()) + "\n";
    }
    text += serialize_samples(states, m.kind);
    emit(args.out, text);
    return 0;
}

struct EnergyArgs {
    std::string model, samples;
    bool hardware_range = false;
};

int run_energy(const EnergyArgs &args) {
    const LoadedModel m = load_model(args.model, args.hardware_range);
    const auto samples = parse_samples(read_text_file(args.samples), m.ising.num_qubits(), m.kind);
    std::string text;
    for (const auto &s : samples) {
        const double e = m.kind == ModelKind::qubo ? qubo_energy(std::get<QuboModel>(m.original), s.to_bits())
                                                   : energy(m.ising, s);
        text += format_real(e) + "\n";
    }
    std::cout << text;
    return 0;
}

struct ExperimentArgs {
    RandomCoeffConfig random;
    ChainConfig chain;
    double a_min = -2.0, a_max = 2.0, b_min = -1.0, b_max = 1.0;
    std::size_t a_points = 41, b_points = 17;
    std::string methods = "raw,sqc,mqc";
    std::string out, summary;
};

void add_schedule_options(CLI::App *cmd, AnnealSchedule &schedule, double &noise) {
    cmd->add_option("--sweeps", schedule.sweeps, "Metropolis sweeps per anneal")->capture_default_str();
    cmd->add_option("--t0", schedule.t_initial, "initial temperature")->capture_default_str();
    cmd->add_option("--t1", schedule.t_final, "final temperature")->capture_default_str();
    cmd->add_option("--noise", noise, "per-spin flip probability applied after annealing")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
}

int run_random_coeff(const ExperimentArgs &args) {
    const RandomCoeffResult result = experiment_random_coeff(args.random);
    emit(args.out, convergence_csv(result.rows));
    const std::string summary = convergence_summary_text(result.summary, args.random.batch_size);
    if (!args.summary.empty()) {
        write_text_file(args.summary, summary);
    }
    std::cerr << summary;
    return 0;
}

std::vector<ChainMethod> parse_methods(const std::string &list) {
    std::vector<ChainMethod> methods;
    std::stringstream stream(list);
    std::string name;
    while (std::getline(stream, name, ',')) {
        if (!name.empty() && name != "none") {
            methods.push_back(parse_chain_method(name));
        }
    }
    return methods;
}

int run_chain(ExperimentArgs args) {
    args.chain.a_grid = linear_grid(args.a_min, args.a_max, args.a_points);
    args.chain.b_grid = linear_grid(args.b_min, args.b_max, args.b_points);
    args.chain.methods = parse_methods(args.methods);
    const ChainResult result = experiment_chain(args.chain);
    emit(args.out, chain_curves_csv(result.points));
    if (!result.ground_checks.empty()) {
        double worst = 0.0;
        for (const auto &check : result.ground_checks) {
            worst = std::max(worst, check.worst_excess);
        }
        std::cerr << "mqc worst excess over chain ground energy: " << format_real(worst) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Post-process Ising/QUBO samples with single- and multi-qubit correction"};
    app.name("mqc");
    app.require_subcommand(1);

    GenModelArgs gen;
    auto *gen_cmd = app.add_subcommand("gen-model", "Generate a problem instance");
    gen_cmd->add_option("--topology", gen.topology, "instance graph")
        ->required()
        ->check(CLI::IsMember({"chimera", "chain", "complete", "erdos"}));
    gen_cmd->add_option("--rows", gen.rows, "Chimera cell rows")->capture_default_str();
    gen_cmd->add_option("--cols", gen.cols, "Chimera cell columns")->capture_default_str();
    gen_cmd->add_option("--shore", gen.shore, "Chimera shore size")->capture_default_str();
    gen_cmd->add_option("--chain-length", gen.chain_length, "physical qubits per chain")->capture_default_str();
    gen_cmd->add_option("--chains", gen.chains, "number of chains")->capture_default_str();
    gen_cmd->add_option("--vertices", gen.vertices, "vertex count for complete/erdos graphs");
    gen_cmd->add_option("--edge-prob", gen.edge_probability, "edge probability for erdos graphs")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen_cmd->add_option("--a", gen.a, "chain qubit coefficient")->capture_default_str();
    gen_cmd->add_option("--b", gen.b, "chain coupler coefficient")->capture_default_str();
    gen_cmd->add_option("--a-range", gen.a_range, "LO HI for random qubit coefficients")->expected(2);
    gen_cmd->add_option("--b-range", gen.b_range, "LO HI for random coupler coefficients")->expected(2);
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_flag("--hardware-range", gen.hardware_range, "require a in [-2,2] and b in [-1,1]");
    gen_cmd->add_flag("--qubo", gen.qubo, "write the equivalent QUBO model");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    SampleArgs smp;
    auto *sample_cmd = app.add_subcommand("sample", "Draw classical samples of a model");
    sample_cmd->add_option("--model", smp.model, "model file")->required();
    sample_cmd->add_option("--method", smp.method, "sampler")
        ->check(CLI::IsMember({"uniform", "sa"}))
        ->capture_default_str();
    sample_cmd->add_option("--count", smp.count, "number of samples")->capture_default_str();
    sample_cmd->add_option("--seed", smp.seed, "random seed")->required();
    add_schedule_options(sample_cmd, smp.schedule, smp.noise);
    sample_cmd->add_flag("--hardware-range", smp.hardware_range, "require hardware coefficient ranges");
    sample_cmd->add_option("--out", smp.out, "output samples file (default stdout)");

    CorrectArgs cor;
    auto *correct_cmd = app.add_subcommand("correct", "Correct samples with SQC and/or MQC");
    correct_cmd->add_option("--model", cor.model, "model file")->required();
    correct_cmd->add_option("--samples", cor.samples, "samples file")->required();
    correct_cmd->add_option("--method", cor.method, "correction")
        ->check(CLI::IsMember({"sqc", "mqc", "none", "sqc+mqc"}))
        ->capture_default_str();
    correct_cmd->add_option("--report", cor.report, "merge report CSV");
    correct_cmd->add_flag("--hardware-range", cor.hardware_range, "require hardware coefficient ranges");
    correct_cmd->add_option("--out", cor.out, "output samples file (default stdout)");

    SolveArgs sol;
    auto *solve_cmd = app.add_subcommand("solve-exact", "Exhaustively find the ground energy");
    solve_cmd->add_option("--model", sol.model, "model file")->required();
    solve_cmd->add_option("--max-qubits", sol.max_qubits, "refuse larger models")->capture_default_str();
    solve_cmd->add_flag("--all-ground", sol.all_ground, "emit every ground state");
    solve_cmd->add_flag("--hardware-range", sol.hardware_range, "require hardware coefficient ranges");
    solve_cmd->add_option("--out", sol.out, "output file (default stdout)");

    EnergyArgs en;
    auto *energy_cmd = app.add_subcommand("energy", "Print the energy of each sample");
    energy_cmd->add_option("--model", en.model, "model file")->required();
    energy_cmd->add_option("--samples", en.samples, "samples file")->required();
    energy_cmd->add_flag("--hardware-range", en.hardware_range, "require hardware coefficient ranges");

    ExperimentArgs exp;
    auto *experiment_cmd = app.add_subcommand("experiment", "Run a study and write CSV");
    experiment_cmd->require_subcommand(1);

    auto *random_cmd = experiment_cmd->add_subcommand("random-coeff", "Convergence over nested sample subsets");
    random_cmd->add_option("--cases", exp.random.cases, "number of random models")->capture_default_str();
    random_cmd->add_option("--rows", exp.random.chimera.rows, "Chimera cell rows")->capture_default_str();
    random_cmd->add_option("--cols", exp.random.chimera.cols, "Chimera cell columns")->capture_default_str();
    random_cmd->add_option("--shore", exp.random.chimera.shore, "Chimera shore size")->capture_default_str();
    random_cmd->add_option("--samples", exp.random.samples_per_case, "samples per case")->capture_default_str();
    random_cmd->add_option("--batch", exp.random.batch_size, "samples added per subset")->capture_default_str();
    add_schedule_options(random_cmd, exp.random.schedule, exp.random.noise);
    random_cmd->add_option("--seed", exp.random.seed, "root seed")->required();
    random_cmd->add_option("--out", exp.out, "convergence CSV (default stdout)");
    random_cmd->add_option("--summary", exp.summary, "summary table file");

    auto *chain_cmd = experiment_cmd->add_subcommand("chain", "Virtual-qubit vote curves");
    chain_cmd->add_option("--chain-length", exp.chain.chain_length, "physical qubits per chain")
        ->capture_default_str();
    chain_cmd->add_option("--chains", exp.chain.chains, "chains per model")->capture_default_str();
    chain_cmd->add_option("--a-min", exp.a_min)->capture_default_str();
    chain_cmd->add_option("--a-max", exp.a_max)->capture_default_str();
    chain_cmd->add_option("--a-points", exp.a_points)->capture_default_str();
    chain_cmd->add_option("--b-min", exp.b_min)->capture_default_str();
    chain_cmd->add_option("--b-max", exp.b_max)->capture_default_str();
    chain_cmd->add_option("--b-points", exp.b_points)->capture_default_str();
    chain_cmd->add_option("--samples", exp.chain.samples, "samples per grid point")->capture_default_str();
    add_schedule_options(chain_cmd, exp.chain.schedule, exp.chain.noise);
    chain_cmd->add_option("--methods", exp.methods, "comma list of raw,sqc,mqc (or none)")->capture_default_str();
    chain_cmd->add_option("--seed", exp.chain.seed, "root seed")->required();
    chain_cmd->add_option("--out", exp.out, "chain curves CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        if (argc <= 1) {
            std::cerr << app.help();
        }
        return kUsageExit;
    }

    try {
        if (*gen_cmd) {
            return run_gen_model(gen);
        }
        if (*sample_cmd) {
            return run_sample(smp);
        }
        if (*correct_cmd) {
            return run_correct(cor);
        }
        if (*solve_cmd) {
            return run_solve_exact(sol);
        }
        if (*energy_cmd) {
            return run_energy(en);
        }
        if (*random_cmd) {
            return run_random_coeff(exp);
        }
        if (*chain_cmd) {
            return run_chain(exp);
        }
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageExit;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsageExit;
}
