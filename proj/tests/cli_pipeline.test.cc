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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "mqc/model_io.h"
#include "mqc/oracle.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string &args) {
    const std::string command = std::string(MQC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE *pipe = popen(command.c_str(), "r");
    if (!pipe) {
        return result;
    }
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.out.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<double> parse_lines(const std::string &text) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        values.push_back(std::stod(line));
    }
    return values;
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("mqc_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, no_arguments_is_usage_error) {
    ASSERT_EQ(run("").exit_code, 2);
}

TEST_F(CliTest, unknown_flag_or_subcommand_is_usage_error) {
    ASSERT_EQ(run("energy --bogus 1").exit_code, 2);
    ASSERT_EQ(run("frobnicate").exit_code, 2);
    ASSERT_EQ(run("sample --model x.txt").exit_code, 2);
}

TEST_F(CliTest, energy_prints_one_line_per_sample) {
    mqc::write_text_file(path("m.txt"), "ising 2\nv 0 1\nv 1 -1\nc 0 1 1\n");
    mqc::write_text_file(path("s.txt"), "1 1\n-1 1\n1 -1\n");
    auto r = run("energy --model " + path("m.txt") + " --samples " + path("s.txt"));
    ASSERT_EQ(r.exit_code, 0);
    ASSERT_EQ(parse_lines(r.out), (std::vector<double>{1.0, -3.0, 1.0}));
}

TEST_F(CliTest, bad_input_exits_nonzero) {
    mqc::write_text_file(path("m.txt"), "ising 2\nc 1 1 0.5\n");
    mqc::write_text_file(path("s.txt"), "1 1\n");
    ASSERT_EQ(run("energy --model " + path("m.txt") + " --samples " + path("s.txt")).exit_code, 1);
    ASSERT_EQ(run("energy --model " + path("missing.txt") + " --samples " + path("s.txt")).exit_code, 1);
}

TEST_F(CliTest, mqc_correction_never_raises_energy) {
    ASSERT_EQ(
        run("gen-model --topology chimera --rows 2 --cols 2 --shore 4 --seed 3 --out " + path("m.txt")).exit_code,
        0);
    ASSERT_EQ(
        run("sample --model " + path("m.txt") + " --method sa --count 16 --sweeps 5 --seed 4 --noise 0.05 --out " +
            path("s.txt"))
            .exit_code,
        0);
    auto before = run("energy --model " + path("m.txt") + " --samples " + path("s.txt"));
    ASSERT_EQ(before.exit_code, 0);
    auto input = parse_lines(before.out);
    ASSERT_EQ(input.size(), 16u);

    ASSERT_EQ(
        run("correct --model " + path("m.txt") + " --samples " + path("s.txt") + " --method mqc --report " +
            path("r.csv") + " --out " + path("c.txt"))
            .exit_code,
        0);
    auto after = parse_lines(run("energy --model " + path("m.txt") + " --samples " + path("c.txt")).out);
    ASSERT_EQ(after.size(), 1u);
    ASSERT_LE(after[0], *std::min_element(input.begin(), input.end()) + 1e-9);

    const std::string report = mqc::read_text_file(path("r.csv"));
    ASSERT_EQ(report.substr(0, report.find('\n')), "round,pair,E_A,E_B,E_C,tunnels,flipped");
    ASSERT_EQ(std::count(report.begin(), report.end(), '\n'), 16);

    ASSERT_EQ(
        run("correct --model " + path("m.txt") + " --samples " + path("s.txt") + " --method sqc --out " +
            path("q.txt"))
            .exit_code,
        0);
    auto sqc_energies = parse_lines(run("energy --model " + path("m.txt") + " --samples " + path("q.txt")).out);
    ASSERT_EQ(sqc_energies.size(), 16u);
    for (std::size_t k = 0; k < 16; ++k) {
        ASSERT_LE(sqc_energies[k], input[k] + 1e-9);
    }
}

TEST_F(CliTest, solve_exact_matches_library_oracle) {
    ASSERT_EQ(
        run("gen-model --topology chain --chain-length 10 --a 0 --b -1 --out " + path("chain.txt")).exit_code, 0);
    auto r = run("solve-exact --model " + path("chain.txt") + " --all-ground");
    ASSERT_EQ(r.exit_code, 0);
    ASSERT_EQ(r.out, "# ground_energy -9\n# ground_states 2\n-1 -1 -1 -1 -1 -1 -1 -1 -1 -1\n1 1 1 1 1 1 1 1 1 1\n");

    ASSERT_EQ(
        run("gen-model --topology erdos --vertices 12 --edge-prob 0.4 --seed 2 --out " + path("e.txt")).exit_code, 0);
    auto model = std::get<mqc::IsingModel>(mqc::parse_model(mqc::read_text_file(path("e.txt"))));
    auto single = run("solve-exact --model " + path("e.txt") + " --out " + path("g.txt"));
    ASSERT_EQ(single.exit_code, 0);
    const std::string text = mqc::read_text_file(path("g.txt"));
    ASSERT_EQ(text.rfind("# ground_energy ", 0), 0u);
    const double e = std::stod(text.substr(16, text.find('\n') - 16));
    ASSERT_NEAR(e, mqc::exact_ground(model).energy, 1e-9);

    ASSERT_EQ(run("solve-exact --model " + path("e.txt") + " --max-qubits 8").exit_code, 1);
}

TEST_F(CliTest, qubo_models_round_trip_through_cli) {
    mqc::write_text_file(path("q.txt"), "qubo 2\nv 0 -1\nv 1 -1\nc 0 1 3\n");
    mqc::write_text_file(path("s.txt"), "1 1\n1 0\n0 0\n");
    auto r = run("energy --model " + path("q.txt") + " --samples " + path("s.txt"));
    ASSERT_EQ(r.exit_code, 0);
    ASSERT_EQ(parse_lines(r.out), (std::vector<double>{1.0, -1.0, 0.0}));
    auto g = run("solve-exact --model " + path("q.txt") + " --all-ground");
    ASSERT_EQ(g.out, "# ground_energy -1\n# ground_states 2\n1 0\n0 1\n");
}

TEST_F(CliTest, experiments_write_csv) {
    auto rc = run(
        "experiment random-coeff --cases 2 --rows 1 --cols 1 --samples 40 --batch 20 --sweeps 5 --seed 1 --out " +
        path("conv.csv") + " --summary " + path("summary.txt"));
    ASSERT_EQ(rc.exit_code, 0);
    const std::string conv = mqc::read_text_file(path("conv.csv"));
    ASSERT_EQ(std::count(conv.begin(), conv.end(), '\n'), 5);

    auto ch = run(
        "experiment chain --chains 4 --a-points 3 --b-points 2 --samples 8 --sweeps 5 --methods mqc --seed 1");
    ASSERT_EQ(ch.exit_code, 0);
    ASSERT_EQ(ch.out.substr(0, ch.out.find('\n')), "method,b,a,p_true");
    ASSERT_EQ(std::count(ch.out.begin(), ch.out.end(), '\n'), 13);
    auto again = run(
        "experiment chain --chains 4 --a-points 3 --b-points 2 --samples 8 --sweeps 5 --methods mqc --seed 1");
    ASSERT_EQ(again.out, ch.out);

    ASSERT_EQ(run("experiment chain --methods tabu --seed 1").exit_code, 1);
}
