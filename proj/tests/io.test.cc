// Copyright 2026 The fqsim Authors
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

#include "fqs/io.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fqs/experiment.h"

namespace fqs {
namespace {

namespace fs = std::filesystem;

class TempDir : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fqsim_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    fs::path write(const std::string &name, const std::string &text) {
        std::ofstream(dir_ / name) << text;
        return dir_ / name;
    }
    fs::path dir_;
};

using HamiltonianFile = TempDir;
using Trajectories = TempDir;
using Experiment = TempDir;

TEST_F(HamiltonianFile, ParsesAndRoundTrips) {
    const auto h = parse_hamiltonian_file(write("h.txt", "1.0 ZZ\n"));
    EXPECT_EQ(h.terms().size(), 1u);
    EXPECT_EQ(h.qubit_count(), 2u);
    EXPECT_THROW(parse_hamiltonian_file(write("c.txt", "# nothing\n# here\n")), ParseError);
    EXPECT_THROW(parse_hamiltonian_file(dir_ / "missing.txt"), ArgumentError);

    const auto heis = Hamiltonian::heisenberg_1d(5, 0.3, -1.25, true);
    write_hamiltonian_file(dir_ / "heis.txt", heis);
    EXPECT_EQ(parse_hamiltonian_file(dir_ / "heis.txt"), heis);
}

TEST_F(HamiltonianFile, FifteenTermFileGivesFifteenTrotterTerms) {
    std::string text = "# four-qubit test file\n";
    const char *labels[] = {"IIII", "ZIII", "IZII", "IIZI", "IIIZ", "ZZII", "ZIZI", "ZIIZ",
                            "IZZI", "IZIZ", "IIZZ", "XXYY", "YYXX", "XYYX", "YXXY"};
    for (int k = 0; k < 15; ++k) {
        text += std::to_string(0.1 * (k + 1)) + " " + labels[k] + "\n";
    }
    const auto h = parse_hamiltonian_file(write("h2.txt", text));
    EXPECT_EQ(trotterize(h, 1, 1, TimeKind::Imaginary).terms.size(), 15u);
    EXPECT_EQ(h.terms()[11].label(), "XXYY");
}

TEST(Format, LocaleIndependentRoundTrip) {
    for (double v : {0.1, -1e-300, 12345.678, 1.0 / 3}) {
        const std::string s = format_double(v);
        EXPECT_EQ(s.find(','), std::string::npos);
        EXPECT_EQ(parse_double(s), v);
    }
    EXPECT_THROW(parse_double("1,5"), ArgumentError);
}

TEST(Quantile, Interpolates) {
    EXPECT_DOUBLE_EQ(quantile({3, 1, 2, 4, 5}, 0.5), 3);
    EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4}, 0.25), 1.75);
    EXPECT_DOUBLE_EQ(quantile({7}, 0.75), 7);
    EXPECT_THROW(quantile({}, 0.5), ArgumentError);
}

TEST_F(Trajectories, CsvRoundTripAndCompare) {
    std::vector<TrajectoryRow> a = {{0, 0, -1.5, 0.5, 0.25, ""}, {1, 0.5, -2.0, 0.75, 0.5, ""}};
    std::vector<TrajectoryRow> b = a;
    b[1].energy = -3.0;
    write_trajectory_csv(dir_ / "a.csv", a);
    write_trajectory_csv(dir_ / "b.csv", b);
    std::ifstream in(dir_ / "a.csv");
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, kTrajectoryHeader);

    const auto back = read_trajectory_csv(dir_ / "a.csv");
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[1].energy, -2.0);
    EXPECT_EQ(*back[1].fidelity_exact, 0.75);

    const std::string single = compare_report(std::vector<fs::path>{dir_ / "a.csv"});
    EXPECT_NE(single.find("1,0.5,-2,-2,-2,-2,-2,0.75,0.75,0.75,0.75,0.75"), std::string::npos);
    const std::string two = compare_report(std::vector<fs::path>{dir_ / "a.csv", dir_ / "b.csv"});
    EXPECT_NE(two.find("1,0.5,-3,-2.75,-2.5,-2.25,-2,"), std::string::npos);

    std::vector<TrajectoryRow> c = a;
    c.pop_back();
    EXPECT_THROW(compare_report({a, c}), AlignmentError);
    c = a;
    c[1].step = 2;
    EXPECT_THROW(compare_report({a, c}), AlignmentError);
    EXPECT_THROW(compare_report(std::vector<std::vector<TrajectoryRow>>{}), ArgumentError);
}

TEST_F(Trajectories, ConstantRunsHaveZeroSpread) {
    std::vector<TrajectoryRow> a = {{0, 0, -1.0, std::nullopt, std::nullopt, ""}};
    const std::string r = compare_report({a, a, a});
    EXPECT_NE(r.find("0,0,-1,-1,-1,-1,-1,,,,,,,,,,"), std::string::npos);
}

TEST_F(Experiment, ConfigValidation) {
    EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"bogus": 1})")), ArgumentError);
    EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"seeds": []})")), ArgumentError);
    EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"kind": "complex"})")), ArgumentError);
    EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"steps": "ten"})")), ArgumentError);
    EXPECT_THROW(check_compatibility("nft", "fig3-general", 2, 5), ArgumentError);
    EXPECT_THROW(check_compatibility("rzryrz-nft", "fig3-ry", 2, 5), ArgumentError);
    EXPECT_THROW(check_compatibility("magic", "fig3-ry", 2, 5), ArgumentError);
    EXPECT_NO_THROW(check_compatibility("fqs-2q1p", "fig7-decomposed", 0, 4));
    EXPECT_NO_THROW(check_compatibility("fqs-2q1p", "fig7-rbs", 0, 4));
    EXPECT_NO_THROW(check_compatibility("fqs-2q2p", "fig7-excitation", 0, 4));

    const auto path = write("h.txt", "1 ZZ\n");
    std::ofstream(dir_ / "c.json") << R"({"hamiltonian": {"file": "h.txt"}, "preset": "fig3-ry", "layers": 1})";
    const ExperimentConfig c = load_config(dir_ / "c.json");
    EXPECT_EQ(c.hamiltonian.file, path);
    EXPECT_EQ(c.init.policy, InitPolicy::RandomAngleAxisYPerturbed);
    EXPECT_EQ(config_from_json(c.to_json()).to_json(), c.to_json());
}

TEST_F(Experiment, SmokeRuns) {
    ExperimentConfig c;
    c.name = "A";
    c.output = dir_;
    c.steps = 5;
    c.seeds = {1, 2};
    const ExperimentResult r = run_experiment(c);
    ASSERT_EQ(r.csv_files.size(), 2u);
    for (const auto &f : r.csv_files) {
        EXPECT_EQ(read_trajectory_csv(f).size(), 6u);
    }
    EXPECT_TRUE(fs::exists(dir_ / "A_metadata.json"));
    EXPECT_EQ(r.metadata["parameterized_slots"], 15);
    EXPECT_EQ(r.metadata["trotter_terms"], 20);
    EXPECT_EQ(r.metadata["measurement_types_per_update"]["fqs-1q3p"], 7);
    EXPECT_EQ(r.metadata["improvement_violations"], 0);
    EXPECT_EQ(r.metadata["config"]["sigma"], 0.05);

    c.name = "zero";
    c.steps = 0;
    const ExperimentResult z = run_experiment(c);
    EXPECT_EQ(read_trajectory_csv(z.csv_files[0]).size(), 1u);

    c.name = "B";
    c.steps = 1;
    c.seeds = {1};
    c.preset = "fig3-rzryrz";
    c.optimizer = "rzryrz-nft";
    EXPECT_EQ(run_experiment(c, false).metadata["parameterized_slots"], 45);

    // Concurrent seeds give the same trajectories as sequential ones.
    c.preset = "fig3-general";
    c.optimizer = "fqs-1q3p";
    c.steps = 2;
    c.seeds = {3, 4, 5};
    c.threads = 3;
    const auto par = run_experiment(c, false);
    c.threads = 1;
    const auto seq = run_experiment(c, false);
    for (size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(par.runs[i].rows.back().digest, seq.runs[i].rows.back().digest);
    }
}

TEST_F(Experiment, OutputDirectoryFromEnvironment) {
    ExperimentConfig c;
    setenv(kOutputDirEnv, dir_.c_str(), 1);
    EXPECT_EQ(resolve_output_dir(c), dir_);
    c.output = "/elsewhere";
    EXPECT_EQ(resolve_output_dir(c), fs::path("/elsewhere"));
    unsetenv(kOutputDirEnv);
}

TEST(Landscape, GridsAndErrors) {
    ExperimentConfig c;
    c.hamiltonian.sites = 3;
    c.layers = 1;
    c.seeds = {4};
    EXPECT_EQ(landscape_dump(c, 0, {}), std::string(kLandscapeHeader) + "\n");
    EXPECT_THROW(landscape_dump(c, 6, {8, 0}), IndexError);

    // The angle cut through a single-qubit slot is g0 cos(t/2) + gd sin(t/2).
    const std::string csv = landscape_dump(c, 2, {67, 0});
    std::vector<std::pair<double, double>> pts;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string f[5];
        for (auto &x : f) {
            std::getline(ls, x, ',');
        }
        pts.emplace_back(parse_double(f[0]), parse_double(f[4]));
    }
    ASSERT_EQ(pts.size(), 67u);
    const double g0 = pts[0].second;
    const double gd = (pts[1].second - g0 * std::cos(pts[1].first / 2)) / std::sin(pts[1].first / 2);
    for (const auto &[t, v] : pts) {
        EXPECT_NEAR(g0 * std::cos(t / 2) + gd * std::sin(t / 2), v, 1e-9);
    }
}

}  // namespace
}  // namespace fqs
