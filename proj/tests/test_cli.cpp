#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "polaron/cli/run.hpp"
#include "polaron/io.hpp"
#include "polaron/units.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using polaron::cli::run;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("polaron_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const
    {
        std::ofstream(dir_ / name) << text;
    }

    std::string read(const std::string& name) const
    {
        std::ifstream in(dir_ / name);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    int call(std::vector<std::string> args)
    {
        out_.str("");
        err_.str("");
        return run(args, out_, err_);
    }

    json summary() const { return json::parse(out_.str()); }

    void write_two_site() const
    {
        write("two_site.json", R"({"sites":[{"modes":[{"omega_ghz":1.0,"huang_rhys":0.04}]},
                                            {"modes":[{"omega_ghz":1.2,"huang_rhys":0.02}]}],
                                   "couplings":[{"i":1,"j":2,"J_ghz":0.5}]})");
    }

    void write_modes_253() const
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> w(100.0, 1800.0), k(1.0, 30.0);
        std::string csv = "wavenumber_cm1,kappa_cm1\n";
        std::vector<double> ws;
        for (int i = 0; i < 253; ++i) ws.push_back(w(rng));
        std::sort(ws.begin(), ws.end());
        for (double x : ws) csv += polaron::io::format_number(x) + "," + polaron::io::format_number(k(rng)) + "\n";
        write("modes.csv", csv);
    }

    fs::path dir_;
    std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, SimulateWritesNormalisedTrajectory)
{
    write_two_site();
    ASSERT_EQ(call({"simulate", "--model", path("two_site.json"), "--t-max", "2", "--dt", "0.01", "--fock-dim", "6",
                    "--out", dir_.string()}),
              0)
        << err_.str();
    const auto table = polaron::io::read_csv(dir_ / "trajectory.csv");
    EXPECT_EQ(table.header, (std::vector<std::string>{"t_ns", "p_site_1", "p_site_2"}));
    EXPECT_EQ(table.rows.size(), 201u);
    for (const auto& row : table.rows) EXPECT_NEAR(std::stod(row[1]) + std::stod(row[2]), 1.0, 1e-10);
    EXPECT_EQ(summary()["command"], "simulate");
}

TEST_F(Cli, ThermalSimulationIsDeterministic)
{
    write_two_site();
    const std::vector<std::string> args{"simulate", "--model", path("two_site.json"), "--t-max", "1", "--dt", "0.1",
                                        "--fock-dim", "4", "--temperature", "0.05", "--samples", "8", "--seed", "5",
                                        "--out", dir_.string()};
    ASSERT_EQ(call(args), 0) << err_.str();
    const std::string first = read("trajectory.csv");
    ASSERT_EQ(call(args), 0);
    EXPECT_EQ(read("trajectory.csv"), first);
}

TEST_F(Cli, TransformChlorosomeShape)
{
    write_modes_253();
    ASSERT_EQ(call({"transform", "--modes", path("modes.csv"), "--chains", "6", "--source-temp", "300",
                    "--target-temp", "0.01", "--out", dir_.string()}),
              0)
        << err_.str();
    EXPECT_EQ(summary()["max_length"], 43);
    const json chains = json::parse(read("chains.json"));
    ASSERT_EQ(chains["chains"].size(), 6u);
    std::size_t longest = 0;
    for (const auto& c : chains["chains"]) longest = std::max(longest, c["omegas_ghz"].size());
    EXPECT_EQ(longest, 43u);
}

TEST_F(Cli, CompileThenFeasibility)
{
    write_two_site();
    ASSERT_EQ(call({"compile", "--model", path("two_site.json"), "--out", dir_.string()}), 0) << err_.str();
    const json design = json::parse(read("design.json"));
    EXPECT_EQ(design["couplings"][0]["g_ghz"], 0.5);
    ASSERT_EQ(call({"feasibility", "--design", path("design.json"), "--out", dir_.string()}), 0) << err_.str();
    EXPECT_EQ(summary()["verdict"], "pass");
    // the compiled design simulates like the model
    ASSERT_EQ(call({"simulate", "--model", path("design.json"), "--t-max", "1", "--dt", "0.1", "--fock-dim", "4",
                    "--out", dir_.string()}),
              0)
        << err_.str();
    EXPECT_EQ(summary()["source"], "design");
}

TEST_F(Cli, FeasibilityFailureExitCode)
{
    write("design.json", R"({"qubits":[{"delta_ghz":5},{"delta_ghz":5}],"couplings":[{"i":1,"j":2,"g_ghz":1.2}]})");
    EXPECT_EQ(call({"feasibility", "--design", path("design.json"), "--out", dir_.string()}), 3);
    const json report = json::parse(read("feasibility.json"));
    EXPECT_EQ(report["verdict"], "fail");
    EXPECT_EQ(report["violated"][0], "g range");
}

TEST_F(Cli, EstimateWritesFrontier)
{
    ASSERT_EQ(call({"estimate", "--max-sites", "10", "--out", dir_.string()}), 0) << err_.str();
    const auto table = polaron::io::read_csv(dir_ / "frontier.csv");
    EXPECT_EQ(table.rows.size(), 10u);
}

TEST_F(Cli, SpectrumOutputs)
{
    write_two_site();
    ASSERT_EQ(call({"spectrum", "--model", path("two_site.json"), "--t-max", "5", "--dt", "0.05", "--fock-dim", "4",
                    "--out", dir_.string()}),
              0)
        << err_.str();
    EXPECT_EQ(read("spectrum.csv").substr(0, 20), "omega_ghz,intensity\n");
    write("density.csv", "omega_ghz,value_ghz\n0.5,0.1\n1.0,0.3\n1.5,0.2\n");
    ASSERT_EQ(call({"spectrum", "--density", path("density.csv"), "--temperature", "0.01", "--out", dir_.string()}),
              0)
        << err_.str();
    const auto table = polaron::io::read_csv(dir_ / "thermal_density.csv");
    EXPECT_EQ(table.rows.size(), 7u);
}

TEST_F(Cli, ValidationErrorsExitTwo)
{
    EXPECT_EQ(call({}), 2);
    EXPECT_EQ(call({"simulate"}), 2);
    EXPECT_EQ(call({"simulate", "--model", path("missing.json")}), 2);
    write("bad.json", R"({"sites":[{"oops":1}]})");
    EXPECT_EQ(call({"simulate", "--model", path("bad.json")}), 2);
    write("empty.csv", "");
    EXPECT_EQ(call({"transform", "--modes", path("empty.csv"), "--chains", "2"}), 2);
    EXPECT_NE(err_.str().find("no samples"), std::string::npos);
    write_two_site();
    EXPECT_EQ(call({"simulate", "--model", path("two_site.json"), "--sector", "weird"}), 2);
    EXPECT_EQ(call({"simulate", "--model", path("two_site.json"), "--t-max", "abc"}), 2);
}
