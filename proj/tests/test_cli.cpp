// Config parsing, CSV writing and end-to-end runs of the fracint_cli executable.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fracint/cli/config.hpp"
#include "fracint/cli/csv.hpp"
#include "fracint/cli/schema.hpp"

using namespace fracint::cli;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fracint_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + "_" +
                std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_config(const std::string& name, const std::string& text) const {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    CliResult cli(const std::string& args) const {
        const auto out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
        const std::string cmd = std::string("\"") + FRACINT_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
    }

    fs::path dir_;
};

const char* kSmallNormIdentity = "format = 1\nexperiment = norm-identity\nH = 0.3, 0.7\nn_functions = 3\n";
const char* kSmallIsometry = "format = 1\nexperiment = isometry\nfamily = fbm\nH = 0.3, 0.7\nn_paths = 3000\nn_functions = 3\nsteps = 16\nseed = 5\n";

}  // namespace

// =============================================================================
// Config parsing
// =============================================================================

TEST(Config, DefaultsAreFilledIn) {
    const auto cfg = ExperimentConfig::parse(kSmallNormIdentity);
    EXPECT_EQ(cfg.kind(), "norm-identity");
    EXPECT_EQ(cfg.integer("pieces"), 6);
    EXPECT_DOUBLE_EQ(cfg.real("rel_tol"), 0.01);
    EXPECT_EQ(cfg.seed(), 1u);
    EXPECT_EQ(cfg.reals("H"), (std::vector<double>{0.3, 0.7}));
}

TEST(Config, CommentsBlankLinesAndSpacingIgnored) {
    const auto a = ExperimentConfig::parse(kSmallNormIdentity);
    const auto b = ExperimentConfig::parse("# comment\n\n  n_functions=3\r\nH=0.3 ,0.7\nexperiment=norm-identity\nformat=1\n");
    EXPECT_EQ(a.canonical(), b.canonical());
    EXPECT_EQ(a.hash(), b.hash());
    EXPECT_EQ(a.hash().size(), 16u);
}

TEST(Config, HashChangesWithValues) {
    const auto a = ExperimentConfig::parse(kSmallNormIdentity);
    const auto b = ExperimentConfig::parse("format = 1\nexperiment = norm-identity\nH = 0.3, 0.7\nn_functions = 4\n");
    EXPECT_NE(a.hash(), b.hash());
}

TEST(Config, UnknownKeyRejected) {
    try {
        (void)ExperimentConfig::parse("format = 1\nexperiment = norm-identity\nH = 0.3\nn_functions = 3\ncolour = red\n");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        ASSERT_EQ(e.diagnostics().size(), 1u);
        EXPECT_NE(e.diagnostics()[0].find("unknown key 'colour'"), std::string::npos);
    }
}

TEST(Config, EmptyGridRejected) {
    try {
        (void)ExperimentConfig::parse("format = 1\nexperiment = norm-identity\nH =\nn_functions = 3\n");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("empty parameter grid"), std::string::npos);
    }
}

TEST(Config, EveryProblemIsReported) {
    try {
        (void)ExperimentConfig::parse("format = 2\nexperiment = isometry\nH = 0.3, x\nn_paths = many\n");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        // missing family, malformed list entry, non-integer n_paths
        EXPECT_EQ(e.diagnostics().size(), 3u);
    }
}

TEST(Config, StructuralErrors) {
    EXPECT_THROW((void)ExperimentConfig::parse("format = 1\n"), ConfigError);
    EXPECT_THROW((void)ExperimentConfig::parse("format = 1\nexperiment = teleport\n"), ConfigError);
    EXPECT_THROW((void)ExperimentConfig::parse("format = 1\nexperiment = moments\nn_samples = 10\nn_samples = 20\n"), ConfigError);
    EXPECT_THROW((void)ExperimentConfig::parse("format = 1\nexperiment = moments\nn_samples\n"), ConfigError);
    EXPECT_THROW((void)ExperimentConfig::parse("format = 2\nexperiment = moments\nn_samples = 10\n"), ConfigError);
    EXPECT_THROW((void)ExperimentConfig::parse("format = 1\nexperiment = moments\nn_samples = 10\nsigma = -1\n"), ConfigError);
    EXPECT_THROW((void)ExperimentConfig::load("/nonexistent/fracint.cfg"), ConfigError);
}

TEST(Config, SchemaListsSixKinds) {
    EXPECT_EQ(experiment_specs().size(), 6u);
    for (const char* kind : {"norm-identity", "isometry", "moments", "spde-distributed", "spde-boundary", "threshold-sweep"})
        EXPECT_NE(find_experiment(kind), nullptr) << kind;
    EXPECT_EQ(find_experiment("nope"), nullptr);
}

// =============================================================================
// CSV
// =============================================================================

TEST(Csv, QuotingFollowsRfc4180) {
    EXPECT_EQ(CsvTable::quote("plain"), "plain");
    EXPECT_EQ(CsvTable::quote("a,b"), "\"a,b\"");
    EXPECT_EQ(CsvTable::quote("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(CsvTable::quote("two\nlines"), "\"two\nlines\"");
}

TEST(Csv, CrlfLinesAndRoundTripNumbers) {
    CsvTable t({"name", "value", "flag"});
    t.add_row({"x,y", 0.1, true});
    t.add_row({"z", 1e-300, false});
    std::ostringstream os;
    t.write(os);
    EXPECT_EQ(os.str(), "name,value,flag\r\n\"x,y\",0.1,1\r\nz,1e-300,0\r\n");
}

TEST(Csv, RowWidthChecked) {
    CsvTable t({"a", "b"});
    EXPECT_THROW(t.add_row({1}), std::invalid_argument);
}

// =============================================================================
// End-to-end runs
// =============================================================================

TEST_F(CliTest, SuccessfulRunWritesArtifacts) {
    const auto cfg = write_config("ok.cfg", kSmallNormIdentity);
    const auto out = dir_ / "out";
    const auto r = cli("run \"" + cfg.string() + "\" --out \"" + out.string() + "\"");
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(fs::exists(out / "norm-identity.csv"));
    const auto summary = slurp(out / "summary.json");
    EXPECT_NE(summary.find("\"schema_version\": 1"), std::string::npos);
    EXPECT_NE(summary.find("\"all_passed\": true"), std::string::npos);
    const auto manifest = slurp(out / "manifest.json");
    EXPECT_NE(manifest.find("\"code_version\": \"0.1.0\""), std::string::npos);
    EXPECT_NE(manifest.find(ExperimentConfig::load(cfg.string()).hash()), std::string::npos);
    const auto csv = slurp(out / "norm-identity.csv");
    EXPECT_EQ(csv.substr(0, csv.find("\r\n")), "H,f_id,dh_norm,fourier_norm,ratio,expected_ratio,rel_err,pass");
}

TEST_F(CliTest, FailedAssertionExitsWithOne) {
    const auto cfg = write_config("strict.cfg", std::string(kSmallNormIdentity) + "rel_tol = 0\n");
    const auto r = cli("run \"" + cfg.string() + "\" --out \"" + (dir_ / "out").string() + "\"");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.err.find("FAILED ASSERTIONS"), std::string::npos);
    EXPECT_NE(slurp(dir_ / "out" / "summary.json").find("\"all_passed\": false"), std::string::npos);
}

TEST_F(CliTest, InvalidConfigExitsWithTwo) {
    const auto unknown = write_config("unknown.cfg", std::string(kSmallNormIdentity) + "speed = 3\n");
    auto r = cli("run \"" + unknown.string() + "\" --out \"" + (dir_ / "out").string() + "\"");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("unknown key 'speed'"), std::string::npos);
    EXPECT_FALSE(fs::exists(dir_ / "out"));

    const auto empty = write_config("empty.cfg", "format = 1\nexperiment = threshold-sweep\nH = 0.4\nalpha =\n");
    r = cli("run \"" + empty.string() + "\"");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("empty parameter grid"), std::string::npos);

    EXPECT_EQ(cli("run \"" + (dir_ / "missing.cfg").string() + "\"").exit_code, 2);
    EXPECT_EQ(cli("run").exit_code, 2);
    EXPECT_EQ(cli("frobnicate").exit_code, 2);
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRunsAndThreadCounts) {
    const auto cfg = write_config("iso.cfg", kSmallIsometry);
    const auto a = dir_ / "a", b = dir_ / "b", c = dir_ / "c";
    ASSERT_EQ(cli("--threads 1 run \"" + cfg.string() + "\" --out \"" + a.string() + "\"").exit_code, 0);
    ASSERT_EQ(cli("--threads 1 run \"" + cfg.string() + "\" --out \"" + b.string() + "\"").exit_code, 0);
    ASSERT_EQ(cli("run \"" + cfg.string() + "\" --threads 3 --out \"" + c.string() + "\"").exit_code, 0);
    const auto first = slurp(a / "isometry.csv");
    EXPECT_FALSE(first.empty());
    EXPECT_EQ(first, slurp(b / "isometry.csv"));
    EXPECT_EQ(first, slurp(c / "isometry.csv"));
}

TEST_F(CliTest, ListExperimentsIsStable) {
    const auto a = cli("list-experiments"), b = cli("list-experiments");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, list_experiments_text());
    for (const auto& spec : experiment_specs()) EXPECT_NE(a.out.find(spec.kind + "\n"), std::string::npos);
}

TEST_F(CliTest, HelpDocumentsEveryColumn) {
    const auto r = cli("--help");
    EXPECT_EQ(r.exit_code, 0);
    for (const auto& spec : experiment_specs()) {
        for (const auto& col : spec.columns) EXPECT_NE(r.out.find("  " + col.name + ": "), std::string::npos) << col.name;
        for (const auto& col : spec.extra_columns) EXPECT_NE(r.out.find("  " + col.name + ": "), std::string::npos) << col.name;
    }
}
