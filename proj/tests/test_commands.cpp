#include "dupsys/commands.hpp"
#include "dupsys/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace dupsys {
namespace {

namespace fs = std::filesystem;

class Commands : public ::testing::Test {
  protected:
    void SetUp() override {
        root_ = fs::temp_directory_path() /
                ("dupsys_cmd_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(root_);
        fs::create_directories(root_);
    }
    void TearDown() override { fs::remove_all(root_); }

    CommandOptions with_config(const std::string &text) {
        write_text_file(root_ / "run.cfg", text);
        CommandOptions o;
        o.config = root_ / "run.cfg";
        o.out = root_ / "out";
        o.quiet = true;
        return o;
    }

    fs::path root_;
    std::ostringstream out_, err_;
};

const char *kBinary = "alphabet = [0, 1]\nmodel = TDS\nq = [1/4, 3/4]\ns0 = 0100010\nk = 2\nsteps = 500\n"
                      "record_every = 50\n";

TEST_F(Commands, SimulateWritesOneCsvPerSeed) {
    CommandOptions o = with_config(kBinary);
    o.seeds = 3;
    ASSERT_EQ(cmd_simulate(o, out_, err_), kExitOk) << err_.str();
    for (int seed = 1; seed <= 3; ++seed)
        EXPECT_TRUE(fs::exists(root_ / "out" / ("trajectory_seed" + std::to_string(seed) + ".csv")));
}

TEST_F(Commands, AnalyzeWritesExactLimit) {
    ASSERT_EQ(cmd_analyze(with_config(kBinary), out_, err_), kExitOk) << err_.str();
    std::string json = read_text_file(root_ / "out" / "analysis.json");
    EXPECT_NE(json.find("5/14"), std::string::npos);
}

TEST_F(Commands, AnalyzeRejectsKBelowM) {
    EXPECT_EQ(cmd_analyze(with_config("alphabet = [0, 1]\nq = [0, 0, 1]\nk = 2\n"), out_, err_), kExitValidation);
    EXPECT_NE(err_.str().find("k >= M"), std::string::npos) << err_.str();
}

TEST_F(Commands, EntropyWritesChainCsv) {
    ASSERT_EQ(cmd_entropy(with_config("alphabet = [0, 1]\nq = [1/4, 3/4]\nk_max = 3\n"), out_, err_), kExitOk)
        << err_.str();
    std::string csv = read_text_file(root_ / "out" / "entropy_chain.csv");
    EXPECT_EQ(csv.substr(0, 14), "k,nullity,cap\n");
}

TEST_F(Commands, ValidationErrorsExitOne) {
    EXPECT_EQ(cmd_simulate(with_config("q = [1/2, 1/4]\ns0 = 0101\nsteps = 5\n"), out_, err_), kExitValidation);
    EXPECT_EQ(cmd_simulate(with_config("bogus = 1\n"), out_, err_), kExitValidation);
}

TEST_F(Commands, MissingConfigExitsThree) {
    CommandOptions o;
    o.config = root_ / "absent.cfg";
    o.quiet = true;
    EXPECT_EQ(cmd_simulate(o, out_, err_), kExitIo);
}

TEST_F(Commands, UnwritableOutputExitsThree) {
    CommandOptions o = with_config(kBinary);
    write_text_file(root_ / "file", "x");
    o.out = root_ / "file" / "sub";
    EXPECT_EQ(cmd_simulate(o, out_, err_), kExitIo);
}

TEST_F(Commands, VerifyRefusesTamperedCorpus) {
    fs::path corpus = root_ / "corpus";
    fs::copy(DUPSYS_DEFAULT_CORPUS, corpus, fs::copy_options::recursive);
    { std::ofstream(corpus / "suite.cfg", std::ios::app) << "# edited\n"; }
    EXPECT_EQ(cmd_verify(with_config("corpus = " + corpus.string() + "\n"), out_, err_), kExitValidation);
}

TEST_F(Commands, SelfTestCatchesInjectedFault) {
    CommandOptions o = with_config("");
    o.self_test = true;
    EXPECT_EQ(cmd_verify(o, out_, err_), kExitSuiteFailure);
}

} // namespace
} // namespace dupsys
