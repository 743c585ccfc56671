#include "dupsys/corpus.hpp"
#include "dupsys/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace dupsys {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("dupsys_test_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

TEST(Io, FormatDoubleRoundTrips) {
    for (double v : {0.1, 1.0 / 3, 5.0 / 14, 1e-300, 0.0}) EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Io, TrajectoryCsvRoundTrip) {
    TrajectoryRecord r = simulate(CircularString(Alphabet::binary(), "0100010"),
                                  MutationModel::tds({Rational(1, 4), Rational(3, 4)}), 200, 2, 9, {});
    std::vector<TrajectoryRow> rows = trajectory_rows(r, {1, 2});
    std::stringstream csv;
    write_trajectory_csv(csv, rows);
    EXPECT_EQ(csv.str().substr(0, 32), "seed,step,length,kmer,frequency\n");
    EXPECT_EQ(read_trajectory_csv(csv), rows);
}

TEST(Io, MarginalRowsSumToOne) {
    TrajectoryRecord r = simulate(CircularString(Alphabet::dna(), "AGCGTATGCG"),
                                  MutationModel::id({0, 0, Rational(1)}), 50, 3, 2, {});
    double total = 0.0;
    for (const auto &row : trajectory_rows(r, {1}))
        if (row.step == 50) total += row.frequency;
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Io, Sha256KnownVector) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Io, MissingFileIsIoError) { EXPECT_THROW(read_text_file("/nonexistent/dupsys/file"), IoError); }

TEST(Corpus, ShippedCorpusIsIntact) {
    CorpusCheck check = check_corpus(default_corpus_dir());
    EXPECT_TRUE(check.intact);
    EXPECT_EQ(check.digest.size(), 64u);
    Corpus corpus = load_corpus(default_corpus_dir());
    EXPECT_FALSE(corpus.oracle_strings.empty());
    EXPECT_FALSE(corpus.cases.empty());
}

TEST(Corpus, DetectsModifiedMissingAndExtraFiles) {
    fs::path dir = scratch("corpus");
    fs::copy(default_corpus_dir(), dir, fs::copy_options::recursive);
    ASSERT_TRUE(check_corpus(dir).intact);

    { std::ofstream(dir / "oracle_strings.txt", std::ios::app) << "0101\n"; }
    CorpusCheck modified = check_corpus(dir);
    EXPECT_FALSE(modified.intact);
    EXPECT_THROW(load_corpus(dir), ConfigError);

    fs::copy(default_corpus_dir() / "oracle_strings.txt", dir / "oracle_strings.txt",
             fs::copy_options::overwrite_existing);
    EXPECT_TRUE(check_corpus(dir).intact);

    { std::ofstream(dir / "cases" / "extra.cfg") << "k = 2\n"; }
    EXPECT_FALSE(check_corpus(dir).intact);
    fs::remove(dir / "cases" / "extra.cfg");

    fs::remove(dir / "suite.cfg");
    EXPECT_FALSE(check_corpus(dir).intact);
    fs::remove_all(dir);
}

TEST(Corpus, ManifestMatchesShippedFile) {
    EXPECT_EQ(build_manifest(default_corpus_dir()), read_text_file(default_corpus_dir() / "MANIFEST.sha256"));
}

} // namespace
} // namespace dupsys
