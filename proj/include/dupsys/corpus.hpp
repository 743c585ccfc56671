#ifndef DUPSYS_CORPUS_HPP
#define DUPSYS_CORPUS_HPP

#include "dupsys/config.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dupsys {

// Integrity of a corpus directory against its MANIFEST.sha256, which lists
// `<sha256>  <relative path>` for every file (the format of `sha256sum`).
struct CorpusCheck {
    bool intact = true;
    std::vector<std::string> problems;
    // SHA-256 of the manifest itself; identifies the corpus version.
    std::string digest;
};

CorpusCheck check_corpus(const std::filesystem::path &dir);

// Manifest text for the current contents of `dir`.
std::string build_manifest(const std::filesystem::path &dir);

struct ReproCase {
    std::string name;
    ExperimentConfig config;
    // stationary | mean-final-frequency | cap-uniform
    std::string check;
    std::vector<Rational> expected;
    double tolerance = 0.0;
    std::string provenance;
    std::string anchor;
};

struct ReproRow {
    std::string label;
    double measured = 0.0;
    double expected = 0.0;
    double difference = 0.0;
};

struct ReproResult {
    std::string name;
    bool passed = false;
    std::vector<ReproRow> rows;
    std::string note;
};

// Reads cases/<name>.cfg and cases/<name>.expected.
ReproCase load_repro_case(const std::filesystem::path &dir, const std::string &name);
ReproResult run_repro(const ReproCase &c);

struct Corpus {
    std::filesystem::path dir;
    std::string digest;
    std::vector<CircularString> oracle_strings;
    RawConfig suite;
    std::vector<ReproCase> cases;
};

// Refuses (ConfigError) a corpus whose files do not match the manifest.
Corpus load_corpus(const std::filesystem::path &dir);

std::filesystem::path default_corpus_dir();

} // namespace dupsys

#endif
