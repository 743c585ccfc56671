#ifndef DUPSYS_VERIFY_HPP
#define DUPSYS_VERIFY_HPP

#include "dupsys/corpus.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dupsys {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string detail; // first failure, or a summary
};

struct VerifyOptions {
    // Run the oracle suite against deliberately broken formulas; the suite
    // is expected to fail.
    bool self_test = false;
    // Called after each suite, for progress output.
    std::function<void(const SuiteResult &)> on_suite;
};

std::vector<SuiteResult> run_verification(const Corpus &corpus, const VerifyOptions &options = {});

} // namespace dupsys

#endif
