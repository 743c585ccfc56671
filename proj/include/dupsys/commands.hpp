#ifndef DUPSYS_COMMANDS_HPP
#define DUPSYS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace dupsys {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitSuiteFailure = 2, kExitIo = 3 };

struct CommandOptions {
    std::optional<std::filesystem::path> config;
    std::optional<std::filesystem::path> out;
    std::optional<std::uint64_t> seeds;
    bool quiet = false;
    bool self_test = false;
};

// Each command reports on `out`/`err` and returns an ExitCode; exceptions
// never escape.
int cmd_simulate(const CommandOptions &options, std::ostream &out, std::ostream &err);
int cmd_analyze(const CommandOptions &options, std::ostream &out, std::ostream &err);
int cmd_entropy(const CommandOptions &options, std::ostream &out, std::ostream &err);
int cmd_verify(const CommandOptions &options, std::ostream &out, std::ostream &err);

} // namespace dupsys

#endif
