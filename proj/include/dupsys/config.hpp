#ifndef DUPSYS_CONFIG_HPP
#define DUPSYS_CONFIG_HPP

#include "dupsys/errors.hpp"
#include "dupsys/mutation_model.hpp"
#include "dupsys/strings.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dupsys {

// Invalid configuration; the message names the offending key.
class ConfigError : public InvalidParameter {
  public:
    using InvalidParameter::InvalidParameter;
};

// `key = value` lines; `#` starts a comment. Keys are unique.
struct RawConfig {
    std::string source;
    std::map<std::string, std::string> values;
    std::map<std::string, int> lines;

    bool has(const std::string &key) const { return values.count(key) != 0; }
    // "config.cfg:3: q: " prefix for diagnostics.
    std::string where(const std::string &key) const;
};

RawConfig parse_config_text(std::string_view text, std::string source = "<config>");
RawConfig read_config_file(const std::filesystem::path &path);

// "[a, b, c]" -> {"a", "b", "c"}; a bare value is a one-element list.
std::vector<std::string> split_list(std::string_view value);

struct ExperimentConfig {
    Alphabet alphabet = Alphabet::binary();
    ModelKind kind = ModelKind::tds;
    std::vector<Rational> q;
    std::optional<std::string> s0;
    int k = 2;
    std::uint64_t steps = 0;
    std::vector<std::uint64_t> seeds = {1};
    std::uint64_t record_every = 1;
    std::vector<int> record_lengths; // empty means {k}
    std::optional<int> k_max;
    int curve_resolution = 0;
    std::vector<int> curve_ks = {2, 3};
    int surface_resolution = 0;
    int surface_k = 3;
    std::optional<std::filesystem::path> output;
    std::optional<std::filesystem::path> corpus;

    MutationModel model() const;
    CircularString initial() const;
};

// Every key the experiment format understands.
const std::vector<std::string> &experiment_keys();

// Parses and validates. Throws ConfigError naming the key on any problem.
ExperimentConfig build_config(const RawConfig &raw);
ExperimentConfig load_config(const std::filesystem::path &path);

// Checks that need s0 (|s0| >= max(k, M), symbols in the alphabet).
void require_initial_string(const ExperimentConfig &config);

} // namespace dupsys

#endif
