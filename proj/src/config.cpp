#include "dupsys/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace dupsys {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool looks_decimal(const std::string &s) {
    return s.find_first_of(".eE") != std::string::npos;
}

} // namespace

std::string RawConfig::where(const std::string &key) const {
    auto it = lines.find(key);
    std::string prefix = source;
    if (it != lines.end()) prefix += ":" + std::to_string(it->second);
    return prefix + ": " + key + ": ";
}

RawConfig parse_config_text(std::string_view text, std::string source) {
    RawConfig raw;
    raw.source = std::move(source);
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string content = trim(line);
        if (content.empty()) continue;
        auto eq = content.find('=');
        if (eq == std::string::npos)
            throw ConfigError(raw.source + ":" + std::to_string(number) + ": expected `key = value`, got `" +
                              content + "`");
        std::string key = trim(std::string_view(content).substr(0, eq));
        std::string value = trim(std::string_view(content).substr(eq + 1));
        if (key.empty()) throw ConfigError(raw.source + ":" + std::to_string(number) + ": empty key");
        if (raw.values.count(key))
            throw ConfigError(raw.source + ":" + std::to_string(number) + ": duplicate key `" + key + "`");
        raw.values[key] = value;
        raw.lines[key] = number;
    }
    return raw;
}

RawConfig read_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str(), path.string());
}

std::vector<std::string> split_list(std::string_view value) {
    std::string v = trim(value);
    if (v.size() >= 2 && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
    std::vector<std::string> items;
    if (trim(v).empty()) return items;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) items.push_back(trim(item));
    return items;
}

const std::vector<std::string> &experiment_keys() {
    static const std::vector<std::string> keys = {
        "alphabet",   "model",       "q",          "s0",      "k",          "steps",
        "seed",       "seeds",       "record_every", "record_lengths", "k_max", "curve_resolution",
        "curve_k",    "surface_resolution", "surface_k", "output", "corpus"};
    return keys;
}

namespace {

class Reader {
  public:
    explicit Reader(const RawConfig &raw) : raw_(raw) {}

    [[noreturn]] void fail(const std::string &key, const std::string &message) const {
        throw ConfigError(raw_.where(key) + message);
    }

    std::uint64_t uint(const std::string &key, const std::string &text) const {
        Rational v;
        try {
            v = parse_rational(text);
        } catch (const InvalidParameter &) {
            fail(key, "`" + text + "` is not a number");
        }
        if (v < 0 || v.get_den() != 1) fail(key, "`" + text + "` is not a nonnegative integer");
        if (v.get_num() > Rational(static_cast<unsigned long>(1) << 62)) fail(key, "value too large");
        return v.get_num().get_ui();
    }

    int positive_int(const std::string &key, const std::string &text) const {
        std::uint64_t v = uint(key, text);
        if (v < 1 || v > 1000000) fail(key, "must be a positive integer, got " + text);
        return static_cast<int>(v);
    }

    Rational probability(const std::string &key, const std::string &text, bool &decimal) const {
        try {
            decimal = decimal || looks_decimal(text);
            return parse_rational(text);
        } catch (const InvalidParameter &) {
            fail(key, "`" + text + "` is not a probability (use a decimal or a fraction like 3/4)");
        }
    }

  private:
    const RawConfig &raw_;
};

} // namespace

ExperimentConfig build_config(const RawConfig &raw) {
    Reader r(raw);
    const auto &known = experiment_keys();
    for (const auto &[key, value] : raw.values)
        if (std::find(known.begin(), known.end(), key) == known.end())
            r.fail(key, "unknown key (known keys: alphabet, model, q, s0, k, steps, seed, seeds, record_every, "
                        "record_lengths, k_max, curve_resolution, curve_k, surface_resolution, surface_k, output, "
                        "corpus)");

    ExperimentConfig config;
    if (raw.has("alphabet")) {
        std::vector<std::string> items = split_list(raw.values.at("alphabet"));
        std::string symbols;
        if (items.size() == 1) {
            symbols = items[0];
        } else {
            for (const auto &item : items) {
                if (item.size() != 1) r.fail("alphabet", "symbols must be single characters, got `" + item + "`");
                symbols += item;
            }
        }
        try {
            config.alphabet = Alphabet(symbols);
        } catch (const InvalidParameter &e) {
            r.fail("alphabet", e.what());
        }
    }
    if (raw.has("model")) {
        std::string m = lower(raw.values.at("model"));
        if (m == "tds")
            config.kind = ModelKind::tds;
        else if (m == "id")
            config.kind = ModelKind::id;
        else
            r.fail("model", "must be TDS or ID, got `" + raw.values.at("model") + "`");
    }
    if (raw.has("q")) {
        std::vector<std::string> items = split_list(raw.values.at("q"));
        if (items.empty()) r.fail("q", "empty probability list");
        bool decimal = false;
        bool pairs = items[0].find(':') != std::string::npos;
        std::vector<Rational> q;
        std::set<int> seen;
        for (const auto &item : items) {
            auto colon = item.find(':');
            if ((colon != std::string::npos) != pairs)
                r.fail("q", "mix of positional and `length: probability` entries");
            if (pairs) {
                int length = static_cast<int>(r.uint("q", trim(std::string_view(item).substr(0, colon))));
                if (length > 64) r.fail("q", "duplication length " + std::to_string(length) + " is too large");
                if (!seen.insert(length).second) r.fail("q", "length " + std::to_string(length) + " given twice");
                if (q.size() <= static_cast<std::size_t>(length)) q.resize(static_cast<std::size_t>(length) + 1, 0);
                q[static_cast<std::size_t>(length)] = r.probability("q", trim(std::string_view(item).substr(colon + 1)), decimal);
            } else {
                q.push_back(r.probability("q", item, decimal));
            }
        }
        Rational total = 0;
        for (const auto &p : q) {
            if (p < 0) r.fail("q", "probabilities must be nonnegative");
            total += p;
        }
        if (total != 1) {
            Rational gap = total - 1;
            if (decimal && abs(gap) <= Rational(1, 1000000000000)) {
                for (auto &p : q) p /= total;
            } else {
                r.fail("q", "probabilities sum to " + to_fraction_string(total) + " (" + std::to_string(total.get_d()) +
                                "), not 1");
            }
        }
        if (config.kind == ModelKind::tds && !q.empty() && q[0] == 1)
            r.fail("q", "q_0 = 1 is pure substitution; TDS needs q_0 < 1");
        if (config.kind == ModelKind::id && !q.empty() && q[0] != 0)
            r.fail("q", "ID systems have no substitutions; q_0 must be 0");
        config.q = std::move(q);
    }
    if (raw.has("s0")) {
        std::string s0 = raw.values.at("s0");
        for (char c : s0)
            if (!config.alphabet.contains(c))
                r.fail("s0", std::string("symbol `") + c + "` is not in the alphabet \"" + config.alphabet.symbols() +
                                 "\"");
        if (s0.empty()) r.fail("s0", "initial string is empty");
        config.s0 = s0;
    }
    if (raw.has("k")) config.k = r.positive_int("k", raw.values.at("k"));
    if (raw.has("steps")) config.steps = r.uint("steps", raw.values.at("steps"));
    std::uint64_t base = raw.has("seed") ? r.uint("seed", raw.values.at("seed")) : 1;
    config.seeds = {base};
    if (raw.has("seeds")) {
        const std::string &v = raw.values.at("seeds");
        if (!v.empty() && v.front() == '[') {
            config.seeds.clear();
            for (const auto &item : split_list(v)) config.seeds.push_back(r.uint("seeds", item));
            if (config.seeds.empty()) r.fail("seeds", "empty seed list");
            if (raw.has("seed")) r.fail("seeds", "give either `seed` with a count or an explicit seed list");
        } else {
            std::uint64_t count = r.uint("seeds", v);
            if (count < 1 || count > 100000) r.fail("seeds", "seed count must be in [1, 100000]");
            config.seeds.clear();
            for (std::uint64_t i = 0; i < count; ++i) config.seeds.push_back(base + i);
        }
    }
    if (raw.has("record_every")) {
        config.record_every = r.uint("record_every", raw.values.at("record_every"));
        if (config.record_every < 1) r.fail("record_every", "must be at least 1");
    }
    if (raw.has("record_lengths")) {
        for (const auto &item : split_list(raw.values.at("record_lengths"))) {
            int len = r.positive_int("record_lengths", item);
            if (len > config.k) r.fail("record_lengths", "word length " + item + " exceeds k = " + std::to_string(config.k));
            config.record_lengths.push_back(len);
        }
    }
    if (raw.has("k_max")) config.k_max = r.positive_int("k_max", raw.values.at("k_max"));
    if (raw.has("curve_resolution")) config.curve_resolution = r.positive_int("curve_resolution", raw.values.at("curve_resolution"));
    if (raw.has("curve_k")) {
        config.curve_ks.clear();
        for (const auto &item : split_list(raw.values.at("curve_k"))) config.curve_ks.push_back(r.positive_int("curve_k", item));
        if (config.curve_ks.empty()) r.fail("curve_k", "empty list");
    }
    if (raw.has("surface_resolution"))
        config.surface_resolution = r.positive_int("surface_resolution", raw.values.at("surface_resolution"));
    if (raw.has("surface_k")) config.surface_k = r.positive_int("surface_k", raw.values.at("surface_k"));
    if (raw.has("output")) config.output = raw.values.at("output");
    if (raw.has("corpus")) config.corpus = raw.values.at("corpus");

    // Relative paths are resolved against the config file's directory.
    std::filesystem::path base_dir = std::filesystem::path(raw.source).parent_path();
    if (raw.source != "<config>") {
        if (config.output && config.output->is_relative()) config.output = base_dir / *config.output;
        if (config.corpus && config.corpus->is_relative()) config.corpus = base_dir / *config.corpus;
    }

    if (config.s0) {
        if (static_cast<std::size_t>(config.k) > config.s0->size())
            r.fail("k", "k = " + std::to_string(config.k) + " exceeds |s0| = " + std::to_string(config.s0->size()));
        if (!config.q.empty() && config.s0->size() < config.q.size())
            r.fail("s0", "|s0| = " + std::to_string(config.s0->size()) + " is shorter than the longest mutation (M = " +
                             std::to_string(config.q.size()) + ")");
    }
    return config;
}

ExperimentConfig load_config(const std::filesystem::path &path) { return build_config(read_config_file(path)); }

MutationModel ExperimentConfig::model() const {
    if (q.empty()) throw ConfigError("q: the mutation length distribution is required");
    try {
        return MutationModel(kind, q);
    } catch (const InvalidParameter &e) {
        throw ConfigError(std::string("q: ") + e.what());
    }
}

CircularString ExperimentConfig::initial() const {
    if (!s0) throw ConfigError("s0: an initial string is required for this command");
    return CircularString(alphabet, *s0);
}

void require_initial_string(const ExperimentConfig &config) {
    CircularString s = config.initial();
    MutationModel m = config.model();
    if (s.size() < static_cast<std::size_t>(std::max(config.k, m.max_length_bound())))
        throw ConfigError("s0: |s0| must be at least max(k, M)");
}

} // namespace dupsys
