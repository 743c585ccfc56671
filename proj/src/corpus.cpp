#include "dupsys/corpus.hpp"

#include "dupsys/entropy.hpp"
#include "dupsys/io.hpp"
#include "dupsys/mutation.hpp"
#include "dupsys/tds_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#ifndef DUPSYS_DEFAULT_CORPUS
#define DUPSYS_DEFAULT_CORPUS "corpus/v1"
#endif

namespace dupsys {

namespace fs = std::filesystem;

namespace {

constexpr const char *kManifest = "MANIFEST.sha256";

std::vector<std::string> corpus_files(const fs::path &dir) {
    std::vector<std::string> files;
    for (const auto &entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string rel = fs::relative(entry.path(), dir).generic_string();
        if (rel != kManifest) files.push_back(rel);
    }
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace

fs::path default_corpus_dir() { return DUPSYS_DEFAULT_CORPUS; }

std::string build_manifest(const fs::path &dir) {
    std::string out;
    for (const auto &rel : corpus_files(dir)) out += sha256_hex(read_text_file(dir / rel)) + "  " + rel + "\n";
    return out;
}

CorpusCheck check_corpus(const fs::path &dir) {
    CorpusCheck check;
    if (!fs::is_directory(dir)) throw IoError("corpus directory " + dir.string() + " does not exist");
    std::string manifest = read_text_file(dir / kManifest);
    check.digest = sha256_hex(manifest);
    std::map<std::string, std::string> listed;
    std::istringstream in(manifest);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto sep = line.find("  ");
        if (sep != 64) {
            check.problems.push_back("malformed manifest line: " + line);
            continue;
        }
        listed[line.substr(sep + 2)] = line.substr(0, 64);
    }
    std::set<std::string> present;
    for (const auto &rel : corpus_files(dir)) {
        present.insert(rel);
        auto it = listed.find(rel);
        if (it == listed.end())
            check.problems.push_back("unlisted file " + rel);
        else if (sha256_hex(read_text_file(dir / rel)) != it->second)
            check.problems.push_back("content of " + rel + " does not match its recorded hash");
    }
    for (const auto &[rel, hash] : listed)
        if (!present.count(rel)) check.problems.push_back("missing file " + rel);
    check.intact = check.problems.empty();
    return check;
}

ReproCase load_repro_case(const fs::path &dir, const std::string &name) {
    fs::path cfg = dir / "cases" / (name + ".cfg");
    fs::path expected = dir / "cases" / (name + ".expected");
    if (!fs::exists(cfg)) throw ConfigError("repro case " + name + ": missing config " + cfg.string());
    if (!fs::exists(expected)) throw ConfigError("repro case " + name + ": missing expectations " + expected.string());
    ReproCase c;
    c.name = name;
    c.config = load_config(cfg);
    RawConfig raw = read_config_file(expected);
    for (const char *key : {"check", "expected", "tolerance", "provenance", "anchor"})
        if (!raw.has(key)) throw ConfigError(raw.where(key) + "required");
    c.check = raw.values.at("check");
    for (const auto &item : split_list(raw.values.at("expected"))) c.expected.push_back(parse_rational(item));
    c.tolerance = to_double(parse_rational(raw.values.at("tolerance")));
    c.provenance = raw.values.at("provenance");
    c.anchor = raw.values.at("anchor");
    return c;
}

namespace {

ReproResult compare(const std::string &name, const KmerIndex &index, const std::vector<double> &measured,
                    const std::vector<Rational> &expected, double tolerance) {
    ReproResult result{name, true, {}, {}};
    if (measured.size() != expected.size()) {
        result.passed = false;
        result.note = "expected " + std::to_string(expected.size()) + " values, measured " +
                      std::to_string(measured.size());
        return result;
    }
    for (std::size_t i = 0; i < measured.size(); ++i) {
        double e = to_double(expected[i]);
        double d = std::abs(measured[i] - e);
        result.rows.push_back({index.label(i), measured[i], e, d});
        if (d > tolerance) result.passed = false;
    }
    return result;
}

} // namespace

ReproResult run_repro(const ReproCase &c) {
    const ExperimentConfig &cfg = c.config;
    KmerIndex index(cfg.alphabet, cfg.k);
    if (c.check == "stationary") {
        LimitSet limit = null_space_limit(build_rate_matrix(cfg.model(), index));
        if (!limit.stationary)
            return {c.name, false, {}, "limit is not unique (nullity " + std::to_string(limit.nullity) + ")"};
        std::vector<double> measured;
        for (const auto &v : *limit.stationary) measured.push_back(to_double(v));
        ReproResult result = compare(c.name, index, measured, c.expected, c.tolerance);
        if (c.tolerance == 0.0) {
            // Exact comparison of the rationals themselves.
            result.passed = *limit.stationary == c.expected;
            result.note = result.passed ? "exact rational match" : "rational mismatch";
        }
        return result;
    }
    if (c.check == "mean-final-frequency") {
        require_initial_string(cfg);
        CircularString s0 = cfg.initial();
        MutationModel model = cfg.model();
        std::vector<double> mean(index.size(), 0.0);
        SimulationOptions options;
        options.record_every = std::max<std::uint64_t>(cfg.steps, 1);
        for (std::uint64_t seed : cfg.seeds) {
            TrajectoryRecord r = simulate(s0, model, cfg.steps, cfg.k, seed, options);
            for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += r.frequencies.back()[i];
        }
        for (auto &m : mean) m /= static_cast<double>(cfg.seeds.size());
        ReproResult result = compare(c.name, index, mean, c.expected, c.tolerance);
        result.note = "mean over " + std::to_string(cfg.seeds.size()) + " seeds after " + std::to_string(cfg.steps) +
                      " steps";
        return result;
    }
    if (c.check == "cap-uniform") {
        std::vector<Rational> uniform(index.size(), Rational(1, static_cast<unsigned long>(index.size())));
        double cap = cap_singleton(SemiconstrainedMeasure(index, uniform));
        ReproResult result{c.name, true, {}, {}};
        double e = c.expected.empty() ? 1.0 : to_double(c.expected.front());
        result.rows.push_back({"cap", cap, e, std::abs(cap - e)});
        result.passed = std::abs(cap - e) <= c.tolerance;
        return result;
    }
    throw ConfigError("repro case " + c.name + ": unknown check `" + c.check + "`");
}

Corpus load_corpus(const fs::path &dir) {
    CorpusCheck check = check_corpus(dir);
    if (!check.intact) {
        std::string message = "corpus " + dir.string() + " does not match its manifest; refusing to verify:";
        for (const auto &p : check.problems) message += "\n  " + p;
        throw ConfigError(message);
    }
    Corpus corpus;
    corpus.dir = dir;
    corpus.digest = check.digest;
    corpus.suite = read_config_file(dir / "suite.cfg");

    std::istringstream strings(read_text_file(dir / "oracle_strings.txt"));
    std::string line;
    while (std::getline(strings, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string alphabet, text;
        fields >> alphabet >> text;
        corpus.oracle_strings.emplace_back(Alphabet(alphabet), text);
    }
    if (!corpus.suite.has("cases")) throw ConfigError(corpus.suite.where("cases") + "required");
    for (const auto &name : split_list(corpus.suite.values.at("cases")))
        corpus.cases.push_back(load_repro_case(dir, name));
    return corpus;
}

} // namespace dupsys
