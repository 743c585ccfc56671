#include "dupsys/commands.hpp"

#include "dupsys/config.hpp"
#include "dupsys/corpus.hpp"
#include "dupsys/entropy.hpp"
#include "dupsys/id_analysis.hpp"
#include "dupsys/io.hpp"
#include "dupsys/mutation.hpp"
#include "dupsys/tds_analysis.hpp"
#include "dupsys/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace dupsys {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

ExperimentConfig load(const CommandOptions &options) {
    if (!options.config) return build_config(parse_config_text(""));
    return load_config(*options.config);
}

fs::path output_dir(const CommandOptions &options, const ExperimentConfig &config) {
    if (options.out) return *options.out;
    if (config.output) return *config.output;
    return "out";
}

template <typename Body> int guarded(std::ostream &err, Body body) {
    try {
        return body();
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InvalidParameter &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidMeasure &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Unsupported &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitSuiteFailure;
    }
}

Json fraction(const Rational &v) { return Json{{"fraction", to_fraction_string(v)}, {"decimal", to_double(v)}}; }

Json fraction_matrix(const Matrix<Rational> &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

std::string cap_field(const std::optional<double> &cap) { return cap ? format_double(*cap) : "NA"; }

} // namespace

int cmd_simulate(const CommandOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        ExperimentConfig config = load(options);
        require_initial_string(config);
        if (options.seeds) {
            if (*options.seeds < 1) throw ConfigError("--seeds: must be at least 1");
            std::uint64_t base = config.seeds.front();
            config.seeds.clear();
            for (std::uint64_t i = 0; i < *options.seeds; ++i) config.seeds.push_back(base + i);
        }
        CircularString s0 = config.initial();
        MutationModel model = config.model();
        SimulationOptions sim;
        sim.record_every = config.record_every;

        // Trajectories are independent; files are written after the join.
        std::vector<std::optional<TrajectoryRecord>> records(config.seeds.size());
        std::vector<std::exception_ptr> failures(config.seeds.size());
        const std::size_t workers =
            std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), records.size()));
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < records.size(); i += workers) {
                    try {
                        records[i] = simulate(s0, model, config.steps, config.k, config.seeds[i], sim);
                    } catch (...) {
                        failures[i] = std::current_exception();
                    }
                }
            });
        }
        for (auto &t : pool) t.join();
        for (const auto &f : failures)
            if (f) std::rethrow_exception(f);

        fs::path dir = output_dir(options, config);
        for (const auto &record : records) {
            std::ostringstream csv;
            write_trajectory_csv(csv, trajectory_rows(*record, config.record_lengths));
            fs::path file = dir / ("trajectory_seed" + std::to_string(record->seed) + ".csv");
            write_text_file(file, csv.str());
            if (!options.quiet) {
                out << "seed " << record->seed << ": " << config.steps << " steps, final length "
                    << record->lengths.back() << " -> " << file.string() << "\n";
                const auto &x = record->frequencies.back();
                for (std::size_t i = 0; i < x.size() && x.size() <= 64; ++i)
                    out << "  " << record->index.label(i) << " " << format_double(x[i]) << "\n";
            }
        }
        return int(kExitOk);
    });
}

namespace {

Json analyze_tds(const ExperimentConfig &config, const MutationModel &model, std::ostream &out, bool quiet) {
    if (config.k < model.max_length_bound())
        throw ConfigError("k: k = " + std::to_string(config.k) + " is below M = " +
                          std::to_string(model.max_length_bound()) +
                          "; the limit of k-mer frequencies is only characterised for k >= M");
    KmerIndex index(config.alphabet, config.k);
    RateMatrix rate = build_rate_matrix(model, index);
    LimitSet limit = null_space_limit(rate);

    Json doc;
    doc["model"] = model.describe();
    doc["kind"] = "TDS";
    doc["alphabet"] = config.alphabet.symbols();
    doc["k"] = config.k;
    doc["M"] = model.max_length_bound();
    Json q = Json::array();
    for (int l : model.support()) q.push_back(Json{{"length", l}, {"probability", fraction(model.q(l))}});
    doc["q"] = q;
    Json labels = Json::array();
    for (std::size_t i = 0; i < index.size(); ++i) labels.push_back(index.label(i));
    doc["kmers"] = labels;
    doc["rate_matrix"] = fraction_matrix(rate.combined);
    Json components = Json::array();
    for (std::size_t l = 0; l < rate.components.size(); ++l)
        components.push_back(Json{{"length", l}, {"matrix", fraction_matrix(rate.components[l])}});
    doc["components"] = components;
    doc["column_sums_zero"] = column_sums_zero(rate.combined);
    doc["metzler_sign_pattern"] = metzler_sign_pattern(rate.combined);
    doc["nullity"] = limit.nullity;
    Json basis = Json::array();
    for (const auto &v : limit.basis) {
        Json vec = Json::array();
        for (const auto &e : v) vec.push_back(fraction(e));
        basis.push_back(vec);
    }
    doc["null_space_basis"] = basis;
    if (limit.stationary) {
        Json stationary = Json::array();
        for (std::size_t i = 0; i < index.size(); ++i) {
            Json entry = fraction((*limit.stationary)[i]);
            entry["kmer"] = index.label(i);
            stationary.push_back(entry);
        }
        doc["stationary"] = stationary;
    } else {
        doc["stationary"] = nullptr;
        doc["warning"] = "null space has dimension " + std::to_string(limit.nullity) +
                         "; the limit depends on the initial sequence and no single stationary vector is reported";
    }

    if (!quiet) {
        out << model.describe() << ", k = " << config.k << ", nullity " << limit.nullity << "\n";
        if (limit.stationary) {
            for (std::size_t i = 0; i < index.size(); ++i)
                out << "  " << index.label(i) << "  " << std::setw(12) << to_fraction_string((*limit.stationary)[i])
                    << "  " << format_double(to_double((*limit.stationary)[i])) << "\n";
        } else {
            out << "warning: " << doc["warning"].get<std::string>() << "\n";
            for (const auto &v : limit.basis) {
                out << "  basis:";
                for (const auto &e : v) out << " " << to_fraction_string(e);
                out << "\n";
            }
        }
    }
    return doc;
}

Json analyze_id(const ExperimentConfig &config, const MutationModel &model, std::ostream &out, bool quiet) {
    Json doc;
    doc["model"] = model.describe();
    doc["kind"] = "ID";
    doc["alphabet"] = config.alphabet.symbols();
    doc["k"] = config.k;
    Json decay = Json::array();
    for (int len = 2; len <= config.k; ++len)
        decay.push_back(Json{{"word_length", len}, {"c", fraction(decay_constant(Word(static_cast<std::size_t>(len), 0), model))}});
    doc["decay_constants"] = decay;
    if (config.s0) {
        CircularString s0 = config.initial();
        ShortWordVector<Rational> x = word_vector(s0, config.k);
        Json drift = Json::array();
        for (int len = 1; len <= config.k; ++len) {
            const KmerIndex &index = x.index(len);
            for (std::size_t w = 0; w < index.size(); ++w) {
                Json entry = fraction(h_id(index.decode(w), model, x));
                entry["word"] = index.label(w);
                drift.push_back(entry);
            }
        }
        doc["drift_at_s0"] = drift;
        IidDeviationReport dev = iid_deviation(x);
        doc["iid_deviation_at_s0"] = Json{{"max", dev.max}, {"mean", dev.mean}, {"max_by_length", dev.max_by_length}};
        if (!quiet) out << "iid deviation at s0: max " << format_double(dev.max) << "\n";
    }
    if (!quiet) {
        out << model.describe() << ": the limit set is the iid-product manifold\n";
        for (const auto &d : decay)
            out << "  decay constant for |u| = " << d["word_length"] << ": " << d["c"]["fraction"].get<std::string>()
                << "\n";
    }
    return doc;
}

} // namespace

int cmd_analyze(const CommandOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        ExperimentConfig config = load(options);
        MutationModel model = config.model();
        Json doc = model.kind() == ModelKind::tds ? analyze_tds(config, model, out, options.quiet)
                                                  : analyze_id(config, model, out, options.quiet);
        fs::path file = output_dir(options, config) / "analysis.json";
        write_text_file(file, doc.dump(2) + "\n");
        if (!options.quiet) out << "wrote " << file.string() << "\n";
        return int(kExitOk);
    });
}

int cmd_entropy(const CommandOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        ExperimentConfig config = load(options);
        MutationModel model = config.model();
        fs::path dir = output_dir(options, config);

        if (model.kind() == ModelKind::id) {
            Json doc;
            doc["model"] = model.describe();
            doc["notice"] = "the ID limit set only yields the trivial bound cap = 1";
            std::vector<int> support = model.support();
            if (config.alphabet.size() == 2 && support == std::vector<int>{1} && config.s0) {
                auto counts = symbol_counts(config.initial().data(), 2);
                if (counts[0] > 0 && counts[1] > 0) {
                    double h = id_binary_len1_entropy(counts[0], counts[1]);
                    doc["binary_length1_entropy"] = Json{{"t0", counts[0]}, {"t1", counts[1]}, {"bits", h}};
                    if (!options.quiet) out << "binary length-1 entropy: " << format_double(h) << " bits\n";
                }
            }
            if (!options.quiet) out << doc["notice"].get<std::string>() << "\n";
            write_text_file(dir / "entropy_id.json", doc.dump(2) + "\n");
            return int(kExitOk);
        }

        int k_max = config.k_max.value_or(std::max(config.k, model.max_length_bound()));
        EntropyReport report = bound_chain(model, config.alphabet, k_max);
        std::ostringstream chain;
        chain << "k,nullity,cap\n";
        for (const auto &e : report.entries) {
            chain << e.k << ',' << e.nullity << ',' << cap_field(e.cap) << '\n';
            if (!options.quiet)
                out << "k = " << e.k << ": "
                    << (e.cap ? "cap " + format_double(*e.cap)
                              : "bound unavailable (nullity " + std::to_string(e.nullity) + ")")
                    << "\n";
        }
        write_text_file(dir / "entropy_chain.csv", chain.str());
        if (!report.monotone) {
            err << "error: bound chain is not monotone in k\n";
            return int(kExitSuiteFailure);
        }

        if (config.curve_resolution > 0) {
            std::ostringstream csv;
            csv << "alpha,k,cap\n";
            for (const auto &p : substitution_curve(config.curve_resolution, config.curve_ks))
                csv << format_double(to_double(p.alpha)) << ',' << p.k << ',' << cap_field(p.cap) << '\n';
            write_text_file(dir / "entropy_curve.csv", csv.str());
            if (!options.quiet) out << "wrote " << (dir / "entropy_curve.csv").string() << "\n";
        }
        if (config.surface_resolution > 0) {
            std::ostringstream csv;
            csv << "alpha,beta,cap\n";
            for (const auto &p : surface_grid(config.surface_resolution, config.surface_k))
                csv << format_double(to_double(p.alpha)) << ',' << format_double(to_double(p.beta)) << ','
                    << cap_field(p.cap) << '\n';
            write_text_file(dir / "entropy_surface.csv", csv.str());
            if (!options.quiet) out << "wrote " << (dir / "entropy_surface.csv").string() << "\n";
        }
        return int(kExitOk);
    });
}

int cmd_verify(const CommandOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        ExperimentConfig config = load(options);
        fs::path dir = config.corpus.value_or(default_corpus_dir());
        Corpus corpus = load_corpus(dir);
        if (!options.quiet) out << "corpus " << dir.string() << " (manifest sha256 " << corpus.digest << ")\n";
        VerifyOptions verify;
        verify.self_test = options.self_test;
        std::ostringstream report;
        verify.on_suite = [&](const SuiteResult &r) {
            std::ostringstream line;
            line << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
            if (!r.passed) line << " (" << r.failures << " of " << r.checks << " checks failed)";
            report << line.str() << "\n";
            if (!options.quiet || !r.passed) out << line.str() << std::endl;
        };
        std::vector<SuiteResult> results = run_verification(corpus, verify);
        bool all = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.passed; });
        if (options.self_test && !options.quiet)
            out << (all ? "self-test: the injected fault went undetected\n"
                        : "self-test: the oracle suite caught the injected fault\n");
        if (options.out) write_text_file(*options.out / "verify_report.txt", report.str());
        return int(all ? kExitOk : kExitSuiteFailure);
    });
}

} // namespace dupsys
