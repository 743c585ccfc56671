#include "dupsys/verify.hpp"

#include "dupsys/entropy.hpp"
#include "dupsys/id_analysis.hpp"
#include "dupsys/oracle.hpp"
#include "dupsys/tds_analysis.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace dupsys {

namespace {

std::vector<Rational> rationals(const RawConfig &suite, const std::string &key) {
    if (!suite.has(key)) throw ConfigError(suite.where(key) + "required");
    std::vector<Rational> out;
    for (const auto &item : split_list(suite.values.at(key))) out.push_back(parse_rational(item));
    return out;
}

int integer(const RawConfig &suite, const std::string &key) {
    if (!suite.has(key)) throw ConfigError(suite.where(key) + "required");
    return std::stoi(suite.values.at(key));
}

void record(SuiteResult &suite, bool ok, const std::string &what) {
    ++suite.checks;
    if (ok) return;
    if (suite.failures == 0) suite.detail = what;
    ++suite.failures;
    suite.passed = false;
}

class FormCache {
  public:
    const std::vector<LinearForm> &get(const KmerIndex &index, int length, const DeltaOptions &options) {
        auto key = std::make_tuple(index.alphabet().symbols(), index.k(), length);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, delta_forms(length, index, options)).first;
        return it->second;
    }

  private:
    std::map<std::tuple<std::string, int, int>, std::vector<LinearForm>> cache_;
};

SuiteResult tds_oracle_suite(const Corpus &corpus, bool substitution, const DeltaOptions &delta, std::string name) {
    SuiteResult suite{std::move(name)};
    MutationModel model = MutationModel::tds(rationals(corpus.suite, "tds_q"));
    const int k_cap = integer(corpus.suite, "tds_k_cap");
    FormCache cache;
    for (const auto &s : corpus.oracle_strings) {
        for (int l = substitution ? 0 : 1; l <= (substitution ? 0 : 3); ++l) {
            const int k_lo = substitution ? 1 : l + 1;
            const int k_hi = substitution ? k_cap : std::min(2 * l + 2, k_cap);
            for (int k = k_lo; k <= k_hi; ++k) {
                if (s.size() < length_floor(k, model.max_length_bound())) continue;
                KmerIndex index(s.alphabet(), k);
                ComparisonOptions options{delta, &cache.get(index, l, delta)};
                ComparisonReport r = compare_to_formula(s, model, l, k, options);
                record(suite, r.agrees(),
                       s.to_string() + " l=" + std::to_string(l) + " k=" + std::to_string(k) + ": " +
                           std::to_string(r.discrepancies.size()) + " words disagree");
            }
        }
    }
    return suite;
}

SuiteResult id_oracle_suite(const Corpus &corpus) {
    SuiteResult suite{"oracle-id"};
    MutationModel model = MutationModel::id(rationals(corpus.suite, "id_q"));
    const int k_max = integer(corpus.suite, "id_k_max");
    for (const auto &s : corpus.oracle_strings)
        for (int l = 1; l <= 3; ++l)
            for (int k = 1; k <= k_max; ++k) {
                if (s.size() < length_floor(k, model.max_length_bound())) continue;
                ComparisonReport r = compare_to_formula(s, model, l, k);
                record(suite, r.agrees(),
                       s.to_string() + " l=" + std::to_string(l) + " |u|=" + std::to_string(k) + ": " +
                           std::to_string(r.discrepancies.size()) + " words disagree");
            }
    return suite;
}

SuiteResult matrix_suite(const Corpus &corpus) {
    SuiteResult suite{"matrix-structure"};
    std::vector<MutationModel> models = {MutationModel::tds(rationals(corpus.suite, "tds_q"))};
    for (const auto &a : rationals(corpus.suite, "alpha_grid")) models.push_back(MutationModel::tds({a, 1 - a}));
    for (const char *symbols : {"01", "012", "ACGT"}) {
        for (const auto &model : models) {
            for (int k = model.max_length_bound(); k <= 4; ++k) {
                RateMatrix rate = build_rate_matrix(model, KmerIndex(Alphabet(symbols), k));
                bool ok = column_sums_zero(rate.combined) && metzler_sign_pattern(rate.combined);
                for (const auto &c : rate.components) ok = ok && column_sums_zero(c);
                record(suite, ok, model.describe() + " over " + symbols + " k=" + std::to_string(k));
            }
        }
    }
    return suite;
}

SuiteResult martingale_suite(const Corpus &corpus) {
    SuiteResult suite{"martingale"};
    std::vector<MutationModel> models = {MutationModel::tds(rationals(corpus.suite, "martingale_tds_q")),
                                         MutationModel::id(rationals(corpus.suite, "martingale_id_q"))};
    for (const auto &s : corpus.oracle_strings) {
        std::vector<Rational> x = kmer_frequencies(s, 1).values();
        for (const auto &model : models)
            record(suite, martingale_one_step_check(s, model) == x, s.to_string() + " under " + model.describe());
    }
    return suite;
}

SuiteResult stationary_suite(const Corpus &corpus) {
    SuiteResult suite{"stationary-shift-invariance"};
    for (const char *symbols : {"01", "012"}) {
        for (const auto &a : rationals(corpus.suite, "alpha_grid")) {
            MutationModel model = MutationModel::tds({a, (1 - a) / 2, (1 - a) / 2});
            for (int k = 3; k <= 4; ++k) {
                if (std::string(symbols).size() == 3 && k == 4) continue;
                KmerIndex index(Alphabet(symbols), k);
                RateMatrix rate = build_rate_matrix(model, index);
                LimitSet limit = null_space_limit(rate);
                bool ok = limit.stationary.has_value();
                if (ok) {
                    const auto &xi = *limit.stationary;
                    ok = is_shift_invariant(index, xi);
                    Rational total = 0;
                    for (const auto &v : xi) {
                        ok = ok && v >= 0;
                        total += v;
                    }
                    ok = ok && total == 1;
                    for (const auto &v : rate.combined.multiply(xi)) ok = ok && v == 0;
                }
                record(suite, ok, model.describe() + " over " + symbols + " k=" + std::to_string(k));
            }
        }
    }
    return suite;
}

SuiteResult entropy_suite(const Corpus &corpus) {
    SuiteResult suite{"entropy-monotonicity"};
    const int k_max = integer(corpus.suite, "entropy_k_max");
    for (const auto &a : rationals(corpus.suite, "alpha_grid")) {
        EntropyReport r = bound_chain(MutationModel::tds({a, 1 - a}), Alphabet::binary(), k_max);
        record(suite, r.monotone, "chain not monotone at alpha = " + to_fraction_string(a));
        double closed = binary_entropy(to_double(2 * a / (1 + 3 * a)));
        auto cap2 = r.cap(2);
        record(suite, cap2 && std::abs(*cap2 - closed) <= 1e-12,
               "cap at k = 2 differs from H2(2a/(1+3a)) at alpha = " + to_fraction_string(a));
    }
    return suite;
}

} // namespace

std::vector<SuiteResult> run_verification(const Corpus &corpus, const VerifyOptions &options) {
    std::vector<SuiteResult> results;
    auto add = [&](SuiteResult r) {
        if (r.passed && r.detail.empty()) r.detail = std::to_string(r.checks) + " checks";
        if (options.on_suite) options.on_suite(r);
        results.push_back(std::move(r));
    };
    if (options.self_test) {
        DeltaOptions faulty;
        faulty.inject_fault = true;
        add(tds_oracle_suite(corpus, false, faulty, "oracle-tds (injected fault)"));
        return results;
    }
    add(tds_oracle_suite(corpus, false, {}, "oracle-tds"));
    add(tds_oracle_suite(corpus, true, {}, "oracle-substitution"));
    add(id_oracle_suite(corpus));
    add(matrix_suite(corpus));
    add(martingale_suite(corpus));
    add(stationary_suite(corpus));
    add(entropy_suite(corpus));
    for (const auto &c : corpus.cases) {
        ReproResult r = run_repro(c);
        SuiteResult suite{"repro " + c.name, r.passed, r.rows.size(), r.passed ? 0u : 1u, r.note};
        if (!r.passed && suite.detail.empty()) suite.detail = "measured values outside tolerance";
        add(suite);
    }
    return results;
}

} // namespace dupsys
