#include "dupsys/oracle.hpp"

#include "dupsys/id_analysis.hpp"

#include <map>

namespace dupsys {

Rational EventEnumeration::total_probability() const {
    Rational total = 0;
    for (const auto &e : events) total += e.probability;
    return total;
}

EventEnumeration enumerate_events(const CircularString &s, const MutationModel &model,
                                  std::optional<int> fixed_length) {
    EventEnumeration out{model, fixed_length, {}};
    for (auto &[event, p] : all_events(s, model, fixed_length)) {
        CircularString next = s;
        apply_event(next, event);
        out.events.push_back({event, p, std::move(next)});
    }
    return out;
}

std::vector<Rational> expected_delta(const CircularString &s, const MutationModel &model, int fixed_length, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > s.size()) throw InvalidParameter("need 1 <= k <= |s|");
    if (model.kind() == ModelKind::tds && k <= fixed_length)
        throw InvalidParameter("TDS expectations are only defined for k > l");
    KmerCounts before = count_kmers(s, k);
    // Events sharing a probability are summed as integers first.
    std::map<Rational, std::vector<std::int64_t>> grouped;
    for (const auto &[event, p] : all_events(s, model, fixed_length)) {
        CircularString next = s;
        apply_event(next, event);
        KmerCounts after = count_kmers(next, k);
        auto &sums = grouped.try_emplace(p, before.counts.size(), 0).first->second;
        for (std::size_t i = 0; i < sums.size(); ++i)
            sums[i] += static_cast<std::int64_t>(after.counts[i]) - static_cast<std::int64_t>(before.counts[i]);
    }
    std::vector<Rational> delta(before.counts.size(), 0);
    for (const auto &[p, sums] : grouped)
        for (std::size_t i = 0; i < sums.size(); ++i)
            if (sums[i] != 0) delta[i] += p * Rational(static_cast<long>(sums[i]));
    return delta;
}

std::size_t length_floor(int k, int max_length_bound) {
    return 2 * static_cast<std::size_t>(k + max_length_bound);
}

ComparisonReport compare_to_formula(const CircularString &s, const MutationModel &model, int fixed_length, int k,
                                    const ComparisonOptions &options) {
    ComparisonReport report;
    report.kind = model.kind();
    report.length = fixed_length;
    report.k = k;
    report.string_length = s.size();
    int bound = std::max(model.max_length_bound(), fixed_length + 1);
    report.below_floor = s.size() < length_floor(k, bound);

    std::vector<Rational> oracle = expected_delta(s, model, fixed_length, k);
    KmerIndex index(s.alphabet(), k);
    std::vector<Rational> formula(index.size());

    if (model.kind() == ModelKind::tds) {
        // Evaluate on integer counts and divide by |s| once: same value as
        // evaluating on frequencies, with far cheaper rational arithmetic.
        std::vector<LinearForm> local;
        const std::vector<LinearForm> *forms = options.precomputed;
        if (forms == nullptr) {
            local = delta_forms(fixed_length, index, options.delta);
            forms = &local;
        }
        if (forms->size() != index.size() || (!forms->empty() && !(forms->front().index() == index)))
            throw InvalidParameter("precomputed forms do not match the k-mer index");
        KmerCounts counts = count_kmers(s, k);
        std::vector<Rational> mu(counts.counts.begin(), counts.counts.end());
        Rational inv_length(1, static_cast<unsigned long>(s.size()));
        for (std::size_t i = 0; i < index.size(); ++i) formula[i] = (*forms)[i].evaluate(mu) * inv_length;
    } else {
        ShortWordVector<Rational> x = word_vector(s, k);
        for (std::size_t i = 0; i < index.size(); ++i) formula[i] = delta_id(index.decode(i), fixed_length, x);
    }

    for (std::size_t i = 0; i < index.size(); ++i) {
        ++report.words_checked;
        if (formula[i] != oracle[i]) report.discrepancies.push_back({index.decode(i), formula[i], oracle[i]});
    }
    return report;
}

} // namespace dupsys
