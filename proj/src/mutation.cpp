#include "dupsys/mutation.hpp"

#include "dupsys/detail/chunked_sequence.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dupsys {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw InvalidParameter("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::string MutationEvent::describe() const {
    std::ostringstream out;
    if (length == 0) {
        out << "substitute position " << position << " -> code " << int(replacement);
    } else if (kind == ModelKind::tds) {
        out << "tandem duplicate [" << position << ", +" << length << ")";
    } else {
        out << "duplicate [" << position << ", +" << length << ") into gap " << gap;
    }
    return out.str();
}

void apply_event(CircularString &s, const MutationEvent &event) {
    Splice splice = to_splice(event, s);
    s.splice(splice.gap, splice.removed, splice.inserted);
}

namespace {

void check_step_preconditions(const CircularString &s, const MutationModel &model, ModelKind expected) {
    if (model.kind() != expected)
        throw InvalidParameter("model kind " + to_string(model.kind()) + " used for a " + to_string(expected) +
                               " step");
    if (s.size() < static_cast<std::size_t>(model.max_length_bound()))
        throw InvalidParameter("string shorter than the maximum mutation length bound M");
}

} // namespace

CircularString step_tds(const CircularString &s, const MutationModel &model, Rng &rng) {
    check_step_preconditions(s, model, ModelKind::tds);
    CircularString next = s;
    apply_event(next, sample_event(s, model, s.alphabet().size(), rng));
    return next;
}

CircularString step_id(const CircularString &s, const MutationModel &model, Rng &rng) {
    check_step_preconditions(s, model, ModelKind::id);
    CircularString next = s;
    apply_event(next, sample_event(s, model, s.alphabet().size(), rng));
    return next;
}

std::vector<WeightedEvent> all_events(const CircularString &s, const MutationModel &model,
                                      std::optional<int> fixed_length) {
    std::vector<int> lengths;
    if (fixed_length) {
        if (*fixed_length < 0) throw InvalidParameter("negative mutation length");
        if (model.kind() == ModelKind::id && *fixed_length == 0)
            throw InvalidParameter("ID systems have no substitution events");
        lengths.push_back(*fixed_length);
    } else {
        lengths = model.support();
    }
    const std::size_t n = s.size();
    const std::size_t a = s.alphabet().size();
    std::vector<WeightedEvent> events;
    for (int length : lengths) {
        if (static_cast<std::size_t>(length) > n)
            throw InvalidParameter("string shorter than mutation length " + std::to_string(length));
        Rational weight = fixed_length ? Rational(1) : model.q(length);
        MutationEvent event;
        event.kind = model.kind();
        event.length = length;
        if (length == 0) {
            Rational p = weight / Rational(static_cast<unsigned long>(n * (a - 1)));
            for (std::size_t pos = 0; pos < n; ++pos) {
                for (std::size_t c = 0; c < a; ++c) {
                    if (c == s.at(static_cast<std::ptrdiff_t>(pos))) continue;
                    event.position = pos;
                    event.replacement = static_cast<Symbol>(c);
                    events.push_back({event, p});
                }
            }
        } else if (model.kind() == ModelKind::tds) {
            Rational p = weight / Rational(static_cast<unsigned long>(n));
            for (std::size_t pos = 0; pos < n; ++pos) {
                event.position = pos;
                events.push_back({event, p});
            }
        } else {
            Rational p = weight / Rational(static_cast<unsigned long>(n * n));
            for (std::size_t pos = 0; pos < n; ++pos) {
                for (std::size_t gap = 1; gap <= n; ++gap) {
                    event.position = pos;
                    event.gap = gap;
                    events.push_back({event, p});
                }
            }
        }
    }
    return events;
}

namespace {

// Applies a splice to the sequence and updates circular k-mer counts by
// removing the windows that touch the edited region and adding their
// replacements. Needs |seq| >= k - 1 + removed.
class CountingSequence {
  public:
    CountingSequence(const CircularString &s0, int k)
        : seq_(s0.data()), index_(s0.alphabet(), k), k_(static_cast<std::size_t>(k)),
          counts_(count_kmers(s0, k).counts) {}

    const detail::ChunkedSequence &sequence() const { return seq_; }
    const std::vector<std::uint64_t> &counts() const { return counts_; }
    std::size_t size() const { return seq_.size(); }
    Symbol at(std::size_t position) const { return seq_.at(position); }

    void apply(const Splice &splice) {
        const std::size_t n = seq_.size();
        const std::size_t flank = k_ - 1;
        const std::size_t start = (splice.gap + n * k_ - flank) % n;
        Word old_region = read_circular(seq_, start, 2 * flank + splice.removed);
        for (std::size_t j = 0; j + k_ <= old_region.size(); ++j) --counts_[code(old_region, j)];

        Word new_region(old_region.begin(), old_region.begin() + static_cast<std::ptrdiff_t>(flank));
        new_region.insert(new_region.end(), splice.inserted.begin(), splice.inserted.end());
        new_region.insert(new_region.end(), old_region.begin() + static_cast<std::ptrdiff_t>(flank + splice.removed),
                          old_region.end());
        for (std::size_t j = 0; j + k_ <= new_region.size(); ++j) ++counts_[code(new_region, j)];

        if (splice.removed == 1 && splice.inserted.size() == 1) {
            seq_.set(splice.gap, splice.inserted[0]);
        } else if (splice.removed == 0) {
            seq_.insert(splice.gap, splice.inserted);
        } else {
            throw InternalError("unsupported splice shape");
        }
    }

  private:
    std::size_t code(const Word &region, std::size_t offset) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < k_; ++i) c = c * index_.alphabet_size() + region[offset + i];
        return c;
    }

    detail::ChunkedSequence seq_;
    KmerIndex index_;
    std::size_t k_;
    std::vector<std::uint64_t> counts_;
};

} // namespace

TrajectoryRecord simulate(const CircularString &s0, const MutationModel &model, std::uint64_t n_steps, int k,
                          std::uint64_t seed, const SimulationOptions &options) {
    if (k < 1) throw InvalidParameter("k must be at least 1");
    if (static_cast<std::size_t>(k) > s0.size())
        throw InvalidParameter("k = " + std::to_string(k) + " exceeds |s0| = " + std::to_string(s0.size()));
    if (s0.size() < static_cast<std::size_t>(model.max_length_bound()))
        throw InvalidParameter("|s0| must be at least M = " + std::to_string(model.max_length_bound()));
    if (options.record_every < 1) throw InvalidParameter("record_every must be at least 1");

    TrajectoryRecord record{KmerIndex(s0.alphabet(), k), seed, {}, {}, {}, std::nullopt};
    CountingSequence state(s0, k);
    Rng rng(seed);
    const std::size_t a = s0.alphabet().size();

    auto snapshot = [&](std::uint64_t step) {
        const auto length = static_cast<double>(state.size());
        std::vector<double> x(state.counts().size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(state.counts()[i]) / length;
        record.steps.push_back(step);
        record.lengths.push_back(state.size());
        record.frequencies.push_back(std::move(x));
    };

    snapshot(0);
    for (std::uint64_t step = 1; step <= n_steps; ++step) {
        MutationEvent event = sample_event(state, model, a, rng);
        state.apply(to_splice(event, state));
        if (step % options.record_every == 0 || step == n_steps) snapshot(step);
    }
    if (options.keep_final_state) record.final_state = CircularString(s0.alphabet(), state.sequence().to_word());
    return record;
}

std::vector<Rational> martingale_one_step_check(const CircularString &s, const MutationModel &model) {
    if (!model.duplication_only())
        throw InvalidParameter("the symbol-frequency martingale needs q_0 = 0 (no substitutions)");
    const std::size_t a = s.alphabet().size();
    std::vector<Rational> expected(a, 0);
    for (const auto &[event, p] : all_events(s, model)) {
        CircularString next = s;
        apply_event(next, event);
        auto counts = symbol_counts(next.data(), a);
        Rational scale = p / Rational(static_cast<unsigned long>(next.size()));
        for (std::size_t c = 0; c < a; ++c)
            if (counts[c] != 0) expected[c] += scale * Rational(static_cast<unsigned long>(counts[c]));
    }
    for (auto &e : expected) e.canonicalize();
    return expected;
}

double hoeffding_bound(double lambda, std::uint64_t initial_length, int max_length_bound) {
    if (!(lambda >= 0.0)) throw InvalidParameter("lambda must be nonnegative");
    if (initial_length < 1) throw InvalidParameter("L0 must be at least 1");
    if (max_length_bound < 1) throw InvalidParameter("M must be at least 1");
    const double l0 = static_cast<double>(initial_length);
    const double m = static_cast<double>(max_length_bound);
    return 2.0 * std::exp(-lambda * lambda * l0 * l0 / (2.0 * m * m * m * m));
}

} // namespace dupsys
