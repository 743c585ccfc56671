#ifndef DUPSYS_MUTATION_HPP
#define DUPSYS_MUTATION_HPP

#include "dupsys/errors.hpp"
#include "dupsys/mutation_model.hpp"
#include "dupsys/strings.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dupsys {

// Seeded deterministic stream. Bounded draws use rejection sampling on the raw
// 64-bit output, so results do not depend on the standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n);
    // Uniform in [0, 1) with 53 random bits.
    double unit();

  private:
    std::mt19937_64 engine_;
};

// One mutation, with positions relative to the pre-mutation string (0-based).
//   substitution (length 0): symbol at `position` becomes `replacement`
//   tandem duplication:      template s[position .. position+length-1] (circular)
//                            is copied immediately after itself
//   interspersed duplication: the same template is inserted at `gap`, i.e. after
//                            the first `gap` symbols, gap in [1, |s|]
struct MutationEvent {
    ModelKind kind = ModelKind::tds;
    int length = 0;
    std::size_t position = 0;
    std::size_t gap = 0;
    Symbol replacement = 0;

    std::string describe() const;
};

// Replace `removed` symbols starting at index `gap` by `inserted`.
struct Splice {
    std::size_t gap = 0;
    std::size_t removed = 0;
    Word inserted;
};

template <typename Sequence>
Word read_circular(const Sequence &seq, std::size_t start, std::size_t length) {
    Word out(length);
    const std::size_t n = seq.size();
    for (std::size_t i = 0; i < length; ++i) out[i] = seq.at((start + i) % n);
    return out;
}

template <typename Sequence> Splice to_splice(const MutationEvent &event, const Sequence &seq) {
    const std::size_t n = seq.size();
    if (event.position >= n) throw InvalidParameter("event position outside the string");
    if (event.length == 0) return {event.position, 1, Word{event.replacement}};
    auto len = static_cast<std::size_t>(event.length);
    Word copy = read_circular(seq, event.position, len);
    if (event.kind == ModelKind::tds) {
        std::size_t end = event.position + len;
        while (end > n) end -= n;
        return {end, 0, std::move(copy)};
    }
    if (event.gap < 1 || event.gap > n) throw InvalidParameter("insertion gap outside [1, |s|]");
    return {event.gap, 0, std::move(copy)};
}

template <typename Sequence>
MutationEvent sample_event(const Sequence &seq, const MutationModel &model, std::size_t alphabet_size,
                           Rng &rng) {
    MutationEvent event;
    event.kind = model.kind();
    const std::size_t n = seq.size();
    double u = rng.unit();
    const auto &q = model.q();
    int length = static_cast<int>(q.size()) - 1;
    double cumulative = 0.0;
    for (std::size_t l = 0; l < q.size(); ++l) {
        if (q[l] == 0) continue;
        cumulative += to_double(q[l]);
        if (u < cumulative) {
            length = static_cast<int>(l);
            break;
        }
    }
    while (length > 0 && q[static_cast<std::size_t>(length)] == 0) --length;
    event.length = length;
    event.position = rng.below(n);
    if (length == 0) {
        Symbol current = seq.at(event.position);
        auto r = static_cast<Symbol>(rng.below(alphabet_size - 1));
        event.replacement = r < current ? r : static_cast<Symbol>(r + 1);
    } else if (model.kind() == ModelKind::id) {
        event.gap = 1 + rng.below(n);
    }
    return event;
}

void apply_event(CircularString &s, const MutationEvent &event);

// Sample and apply one event. Precondition |s| >= M; model kind must match.
CircularString step_tds(const CircularString &s, const MutationModel &model, Rng &rng);
CircularString step_id(const CircularString &s, const MutationModel &model, Rng &rng);

struct WeightedEvent {
    MutationEvent event;
    Rational probability;
};

// Every possible single event with its exact probability. With `fixed_length`
// the probabilities are conditioned on that length (and sum to one); otherwise
// they are weighted by q_l.
std::vector<WeightedEvent> all_events(const CircularString &s, const MutationModel &model,
                                      std::optional<int> fixed_length = std::nullopt);

struct TrajectoryRecord {
    KmerIndex index;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> steps;
    std::vector<std::uint64_t> lengths;
    std::vector<std::vector<double>> frequencies;
    std::optional<CircularString> final_state;
};

struct SimulationOptions {
    std::uint64_t record_every = 1;
    bool keep_final_state = false;
};

// Runs n_steps mutations from s0, recording k-mer frequencies at step 0,
// every record_every steps and at the final step.
TrajectoryRecord simulate(const CircularString &s0, const MutationModel &model, std::uint64_t n_steps, int k,
                          std::uint64_t seed, const SimulationOptions &options = {});

// Exact E[x_{n+1}^a | s_n = s] for every symbol a, by enumerating all events.
// Requires a duplication-only model.
std::vector<Rational> martingale_one_step_check(const CircularString &s, const MutationModel &model);

// 2 exp(-lambda^2 L0^2 / (2 M^4)).
double hoeffding_bound(double lambda, std::uint64_t initial_length, int max_length_bound);

} // namespace dupsys

#endif
