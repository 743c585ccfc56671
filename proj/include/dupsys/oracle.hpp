#ifndef DUPSYS_ORACLE_HPP
#define DUPSYS_ORACLE_HPP

#include "dupsys/mutation.hpp"
#include "dupsys/tds_analysis.hpp"

#include <optional>
#include <string>
#include <vector>

// Brute-force ground truth. Everything here edits strings and counts words;
// none of it touches the closed-form expressions, except compare_to_formula,
// which evaluates them to compare.

namespace dupsys {

struct EnumeratedEvent {
    MutationEvent event;
    Rational probability;
    CircularString result;
};

struct EventEnumeration {
    MutationModel model;
    std::optional<int> fixed_length;
    std::vector<EnumeratedEvent> events;

    Rational total_probability() const;
};

EventEnumeration enumerate_events(const CircularString &s, const MutationModel &model,
                                  std::optional<int> fixed_length = std::nullopt);

// sum over events of p * (mu^u(s') - mu^u(s)) for every u in A^k, exactly.
// TDS requires k > fixed_length.
std::vector<Rational> expected_delta(const CircularString &s, const MutationModel &model, int fixed_length, int k);

struct Discrepancy {
    Word u;
    Rational formula;
    Rational oracle;
};

struct ComparisonOptions {
    DeltaOptions delta;
    // delta_forms(fixed_length, index) computed once by the caller (TDS only).
    const std::vector<LinearForm> *precomputed = nullptr;
};

struct ComparisonReport {
    ModelKind kind = ModelKind::tds;
    int length = 0;
    int k = 0;
    std::size_t string_length = 0;
    // |s| < 2(k + M): mismatches are informational only.
    bool below_floor = false;
    std::size_t words_checked = 0;
    std::vector<Discrepancy> discrepancies;

    bool agrees() const { return discrepancies.empty(); }
};

// Smallest |s| for which formula and oracle are required to agree.
std::size_t length_floor(int k, int max_length_bound);

// Formula vs oracle for one string, one mutation length and one word length.
// TDS uses delta_dup / delta_sub over A^k; ID uses delta_id over A^k.
ComparisonReport compare_to_formula(const CircularString &s, const MutationModel &model, int fixed_length, int k,
                                    const ComparisonOptions &options = {});

} // namespace dupsys

#endif
