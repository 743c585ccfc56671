#ifndef DUPSYS_MUTATION_MODEL_HPP
#define DUPSYS_MUTATION_MODEL_HPP

#include "dupsys/rational.hpp"

#include <string>
#include <vector>

namespace dupsys {

enum class ModelKind { tds, id };

std::string to_string(ModelKind kind);

// Distribution q_0, ..., q_{M-1} over mutation lengths. For TDS, q_0 is the
// substitution probability; for ID it is always zero.
class MutationModel {
  public:
    // q[l] is the probability of a length-l event. Validated: nonnegative,
    // sums to exactly one, q_0 < 1 (TDS) or q_0 = 0 (ID).
    MutationModel(ModelKind kind, std::vector<Rational> q);

    static MutationModel tds(std::vector<Rational> q) { return {ModelKind::tds, std::move(q)}; }
    static MutationModel id(std::vector<Rational> q) { return {ModelKind::id, std::move(q)}; }

    ModelKind kind() const { return kind_; }
    const std::vector<Rational> &q() const { return q_; }
    Rational q(int length) const;

    // Smallest M with q_l = 0 for all l >= M.
    int max_length_bound() const { return static_cast<int>(q_.size()); }
    bool duplication_only() const { return q(0) == 0; }

    // Lengths with positive probability, ascending.
    std::vector<int> support() const;

    std::string describe() const;

  private:
    ModelKind kind_;
    std::vector<Rational> q_;
};

} // namespace dupsys

#endif
