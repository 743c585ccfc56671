#include "dupsys/mutation_model.hpp"

#include "dupsys/errors.hpp"

#include <sstream>

namespace dupsys {

std::string to_string(ModelKind kind) { return kind == ModelKind::tds ? "TDS" : "ID"; }

MutationModel::MutationModel(ModelKind kind, std::vector<Rational> q) : kind_(kind), q_(std::move(q)) {
    Rational total = 0;
    for (std::size_t l = 0; l < q_.size(); ++l) {
        q_[l].canonicalize();
        if (q_[l] < 0) throw InvalidParameter("q_" + std::to_string(l) + " is negative");
        total += q_[l];
    }
    if (total != 1)
        throw InvalidParameter("mutation probabilities sum to " + to_fraction_string(total) + ", not 1");
    while (!q_.empty() && q_.back() == 0) q_.pop_back();
    if (kind_ == ModelKind::tds && this->q(0) == 1)
        throw InvalidParameter("TDS model needs q_0 < 1 (pure substitution has no limit theory)");
    if (kind_ == ModelKind::id && this->q(0) != 0)
        throw InvalidParameter("ID model must have q_0 = 0");
}

Rational MutationModel::q(int length) const {
    if (length < 0 || static_cast<std::size_t>(length) >= q_.size()) return 0;
    return q_[static_cast<std::size_t>(length)];
}

std::vector<int> MutationModel::support() const {
    std::vector<int> lengths;
    for (std::size_t l = 0; l < q_.size(); ++l)
        if (q_[l] > 0) lengths.push_back(static_cast<int>(l));
    return lengths;
}

std::string MutationModel::describe() const {
    std::ostringstream out;
    out << to_string(kind_) << " {";
    bool first = true;
    for (int l : support()) {
        out << (first ? "" : ", ") << "q" << l << " = " << to_fraction_string(q_[static_cast<std::size_t>(l)]);
        first = false;
    }
    out << "}";
    return out.str();
}

} // namespace dupsys
