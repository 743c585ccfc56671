#include "dupsys/id_analysis.hpp"

namespace dupsys {

ShortWordVector<Rational> word_vector(const CircularString &s, int k) {
    return marginal_word_vector(s.alphabet(), kmer_frequencies(s, k).values(), k);
}

Rational decay_constant(const Word &u, const MutationModel &model) {
    if (model.kind() != ModelKind::id) throw InvalidParameter("decay constant is defined for ID models");
    const auto n = static_cast<int>(u.size());
    if (n < 2) throw InvalidParameter("decay constant needs |u| >= 2");
    Rational c = 2 * n - 2;
    for (int l = 1; l <= n - 1; ++l) c -= model.q(l) * (n - 1 - l);
    return c;
}

} // namespace dupsys
