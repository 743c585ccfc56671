#include "dupsys/kmer_index.hpp"

#include "dupsys/errors.hpp"

#include <limits>

namespace dupsys {

KmerIndex::KmerIndex(Alphabet alphabet, int k) : alphabet_(std::move(alphabet)), k_(k), size_(1) {
    if (k < 1) throw InvalidParameter("k-mer length must be at least 1");
    for (int i = 0; i < k; ++i) {
        if (size_ > std::numeric_limits<std::size_t>::max() / alphabet_.size() / 1024)
            throw InvalidParameter("k-mer index too large");
        size_ *= alphabet_.size();
    }
}

std::size_t KmerIndex::encode(const Word &kmer) const {
    if (kmer.size() != static_cast<std::size_t>(k_))
        throw InvalidParameter("word length " + std::to_string(kmer.size()) +
                               " does not match k = " + std::to_string(k_));
    std::size_t index = 0;
    for (Symbol s : kmer) {
        if (s >= alphabet_.size()) throw InvalidParameter("symbol code outside alphabet");
        index = index * alphabet_.size() + s;
    }
    return index;
}

Word KmerIndex::decode(std::size_t index) const {
    if (index >= size_) throw InvalidParameter("k-mer index out of range");
    Word w(static_cast<std::size_t>(k_));
    for (int i = k_ - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<Symbol>(index % alphabet_.size());
        index /= alphabet_.size();
    }
    return w;
}

} // namespace dupsys
