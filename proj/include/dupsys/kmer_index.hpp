#ifndef DUPSYS_KMER_INDEX_HPP
#define DUPSYS_KMER_INDEX_HPP

#include "dupsys/alphabet.hpp"

#include <cstddef>
#include <string>

namespace dupsys {

// Lexicographic bijection A^k <-> {0, ..., |A|^k - 1}; the first symbol is the
// most significant digit. Every vector and matrix over k-mers uses this layout.
class KmerIndex {
  public:
    KmerIndex(Alphabet alphabet, int k);

    const Alphabet &alphabet() const { return alphabet_; }
    std::size_t alphabet_size() const { return alphabet_.size(); }
    int k() const { return k_; }
    std::size_t size() const { return size_; }

    std::size_t encode(const Word &kmer) const;
    Word decode(std::size_t index) const;
    std::string label(std::size_t index) const { return alphabet_.decode(decode(index)); }

    bool operator==(const KmerIndex &other) const = default;

  private:
    Alphabet alphabet_;
    int k_;
    std::size_t size_;
};

} // namespace dupsys

#endif
