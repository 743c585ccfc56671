#ifndef DUPSYS_STRINGS_HPP
#define DUPSYS_STRINGS_HPP

#include "dupsys/alphabet.hpp"
#include "dupsys/kmer_index.hpp"
#include "dupsys/linear_form.hpp"
#include "dupsys/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dupsys {

// A circular string with a fixed origin and direction. Storage order is the
// reading order from the origin; indexing wraps modulo the length.
class CircularString {
  public:
    CircularString(Alphabet alphabet, Word data);
    CircularString(Alphabet alphabet, std::string_view text);

    const Alphabet &alphabet() const { return alphabet_; }
    const Word &data() const { return data_; }
    std::size_t size() const { return data_.size(); }

    // 0-based, wraps in both directions.
    Symbol at(std::ptrdiff_t position) const;
    // `length` symbols starting at `start`, wrapping around the origin.
    Word window(std::ptrdiff_t start, std::size_t length) const;

    std::string to_string() const { return alphabet_.decode(data_); }

    // Replaces `removed` symbols at 0-based `gap` with `inserted`. `gap` may
    // equal size() (append). Used by the mutation engine.
    void splice(std::size_t gap, std::size_t removed, const Word &inserted);

    bool operator==(const CircularString &other) const = default;

  private:
    Alphabet alphabet_;
    Word data_;
};

// Occurrence counts of every k-mer, one k-mer starting at each circular position.
struct KmerCounts {
    KmerIndex index;
    std::vector<std::uint64_t> counts;
    std::uint64_t length = 0;
};

// Frequencies x^u = mu^u / L over a k-mer index, carried exactly.
class FrequencyVector {
  public:
    FrequencyVector(KmerIndex index, std::vector<Rational> values);

    const KmerIndex &index() const { return index_; }
    const std::vector<Rational> &values() const { return values_; }
    const Rational &operator[](std::size_t i) const { return values_[i]; }

    // Frequency of any word with 1 <= |w| <= k, by summing over the k-mers
    // that have w as a prefix.
    Rational frequency(const Word &w) const;

    std::vector<double> to_double() const;

  private:
    KmerIndex index_;
    std::vector<Rational> values_;
};

KmerCounts count_kmers(const CircularString &s, int k);
FrequencyVector frequencies(const KmerCounts &counts);
inline FrequencyVector kmer_frequencies(const CircularString &s, int k) {
    return frequencies(count_kmers(s, k));
}

enum class LiftDirection { prefix, suffix };

// The 0/1 form sum of x^v over v in A^k having w as a prefix (or suffix).
LinearForm lift_to_k(const Word &w, const KmerIndex &index,
                     LiftDirection direction = LiftDirection::prefix);

// All |u|(|A| - 1) strings at Hamming distance exactly one from u, ordered
// by position and then by alphabet order.
std::vector<Word> hamming_ball_1(const Word &u, std::size_t alphabet_size);

// Occurrences of each alphabet symbol in u; entry a is n_u(a).
std::vector<std::size_t> symbol_counts(const Word &u, std::size_t alphabet_size);

// sum_a x^{aw} == sum_a x^{wa} for every w in A^{k-1}.
bool is_shift_invariant(const KmerIndex &index, const std::vector<Rational> &x);
bool is_shift_invariant(const KmerIndex &index, const std::vector<double> &x, double tolerance);

// Substring u_{start, length} with the 1-based start used in the formulas.
inline Word substring(const Word &u, std::size_t start, std::size_t length) {
    return Word(u.begin() + static_cast<std::ptrdiff_t>(start - 1),
                u.begin() + static_cast<std::ptrdiff_t>(start - 1 + length));
}

inline Word concat(Word a, const Word &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace dupsys

#endif
