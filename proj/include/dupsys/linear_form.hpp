#ifndef DUPSYS_LINEAR_FORM_HPP
#define DUPSYS_LINEAR_FORM_HPP

#include "dupsys/kmer_index.hpp"
#include "dupsys/rational.hpp"

#include <map>
#include <span>
#include <string>

namespace dupsys {

// Sparse linear combination sum_v c_v x^v over the k-mer basis of an index.
// Zero coefficients are never stored.
class LinearForm {
  public:
    explicit LinearForm(KmerIndex index) : index_(std::move(index)) {}

    const KmerIndex &index() const { return index_; }
    const std::map<std::size_t, Rational> &coefficients() const { return coefficients_; }
    bool empty() const { return coefficients_.empty(); }

    Rational coefficient(std::size_t basis) const;
    Rational coefficient(const Word &kmer) const { return coefficient(index_.encode(kmer)); }

    void add(std::size_t basis, const Rational &coefficient);
    void add(const Word &kmer, const Rational &coefficient) { add(index_.encode(kmer), coefficient); }

    LinearForm &operator+=(const LinearForm &other);
    LinearForm &operator-=(const LinearForm &other);
    LinearForm &operator*=(const Rational &scale);

    Rational coefficient_sum() const;

    Rational evaluate(std::span<const Rational> x) const;
    double evaluate(std::span<const double> x) const;

    // e.g. "x^{ACG} + 2x^{CGA} - 4x^{GAC}"
    std::string to_string() const;

    bool operator==(const LinearForm &other) const;

  private:
    KmerIndex index_;
    std::map<std::size_t, Rational> coefficients_;
};

inline LinearForm operator+(LinearForm a, const LinearForm &b) { return a += b; }
inline LinearForm operator-(LinearForm a, const LinearForm &b) { return a -= b; }

} // namespace dupsys

#endif
