#ifndef DUPSYS_ENTROPY_HPP
#define DUPSYS_ENTROPY_HPP

#include "dupsys/mutation_model.hpp"
#include "dupsys/strings.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dupsys {

// A shift-invariant probability vector over A^k. Exact input is validated
// exactly; floating input within 1e-12.
class SemiconstrainedMeasure {
  public:
    SemiconstrainedMeasure(KmerIndex index, const std::vector<Rational> &xi);
    SemiconstrainedMeasure(KmerIndex index, std::vector<double> xi);

    const KmerIndex &index() const { return index_; }
    const std::vector<double> &values() const { return xi_; }

  private:
    KmerIndex index_;
    std::vector<double> xi_;
};

// Marginal on the first k - 1 coordinates. k = 1 is rejected.
SemiconstrainedMeasure marginalize(const SemiconstrainedMeasure &xi);

// -sum xi log_{|A|}(xi / xibar), with 0 log 0 = 0. For k = 1 xibar is 1.
double cap_singleton(const SemiconstrainedMeasure &xi);

// H_2(p) in bits.
double binary_entropy(double p);

struct EntropyEntry {
    int k = 0;
    std::size_t nullity = 0;
    std::optional<double> cap; // absent when the limit is not unique
};

struct EntropyReport {
    std::string model;
    std::vector<EntropyEntry> entries;
    bool monotone = true; // cap(k) >= cap(k + 1) - 1e-12 over available entries

    std::optional<double> cap(int k) const;
};

// cap of the limiting k-mer measure for k = M..k_max (at least 1).
EntropyReport bound_chain(const MutationModel &model, const Alphabet &alphabet, int k_max);

// cap(Gamma_k) for the binary model q = (1 - alpha - beta, alpha, beta).
// Pure substitution (alpha + beta = 0) is unsupported; a non-unique limit
// yields nullopt.
std::optional<double> bound_surface(const Rational &alpha, const Rational &beta, int k);

struct SurfacePoint {
    Rational alpha;
    Rational beta;
    std::optional<double> cap;
};

// alpha = i / resolution, beta = j / resolution over the simplex, skipping (0, 0).
std::vector<SurfacePoint> surface_grid(int resolution, int k);

struct CurvePoint {
    Rational alpha;
    int k = 0;
    std::optional<double> cap;
};

// Binary q = (alpha, 1 - alpha) with alpha = i / resolution, 0 < i < resolution.
std::vector<CurvePoint> substitution_curve(int resolution, const std::vector<int> &ks);

// Entropy in bits of the binary length-1 interspersed system started from t0
// zeros and t1 ones.
double id_binary_len1_entropy(std::uint64_t t0, std::uint64_t t1);

} // namespace dupsys

#endif
