#ifndef DUPSYS_TDS_ANALYSIS_HPP
#define DUPSYS_TDS_ANALYSIS_HPP

#include "dupsys/exact_linalg.hpp"
#include "dupsys/linear_form.hpp"
#include "dupsys/mutation_model.hpp"
#include "dupsys/strings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dupsys {

// Which positions of u repeat the symbol m places earlier ('0'), and the runs
// of such positions right after the leading X^m (l_run) and at the end (r_run).
struct PhiMask {
    Word u;
    int m = 0;
    std::vector<bool> zero;
    int l_run = 0;
    int r_run = 0;

    // 'X' / '0' rendering, e.g. "XXX00X0000X0000".
    std::string to_string() const;
    // True when the mask is X^m 0^{|u|-m}.
    bool fully_periodic() const;
};

PhiMask phi_mask(const Word &u, int m);

// u with positions z .. z+m-1 (1-based) removed.
Word delete_block(const Word &u, int z, int m);

// Knobs for exercising the formulas. Fault injection exists only so that the
// verification harness can demonstrate that it detects a wrong formula.
struct DeltaOptions {
    LiftDirection lifting = LiftDirection::prefix;
    bool inject_fault = false;
};

struct AuxForms {
    LinearForm g;
    LinearForm f_left;
    LinearForm f_right;
    LinearForm m;
};

// G, F_l, F_r and M for u in A^k (k = |u| = index.k()) and duplication length
// `length` < k; shorter words are lifted to the k-mer basis.
AuxForms aux_forms(const Word &u, int length, const KmerIndex &index, const DeltaOptions &options = {});

// Expected change of the count of u under one tandem duplication of the given length.
LinearForm delta_dup(const Word &u, int length, const KmerIndex &index, const DeltaOptions &options = {});

// Expected change of the count of u under one substitution.
LinearForm delta_sub(const Word &u, const KmerIndex &index);

// delta forms for every u in A^k, in index order (length 0 = substitution).
std::vector<LinearForm> delta_forms(int length, const KmerIndex &index, const DeltaOptions &options = {});

// A = sum_l q_l A_l with A_l x = delta_l(x) - l x, over the k-mer basis.
struct RateMatrix {
    KmerIndex index;
    std::vector<Rational> q;
    std::vector<Matrix<Rational>> components; // A_0 .. A_{M-1}
    Matrix<Rational> combined;                // A

    std::size_t dimension() const { return index.size(); }
    Matrix<double> to_double() const;
};

RateMatrix build_rate_matrix(const MutationModel &model, const KmerIndex &index, const DeltaOptions &options = {});

bool column_sums_zero(const Matrix<Rational> &m);
// Diagonal <= 0 and off-diagonal >= 0.
bool metzler_sign_pattern(const Matrix<Rational> &m);

struct LimitSet {
    std::size_t nullity = 0;
    std::vector<std::vector<Rational>> basis;
    // Probability-normalised null vector; present only when nullity == 1.
    std::optional<std::vector<Rational>> stationary;
};

LimitSet null_space_limit(const RateMatrix &a);

struct NumericLimitSet {
    std::size_t nullity = 0;
    std::vector<std::vector<double>> basis;
    std::optional<std::vector<double>> stationary;
};

// Floating-point counterpart for rate matrices with non-rational weights.
NumericLimitSet null_space_limit_numeric(const Matrix<double> &a, double singular_threshold = 1e-10);

} // namespace dupsys

#endif
