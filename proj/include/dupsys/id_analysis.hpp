#ifndef DUPSYS_ID_ANALYSIS_HPP
#define DUPSYS_ID_ANALYSIS_HPP

#include "dupsys/errors.hpp"
#include "dupsys/mutation_model.hpp"
#include "dupsys/strings.hpp"

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

namespace dupsys {

// Frequencies of every nonempty word of length at most k. by_length[i - 1]
// holds the vector over A^i in index order. Construction checks that each
// length sums to one and that x^w = sum_a x^{wa}.
template <typename T> class ShortWordVector {
  public:
    ShortWordVector(Alphabet alphabet, std::vector<std::vector<T>> by_length)
        : alphabet_(std::move(alphabet)), values_(std::move(by_length)) {
        if (values_.empty()) throw InvalidParameter("word vector needs k >= 1");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            indices_.emplace_back(alphabet_, static_cast<int>(i + 1));
            if (values_[i].size() != indices_.back().size())
                throw InvalidParameter("word vector of length " + std::to_string(i + 1) + " has the wrong size");
        }
        validate();
    }

    const Alphabet &alphabet() const { return alphabet_; }
    int k() const { return static_cast<int>(values_.size()); }
    const std::vector<T> &of_length(int length) const { return values_.at(static_cast<std::size_t>(length - 1)); }
    const KmerIndex &index(int length) const { return indices_.at(static_cast<std::size_t>(length - 1)); }

    // x^w; the empty word has frequency 1.
    T at(const Word &w) const {
        if (w.empty()) return T(1);
        if (w.size() > values_.size()) throw InvalidParameter("word longer than the vector's k");
        return values_[w.size() - 1][indices_[w.size() - 1].encode(w)];
    }

  private:
    static bool near(const T &a, const T &b) {
        if constexpr (std::is_same_v<T, Rational>)
            return a == b;
        else
            return std::abs(a - b) <= 1e-12;
    }

    void validate() const {
        const std::size_t a = alphabet_.size();
        for (std::size_t i = 0; i < values_.size(); ++i) {
            T total(0);
            for (const T &v : values_[i]) {
                if (v < 0) throw InvalidMeasure("negative word frequency");
                total += v;
            }
            if (!near(total, T(1)))
                throw InvalidMeasure("frequencies of length " + std::to_string(i + 1) + " do not sum to 1");
            if (i == 0) continue;
            for (std::size_t w = 0; w < values_[i - 1].size(); ++w) {
                T sum(0);
                for (std::size_t c = 0; c < a; ++c) sum += values_[i][w * a + c];
                if (!near(sum, values_[i - 1][w]))
                    throw InvalidMeasure("word vector is not consistent between lengths " + std::to_string(i) +
                                         " and " + std::to_string(i + 1));
            }
        }
    }

    Alphabet alphabet_;
    std::vector<std::vector<T>> values_;
    std::vector<KmerIndex> indices_;
};

// Prefix marginals of a k-mer vector: lengths 1..k.
template <typename T>
ShortWordVector<T> marginal_word_vector(const Alphabet &alphabet, std::vector<T> kmer_values, int k) {
    std::vector<std::vector<T>> by_length(static_cast<std::size_t>(k));
    by_length.back() = std::move(kmer_values);
    const std::size_t a = alphabet.size();
    for (int i = k - 1; i >= 1; --i) {
        const auto &longer = by_length[static_cast<std::size_t>(i)];
        std::vector<T> shorter(longer.size() / a, T(0));
        for (std::size_t w = 0; w < longer.size(); ++w) shorter[w / a] += longer[w];
        by_length[static_cast<std::size_t>(i - 1)] = std::move(shorter);
    }
    return ShortWordVector<T>(alphabet, std::move(by_length));
}

// Exact word vector of a circular string.
ShortWordVector<Rational> word_vector(const CircularString &s, int k);

// prod_a rho_a^{n_u(a)}; 1 for the empty word.
template <typename T> T iid_product(const Word &u, const std::vector<T> &symbol_freqs) {
    T p(1);
    for (Symbol c : u) p *= symbol_freqs.at(c);
    return p;
}

// The vector with x^w = p(w, rho) for every word of length 1..k.
template <typename T> ShortWordVector<T> iid_word_vector(const Alphabet &alphabet, const std::vector<T> &rho, int k) {
    if (rho.size() != alphabet.size()) throw InvalidParameter("symbol distribution has the wrong size");
    std::vector<std::vector<T>> by_length;
    for (int i = 1; i <= k; ++i) {
        KmerIndex index(alphabet, i);
        std::vector<T> v(index.size());
        for (std::size_t w = 0; w < v.size(); ++w) v[w] = iid_product(index.decode(w), rho);
        by_length.push_back(std::move(v));
    }
    return ShortWordVector<T>(alphabet, std::move(by_length));
}

// Expected change of the count of u after one interspersed duplication of the
// given length. Quadratic in x. Needs |u| <= x.k().
template <typename T> T delta_id(const Word &u, int length, const ShortWordVector<T> &x) {
    if (length < 1) throw InvalidParameter("duplication length must be at least 1");
    const auto n = u.size();
    if (n < 1 || static_cast<int>(n) > x.k()) throw InvalidParameter("|u| must lie in [1, k]");
    const auto l = static_cast<std::size_t>(length);
    auto f = [&](std::size_t start, std::size_t len) { return x.at(substring(u, start, len)); };
    T result = -T(static_cast<long>(n - 1)) * x.at(u);
    const std::size_t joins = l < n ? l : n - 1;
    for (std::size_t i = 1; i <= joins; ++i) {
        result += f(1, i) * f(i + 1, n - i);
        result += f(1, n - i) * f(n - i + 1, i);
    }
    if (l < n) {
        for (std::size_t i = 1; i + l + 1 <= n; ++i)
            result += x.at(concat(substring(u, 1, i), substring(u, i + l + 1, n - l - i))) * f(i + 1, l);
    } else {
        result += T(static_cast<long>(l - n + 1)) * x.at(u);
    }
    return result;
}

// sum_l q_l (delta_l^u(x) - l x^u).
template <typename T> T h_id(const Word &u, const MutationModel &model, const ShortWordVector<T> &x) {
    if (model.kind() != ModelKind::id) throw InvalidParameter("drift h is defined here for ID models");
    T total(0);
    for (int l : model.support())
        total += convert_scalar<T>(model.q(l)) * (delta_id(u, l, x) - T(l) * x.at(u));
    return total;
}

// c^u = 2|u| - 2 - sum_{l=1}^{|u|-1} q_l (|u| - 1 - l); exponential decay rate
// of the deviation from the product form.
Rational decay_constant(const Word &u, const MutationModel &model);

struct WordDeviation {
    Word word;
    double observed = 0.0;
    double product = 0.0;
    double deviation = 0.0;
};

struct IidDeviationReport {
    std::vector<WordDeviation> words;  // lengths 2..k
    std::vector<double> max_by_length; // index i is length i + 2
    double max = 0.0;
    double mean = 0.0;
};

// |x^u - p(u, x)| for every word of length 2..k.
template <typename T> IidDeviationReport iid_deviation(const ShortWordVector<T> &x) {
    IidDeviationReport report;
    std::vector<T> rho = x.of_length(1);
    double total = 0.0;
    for (int len = 2; len <= x.k(); ++len) {
        double max_here = 0.0;
        const KmerIndex &index = x.index(len);
        for (std::size_t w = 0; w < index.size(); ++w) {
            Word word = index.decode(w);
            double observed = to_double(x.of_length(len)[w]);
            double product = to_double(iid_product(word, rho));
            double d = std::abs(observed - product);
            report.words.push_back({word, observed, product, d});
            max_here = std::max(max_here, d);
            total += d;
        }
        report.max_by_length.push_back(max_here);
        report.max = std::max(report.max, max_here);
    }
    if (!report.words.empty()) report.mean = total / static_cast<double>(report.words.size());
    return report;
}

} // namespace dupsys

#endif
