#include "dupsys/strings.hpp"

#include "dupsys/errors.hpp"

#include <cmath>

namespace dupsys {

CircularString::CircularString(Alphabet alphabet, Word data)
    : alphabet_(std::move(alphabet)), data_(std::move(data)) {
    if (data_.empty()) throw InvalidParameter("circular string must be nonempty");
    for (Symbol s : data_)
        if (s >= alphabet_.size()) throw InvalidParameter("symbol code outside alphabet");
}

CircularString::CircularString(Alphabet alphabet, std::string_view text)
    : CircularString(alphabet, alphabet.encode(text)) {}

Symbol CircularString::at(std::ptrdiff_t position) const {
    auto n = static_cast<std::ptrdiff_t>(data_.size());
    std::ptrdiff_t r = position % n;
    if (r < 0) r += n;
    return data_[static_cast<std::size_t>(r)];
}

Word CircularString::window(std::ptrdiff_t start, std::size_t length) const {
    Word w(length);
    for (std::size_t i = 0; i < length; ++i) w[i] = at(start + static_cast<std::ptrdiff_t>(i));
    return w;
}

void CircularString::splice(std::size_t gap, std::size_t removed, const Word &inserted) {
    if (gap > data_.size() || gap + removed > data_.size())
        throw InvalidParameter("splice range outside the string");
    if (removed >= data_.size() && inserted.empty())
        throw InvalidParameter("splice would empty the string");
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(gap);
    first = data_.erase(first, first + static_cast<std::ptrdiff_t>(removed));
    data_.insert(first, inserted.begin(), inserted.end());
}

FrequencyVector::FrequencyVector(KmerIndex index, std::vector<Rational> values)
    : index_(std::move(index)), values_(std::move(values)) {
    if (values_.size() != index_.size()) throw InvalidParameter("frequency vector length mismatch");
}

Rational FrequencyVector::frequency(const Word &w) const {
    return lift_to_k(w, index_).evaluate(values_);
}

std::vector<double> FrequencyVector::to_double() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = dupsys::to_double(values_[i]);
    return out;
}

KmerCounts count_kmers(const CircularString &s, int k) {
    if (k < 1) throw InvalidParameter("k must be at least 1");
    KmerIndex index(s.alphabet(), k);
    KmerCounts result{index, std::vector<std::uint64_t>(index.size(), 0), s.size()};
    const std::size_t a = index.alphabet_size();
    const std::size_t n = s.size();
    std::size_t code = 0;
    for (int i = 0; i < k - 1; ++i) code = code * a + s.at(i);
    for (std::size_t start = 0; start < n; ++start) {
        code = (code * a + s.at(static_cast<std::ptrdiff_t>(start) + k - 1)) % index.size();
        ++result.counts[code];
    }
    return result;
}

FrequencyVector frequencies(const KmerCounts &counts) {
    std::vector<Rational> values(counts.counts.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = Rational(static_cast<unsigned long>(counts.counts[i]),
                             static_cast<unsigned long>(counts.length));
        values[i].canonicalize();
    }
    return FrequencyVector(counts.index, std::move(values));
}

LinearForm lift_to_k(const Word &w, const KmerIndex &index, LiftDirection direction) {
    const auto k = static_cast<std::size_t>(index.k());
    if (w.empty() || w.size() > k)
        throw InvalidParameter("lifted word length " + std::to_string(w.size()) +
                               " must be in [1, " + std::to_string(k) + "]");
    const std::size_t a = index.alphabet_size();
    std::size_t w_code = 0;
    for (Symbol s : w) {
        if (s >= a) throw InvalidParameter("symbol code outside alphabet");
        w_code = w_code * a + s;
    }
    std::size_t free = 1;
    for (std::size_t i = w.size(); i < k; ++i) free *= a;

    LinearForm form(index);
    for (std::size_t tail = 0; tail < free; ++tail) {
        std::size_t basis = direction == LiftDirection::prefix ? w_code * free + tail
                                                                : tail * (index.size() / free) + w_code;
        form.add(basis, 1);
    }
    return form;
}

std::vector<Word> hamming_ball_1(const Word &u, std::size_t alphabet_size) {
    std::vector<Word> ball;
    ball.reserve(u.size() * (alphabet_size - 1));
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t a = 0; a < alphabet_size; ++a) {
            if (a == u[i]) continue;
            Word v = u;
            v[i] = static_cast<Symbol>(a);
            ball.push_back(std::move(v));
        }
    }
    return ball;
}

std::vector<std::size_t> symbol_counts(const Word &u, std::size_t alphabet_size) {
    std::vector<std::size_t> counts(alphabet_size, 0);
    for (Symbol s : u) {
        if (s >= alphabet_size) throw InvalidParameter("symbol code outside alphabet");
        ++counts[s];
    }
    return counts;
}

namespace {

template <typename T, typename Equal>
bool shift_invariant_impl(const KmerIndex &index, const std::vector<T> &x, Equal equal) {
    if (x.size() != index.size()) throw InvalidParameter("vector length does not match index");
    const std::size_t a = index.alphabet_size();
    const std::size_t inner = index.size() / a; // |A|^{k-1}
    for (std::size_t w = 0; w < inner; ++w) {
        T left = 0;
        T right = 0;
        for (std::size_t c = 0; c < a; ++c) {
            left += x[c * inner + w];  // x^{cw}
            right += x[w * a + c];     // x^{wc}
        }
        if (!equal(left, right)) return false;
    }
    return true;
}

} // namespace

bool is_shift_invariant(const KmerIndex &index, const std::vector<Rational> &x) {
    return shift_invariant_impl(index, x, [](const Rational &l, const Rational &r) { return l == r; });
}

bool is_shift_invariant(const KmerIndex &index, const std::vector<double> &x, double tolerance) {
    return shift_invariant_impl(index, x, [tolerance](double l, double r) {
        return std::abs(l - r) <= tolerance;
    });
}

} // namespace dupsys
