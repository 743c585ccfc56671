#include "dupsys/entropy.hpp"

#include "dupsys/errors.hpp"
#include "dupsys/tds_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dupsys {

namespace {

constexpr double kTolerance = 1e-12;

std::vector<double> to_doubles(const std::vector<Rational> &xi) {
    std::vector<double> out(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) out[i] = to_double(xi[i]);
    return out;
}

} // namespace

SemiconstrainedMeasure::SemiconstrainedMeasure(KmerIndex index, const std::vector<Rational> &xi)
    : index_(std::move(index)), xi_(to_doubles(xi)) {
    if (xi.size() != index_.size()) throw InvalidMeasure("measure has the wrong dimension");
    Rational total = 0;
    for (const auto &v : xi) {
        if (v < 0) throw InvalidMeasure("measure has a negative entry");
        total += v;
    }
    if (total != 1) throw InvalidMeasure("measure sums to " + to_fraction_string(total) + ", not 1");
    if (!is_shift_invariant(index_, xi)) throw InvalidMeasure("measure is not shift-invariant");
}

SemiconstrainedMeasure::SemiconstrainedMeasure(KmerIndex index, std::vector<double> xi)
    : index_(std::move(index)), xi_(std::move(xi)) {
    if (xi_.size() != index_.size()) throw InvalidMeasure("measure has the wrong dimension");
    double total = 0.0;
    for (double v : xi_) {
        if (!(v >= 0.0)) throw InvalidMeasure("measure has a negative or NaN entry");
        total += v;
    }
    if (std::abs(total - 1.0) > kTolerance) throw InvalidMeasure("measure does not sum to 1");
    if (!is_shift_invariant(index_, xi_, kTolerance)) throw InvalidMeasure("measure is not shift-invariant");
}

SemiconstrainedMeasure marginalize(const SemiconstrainedMeasure &xi) {
    const int k = xi.index().k();
    if (k < 2) throw InvalidParameter("marginalisation needs k >= 2");
    KmerIndex shorter(xi.index().alphabet(), k - 1);
    const std::size_t a = xi.index().alphabet_size();
    std::vector<double> out(shorter.size(), 0.0);
    for (std::size_t i = 0; i < xi.values().size(); ++i) out[i / a] += xi.values()[i];
    return SemiconstrainedMeasure(shorter, std::move(out));
}

double cap_singleton(const SemiconstrainedMeasure &xi) {
    const std::size_t a = xi.index().alphabet_size();
    const double log_a = std::log(static_cast<double>(a));
    std::vector<double> bar(xi.values().size() / a, 0.0);
    if (xi.index().k() == 1) {
        bar.assign(1, 1.0);
    } else {
        for (std::size_t i = 0; i < xi.values().size(); ++i) bar[i / a] += xi.values()[i];
    }
    double h = 0.0;
    for (std::size_t i = 0; i < xi.values().size(); ++i) {
        double p = xi.values()[i];
        double m = bar[i / a];
        if (p <= 0.0 || m <= 0.0) continue;
        h -= p * std::log(p / m);
    }
    return std::clamp(h / log_a, 0.0, 1.0);
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

std::optional<double> EntropyReport::cap(int k) const {
    for (const auto &e : entries)
        if (e.k == k) return e.cap;
    return std::nullopt;
}

EntropyReport bound_chain(const MutationModel &model, const Alphabet &alphabet, int k_max) {
    if (model.kind() != ModelKind::tds) throw InvalidParameter("entropy bounds are available for TDS models only");
    const int k_min = std::max(1, model.max_length_bound());
    if (k_max < k_min)
        throw InvalidParameter("k_max = " + std::to_string(k_max) + " is below M = " + std::to_string(k_min));
    EntropyReport report{model.describe(), {}, true};
    std::optional<double> previous;
    for (int k = k_min; k <= k_max; ++k) {
        KmerIndex index(alphabet, k);
        LimitSet limit = null_space_limit(build_rate_matrix(model, index));
        EntropyEntry entry{k, limit.nullity, std::nullopt};
        if (limit.stationary) {
            entry.cap = cap_singleton(SemiconstrainedMeasure(index, *limit.stationary));
            if (previous && *entry.cap > *previous + kTolerance) report.monotone = false;
            previous = entry.cap;
        }
        report.entries.push_back(entry);
    }
    return report;
}

std::optional<double> bound_surface(const Rational &alpha, const Rational &beta, int k) {
    if (alpha < 0 || beta < 0 || alpha + beta > 1) throw InvalidParameter("need alpha, beta >= 0 and alpha + beta <= 1");
    if (alpha + beta == 0) throw Unsupported("pure substitution (q_0 = 1) has no limit-based bound");
    if (k < 3) throw InvalidParameter("the two-length surface needs k >= 3");
    MutationModel model = MutationModel::tds({1 - alpha - beta, alpha, beta});
    KmerIndex index(Alphabet::binary(), k);
    LimitSet limit = null_space_limit(build_rate_matrix(model, index));
    if (!limit.stationary) return std::nullopt;
    return cap_singleton(SemiconstrainedMeasure(index, *limit.stationary));
}

std::vector<SurfacePoint> surface_grid(int resolution, int k) {
    if (resolution < 1) throw InvalidParameter("grid resolution must be positive");
    std::vector<SurfacePoint> grid;
    for (int i = 0; i <= resolution; ++i) {
        for (int j = 0; i + j <= resolution; ++j) {
            if (i == 0 && j == 0) continue;
            Rational alpha(i, resolution), beta(j, resolution);
            alpha.canonicalize();
            beta.canonicalize();
            grid.push_back({alpha, beta, bound_surface(alpha, beta, k)});
        }
    }
    return grid;
}

std::vector<CurvePoint> substitution_curve(int resolution, const std::vector<int> &ks) {
    if (resolution < 2) throw InvalidParameter("curve resolution must be at least 2");
    if (ks.empty()) throw InvalidParameter("no k values requested");
    const int k_max = *std::max_element(ks.begin(), ks.end());
    std::vector<CurvePoint> curve;
    for (int i = 1; i < resolution; ++i) {
        Rational alpha(i, resolution);
        alpha.canonicalize();
        EntropyReport report = bound_chain(MutationModel::tds({alpha, 1 - alpha}), Alphabet::binary(), k_max);
        for (int k : ks) curve.push_back({alpha, k, report.cap(k)});
    }
    return curve;
}

double id_binary_len1_entropy(std::uint64_t t0, std::uint64_t t1) {
    if (t0 < 1 || t1 < 1) throw InvalidParameter("symbol counts t0 and t1 must be positive");
    // n H_n - a H_a - b H_b, accumulated term by term in long double.
    auto harmonic = [](std::uint64_t n) {
        long double h = 0.0L;
        for (std::uint64_t i = n; i >= 1; --i) h += 1.0L / static_cast<long double>(i);
        return h;
    };
    const std::uint64_t n = t0 + t1;
    long double value = static_cast<long double>(n) * harmonic(n) - static_cast<long double>(t0) * harmonic(t0) -
                        static_cast<long double>(t1) * harmonic(t1);
    return static_cast<double>(value * std::numbers::log2e_v<long double> / static_cast<long double>(n));
}

} // namespace dupsys
