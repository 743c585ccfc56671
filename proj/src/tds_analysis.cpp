#include "dupsys/tds_analysis.hpp"

#include "dupsys/errors.hpp"

namespace dupsys {

std::string PhiMask::to_string() const {
    std::string out;
    out.reserve(zero.size());
    for (bool z : zero) out.push_back(z ? '0' : 'X');
    return out;
}

bool PhiMask::fully_periodic() const {
    for (std::size_t i = static_cast<std::size_t>(m); i < zero.size(); ++i)
        if (!zero[i]) return false;
    return true;
}

PhiMask phi_mask(const Word &u, int m) {
    const auto n = static_cast<int>(u.size());
    if (m < 1 || m >= n)
        throw InvalidParameter("phi mask needs 1 <= m < |u| (m = " + std::to_string(m) + ", |u| = " +
                               std::to_string(n) + ")");
    PhiMask mask{u, m, std::vector<bool>(u.size(), false), 0, 0};
    for (int i = m; i < n; ++i) mask.zero[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] == u[static_cast<std::size_t>(i - m)];
    for (int i = m; i < n && mask.zero[static_cast<std::size_t>(i)]; ++i) ++mask.l_run;
    for (int i = n - 1; i >= m && mask.zero[static_cast<std::size_t>(i)]; --i) ++mask.r_run;
    return mask;
}

Word delete_block(const Word &u, int z, int m) {
    const auto n = static_cast<int>(u.size());
    if (m < 1 || z < 1 || z > n - m + 1)
        throw InvalidParameter("block deletion needs 1 <= z <= |u| - m + 1");
    Word out(u.begin(), u.begin() + (z - 1));
    out.insert(out.end(), u.begin() + (z - 1 + m), u.end());
    return out;
}

namespace {

void check_dup_arguments(const Word &u, int length, const KmerIndex &index) {
    if (u.size() != static_cast<std::size_t>(index.k()))
        throw InvalidParameter("|u| must equal the index k-mer length");
    if (length < 1 || length >= index.k())
        throw InvalidParameter("duplication length must satisfy 1 <= l < k (l = " + std::to_string(length) +
                               ", k = " + std::to_string(index.k()) + ")");
}

} // namespace

AuxForms aux_forms(const Word &u, int length, const KmerIndex &index, const DeltaOptions &options) {
    check_dup_arguments(u, length, index);
    const int k = index.k();
    const int l = length;
    PhiMask mask = phi_mask(u, l);
    auto lift = [&](const Word &w) { return lift_to_k(w, index, options.lifting); };
    auto k_size = static_cast<std::size_t>(k);

    AuxForms forms{LinearForm(index), LinearForm(index), LinearForm(index), LinearForm(index)};

    for (int z = 1; z <= k - l + 1; ++z) {
        bool run = true;
        for (int i = z; i < z + l && run; ++i) run = mask.zero[static_cast<std::size_t>(i - 1)];
        if (run) forms.g += lift(delete_block(u, z, l));
    }
    for (int i = 1; i <= std::min(mask.l_run, l - 1); ++i)
        forms.f_left += lift(substring(u, static_cast<std::size_t>(i + 1), k_size - static_cast<std::size_t>(i)));
    for (int i = 1; i <= std::min(mask.r_run, l - 1); ++i)
        forms.f_right += lift(substring(u, 1, k_size - static_cast<std::size_t>(i)));
    if (mask.fully_periodic() && k <= 2 * l - 2) {
        for (int b = k - l + 1; b <= l - 1; ++b) {
            Word w = concat(substring(u, static_cast<std::size_t>(b + 1), static_cast<std::size_t>(l - b)),
                            substring(u, 1, static_cast<std::size_t>(b)));
            forms.m += lift(w);
        }
    }
    return forms;
}

LinearForm delta_dup(const Word &u, int length, const KmerIndex &index, const DeltaOptions &options) {
    AuxForms aux = aux_forms(u, length, index, options);
    const int k = index.k();
    LinearForm delta = aux.f_left;
    if (!options.inject_fault) delta += aux.f_right;
    delta += k < 2 * length ? aux.m : aux.g;
    delta.add(u, Rational(-(k - 1 - length)));
    return delta;
}

LinearForm delta_sub(const Word &u, const KmerIndex &index) {
    if (u.size() != static_cast<std::size_t>(index.k()))
        throw InvalidParameter("|u| must equal the index k-mer length");
    LinearForm delta(index);
    Rational share(1, static_cast<unsigned long>(index.alphabet_size() - 1));
    for (const Word &v : hamming_ball_1(u, index.alphabet_size())) delta.add(v, share);
    delta.add(u, Rational(-index.k()));
    return delta;
}

std::vector<LinearForm> delta_forms(int length, const KmerIndex &index, const DeltaOptions &options) {
    std::vector<LinearForm> forms;
    forms.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        Word u = index.decode(i);
        forms.push_back(length == 0 ? delta_sub(u, index) : delta_dup(u, length, index, options));
    }
    return forms;
}

Matrix<double> RateMatrix::to_double() const {
    Matrix<double> out(combined.rows(), combined.cols());
    for (std::size_t r = 0; r < combined.rows(); ++r)
        for (std::size_t c = 0; c < combined.cols(); ++c) out(r, c) = dupsys::to_double(combined(r, c));
    return out;
}

RateMatrix build_rate_matrix(const MutationModel &model, const KmerIndex &index, const DeltaOptions &options) {
    if (model.kind() != ModelKind::tds) throw InvalidParameter("rate matrices are defined for TDS models only");
    const int bound = model.max_length_bound();
    if (index.k() < bound)
        throw InvalidParameter("the rate matrix needs k >= M (k = " + std::to_string(index.k()) +
                               ", M = " + std::to_string(bound) + ")");
    const std::size_t n = index.size();
    RateMatrix rate{index, model.q(), {}, Matrix<Rational>(n, n)};
    for (int l = 0; l < bound; ++l) {
        Matrix<Rational> component(n, n);
        std::vector<LinearForm> forms = delta_forms(l, index, options);
        for (std::size_t row = 0; row < n; ++row) {
            for (const auto &[col, c] : forms[row].coefficients()) component(row, col) += c;
            component(row, row) -= l;
        }
        const Rational &weight = model.q()[static_cast<std::size_t>(l)];
        if (weight != 0)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (component(r, c) != 0) rate.combined(r, c) += weight * component(r, c);
        rate.components.push_back(std::move(component));
    }
    return rate;
}

bool column_sums_zero(const Matrix<Rational> &m) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Rational sum = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) sum += m(r, c);
        if (sum != 0) return false;
    }
    return true;
}

bool metzler_sign_pattern(const Matrix<Rational> &m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r == c && m(r, c) > 0) return false;
            if (r != c && m(r, c) < 0) return false;
        }
    return true;
}

LimitSet null_space_limit(const RateMatrix &a) {
    if (!column_sums_zero(a.combined)) throw InvalidParameter("rate matrix columns must sum to zero");
    LimitSet limit;
    limit.basis = null_space(a.combined, ExactZero{});
    limit.nullity = limit.basis.size();
    if (limit.nullity == 0) throw InternalError("rate matrix with zero column sums has an empty null space");
    if (limit.nullity == 1) {
        std::vector<Rational> v = limit.basis.front();
        Rational total = 0;
        for (const auto &e : v) total += e;
        if (total == 0) throw InternalError("null vector sums to zero; cannot normalise");
        for (auto &e : v) {
            e /= total;
            e.canonicalize();
            if (e < 0) throw InternalError("stationary vector has a negative entry");
        }
        limit.stationary = std::move(v);
    }
    return limit;
}

NumericLimitSet null_space_limit_numeric(const Matrix<double> &a, double singular_threshold) {
    NumericLimitSet limit;
    limit.basis = null_space(a, ThresholdZero{singular_threshold});
    limit.nullity = limit.basis.size();
    if (limit.nullity == 0) throw InternalError("numerically empty null space");
    if (limit.nullity == 1) {
        std::vector<double> v = limit.basis.front();
        double total = 0.0;
        for (double e : v) total += e;
        if (std::abs(total) <= singular_threshold) throw InternalError("null vector sums to zero");
        for (double &e : v) {
            e /= total;
            if (e < 0.0 && e > -singular_threshold) e = 0.0;
        }
        limit.stationary = std::move(v);
    }
    return limit;
}

} // namespace dupsys
