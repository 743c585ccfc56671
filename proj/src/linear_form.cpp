#include "dupsys/linear_form.hpp"

#include "dupsys/errors.hpp"

#include <sstream>

namespace dupsys {

Rational LinearForm::coefficient(std::size_t basis) const {
    auto it = coefficients_.find(basis);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

void LinearForm::add(std::size_t basis, const Rational &coefficient) {
    if (basis >= index_.size()) throw InvalidParameter("basis element outside the k-mer index");
    if (coefficient == 0) return;
    auto [it, inserted] = coefficients_.try_emplace(basis, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) coefficients_.erase(it);
    }
}

LinearForm &LinearForm::operator+=(const LinearForm &other) {
    if (!(other.index_ == index_)) throw InvalidParameter("linear forms over different indexes");
    for (const auto &[basis, c] : other.coefficients_) add(basis, c);
    return *this;
}

LinearForm &LinearForm::operator-=(const LinearForm &other) {
    if (!(other.index_ == index_)) throw InvalidParameter("linear forms over different indexes");
    for (const auto &[basis, c] : other.coefficients_) add(basis, -c);
    return *this;
}

LinearForm &LinearForm::operator*=(const Rational &scale) {
    if (scale == 0) {
        coefficients_.clear();
        return *this;
    }
    for (auto &[basis, c] : coefficients_) c *= scale;
    return *this;
}

Rational LinearForm::coefficient_sum() const {
    Rational sum = 0;
    for (const auto &[basis, c] : coefficients_) sum += c;
    return sum;
}

Rational LinearForm::evaluate(std::span<const Rational> x) const {
    if (x.size() != index_.size()) throw InvalidParameter("vector length does not match index");
    Rational sum = 0;
    for (const auto &[basis, c] : coefficients_)
        if (x[basis] != 0) sum += c * x[basis];
    return sum;
}

double LinearForm::evaluate(std::span<const double> x) const {
    if (x.size() != index_.size()) throw InvalidParameter("vector length does not match index");
    double sum = 0.0;
    for (const auto &[basis, c] : coefficients_) sum += to_double(c) * x[basis];
    return sum;
}

std::string LinearForm::to_string() const {
    if (coefficients_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &[basis, c] : coefficients_) {
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (magnitude != 1) out << to_fraction_string(magnitude);
        out << "x^{" << index_.label(basis) << "}";
        first = false;
    }
    return out.str();
}

bool LinearForm::operator==(const LinearForm &other) const {
    return index_ == other.index_ && coefficients_ == other.coefficients_;
}

} // namespace dupsys
