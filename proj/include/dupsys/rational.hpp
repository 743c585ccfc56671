#ifndef DUPSYS_RATIONAL_HPP
#define DUPSYS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dupsys {

using Rational = mpq_class;

// Parses "3/4", "-2", "0.25" or "1e-3" into an exact rational. Decimal input
// is converted digit by digit, so "0.1" is exactly 1/10.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when q = 1).
std::string to_fraction_string(const Rational &value);

// Correctly rounded when numerator and denominator fit in 53 bits (always
// the case for frequencies); otherwise GMP's truncating conversion.
inline double to_double(const Rational &value) {
    const auto &num = value.get_num();
    const auto &den = value.get_den();
    if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53)
        return num.get_d() / den.get_d();
    return value.get_d();
}
inline double to_double(double value) { return value; }

template <typename T> T convert_scalar(const Rational &value);

template <> inline Rational convert_scalar<Rational>(const Rational &value) {
    return value;
}

template <> inline double convert_scalar<double>(const Rational &value) {
    return value.get_d();
}

} // namespace dupsys

#endif
