#include "dupsys/rational.hpp"

#include "dupsys/errors.hpp"

#include <cctype>
#include <string>

namespace dupsys {

namespace {

std::string trim(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return std::string(text.substr(b, e - b));
}

bool all_digits(const std::string &s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_decimal(const std::string &text) {
    std::string mantissa = text;
    long exponent = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
        std::string exp_part = mantissa.substr(e + 1);
        mantissa = mantissa.substr(0, e);
        bool neg = !exp_part.empty() && (exp_part[0] == '-' || exp_part[0] == '+');
        std::string digits = neg ? exp_part.substr(1) : exp_part;
        if (!all_digits(digits) || digits.size() > 6)
            throw InvalidParameter("malformed exponent in number '" + text + "'");
        exponent = std::stol(digits);
        if (exp_part[0] == '-') exponent = -exponent;
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        mantissa = mantissa.substr(1);
    }
    std::string int_part = mantissa;
    std::string frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
        throw InvalidParameter("malformed number '" + text + "'");

    mpz_class numerator(int_part + frac_part, 10);
    mpz_class ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, frac_part.size());
    Rational value(numerator, ten_power);
    if (exponent != 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
        value = exponent > 0 ? Rational(value * scale) : Rational(value / scale);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view raw) {
    std::string text = trim(raw);
    if (text.empty()) throw InvalidParameter("empty number");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        Rational num = parse_decimal(trim(text.substr(0, slash)));
        Rational den = parse_decimal(trim(text.substr(slash + 1)));
        if (den == 0) throw InvalidParameter("zero denominator in '" + text + "'");
        Rational value = num / den;
        value.canonicalize();
        return value;
    }
    return parse_decimal(text);
}

std::string to_fraction_string(const Rational &value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

} // namespace dupsys
