#ifndef DUPSYS_TEST_SUPPORT_HPP
#define DUPSYS_TEST_SUPPORT_HPP

#include "dupsys/strings.hpp"

#include <random>
#include <string>

namespace dupsys::testing {

inline Rational frac(long p, long q = 1) {
    Rational v(p, q);
    v.canonicalize();
    return v;
}

inline Alphabet alphabet_of_size(std::size_t size) {
    return Alphabet(std::string("ACGT").substr(0, size));
}

inline CircularString random_string(std::mt19937_64 &gen, const Alphabet &alphabet, std::size_t length) {
    Word data(length);
    for (auto &c : data) c = static_cast<Symbol>(gen() % alphabet.size());
    return CircularString(alphabet, data);
}

} // namespace dupsys::testing

#endif
