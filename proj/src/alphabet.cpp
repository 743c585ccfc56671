#include "dupsys/alphabet.hpp"

#include "dupsys/errors.hpp"

namespace dupsys {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols), lookup_(256, -1) {
    if (symbols_.size() < 2) throw InvalidParameter("alphabet needs at least two symbols");
    if (symbols_.size() > 255) throw InvalidParameter("alphabet too large");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto c = static_cast<unsigned char>(symbols_[i]);
        if (lookup_[c] != -1)
            throw InvalidParameter(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        lookup_[c] = static_cast<int>(i);
    }
}

bool Alphabet::contains(char c) const { return lookup_[static_cast<unsigned char>(c)] != -1; }

Symbol Alphabet::code(char c) const {
    int v = lookup_[static_cast<unsigned char>(c)];
    if (v < 0)
        throw InvalidParameter(std::string("symbol '") + c + "' is not in alphabet {" + symbols_ + "}");
    return static_cast<Symbol>(v);
}

Word Alphabet::encode(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) w.push_back(code(c));
    return w;
}

std::string Alphabet::decode(const Word &word) const {
    std::string out;
    out.reserve(word.size());
    for (Symbol s : word) out.push_back(symbols_.at(s));
    return out;
}

} // namespace dupsys
