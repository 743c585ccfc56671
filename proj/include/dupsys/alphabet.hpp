#ifndef DUPSYS_ALPHABET_HPP
#define DUPSYS_ALPHABET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dupsys {

// Position of a symbol within its alphabet.
using Symbol = std::uint8_t;

// A finite string of symbol codes. Analysis code works on codes only; the
// Alphabet translates to and from printable characters.
using Word = std::vector<Symbol>;

class Alphabet {
  public:
    // Symbols in order; order defines the lexicographic k-mer order.
    explicit Alphabet(std::string_view symbols);

    static Alphabet binary() { return Alphabet("01"); }
    static Alphabet dna() { return Alphabet("ACGT"); }

    std::size_t size() const { return symbols_.size(); }
    char symbol(Symbol code) const { return symbols_[code]; }
    const std::string &symbols() const { return symbols_; }

    bool contains(char c) const;
    Symbol code(char c) const;

    Word encode(std::string_view text) const;
    std::string decode(const Word &word) const;

    bool operator==(const Alphabet &other) const = default;

  private:
    std::string symbols_;
    std::vector<int> lookup_;
};

} // namespace dupsys

#endif
