#include "dupsys/errors.hpp"
#include "dupsys/rational.hpp"
#include "dupsys/strings.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dupsys;

TEST(Rational, Parsing) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
    EXPECT_EQ(parse_rational(" 0.25 "), Rational(1, 4));
    EXPECT_THROW(parse_rational("1/0"), InvalidParameter);
    EXPECT_THROW(parse_rational("abc"), InvalidParameter);
    EXPECT_EQ(to_fraction_string(Rational(10, 4)), "5/2");
    EXPECT_EQ(to_fraction_string(Rational(3)), "3");
}

TEST(Alphabet, Validation) {
    EXPECT_THROW(Alphabet("0"), InvalidParameter);
    EXPECT_THROW(Alphabet("AA"), InvalidParameter);
    Alphabet dna = Alphabet::dna();
    EXPECT_EQ(dna.decode(dna.encode("GATTACA")), "GATTACA");
    EXPECT_THROW(dna.encode("ACX"), InvalidParameter);
}

TEST(KmerIndex, RoundTripExhaustive) {
    for (const char *symbols : {"01", "012", "ACGT"}) {
        for (int k = 1; k <= 6; ++k) {
            KmerIndex index(Alphabet(symbols), k);
            for (std::size_t i = 0; i < index.size(); ++i) ASSERT_EQ(index.encode(index.decode(i)), i);
        }
    }
    KmerIndex index(Alphabet::binary(), 2);
    EXPECT_EQ(index.label(0), "00");
    EXPECT_EQ(index.label(1), "01");
    EXPECT_EQ(index.label(2), "10");
}

TEST(CountKmers, Examples) {
    CircularString s(Alphabet::binary(), "0100010");
    KmerCounts c = count_kmers(s, 2);
    EXPECT_EQ(c.counts, (std::vector<std::uint64_t>{3, 2, 2, 0}));
    FrequencyVector f = frequencies(c);
    EXPECT_EQ(f.values(), (std::vector<Rational>{Rational(3, 7), Rational(2, 7), Rational(2, 7), 0}));

    KmerCounts a = count_kmers(CircularString(Alphabet::dna(), "AAAA"), 3);
    EXPECT_EQ(a.counts[0], 4u);

    FrequencyVector acgac = kmer_frequencies(CircularString(Alphabet::dna(), "ACGAC"), 2);
    EXPECT_EQ(acgac.frequency(Alphabet::dna().encode("AC")), Rational(2, 5));
    EXPECT_THROW(count_kmers(s, 0), InvalidParameter);
}

TEST(LiftToK, Examples) {
    KmerIndex ternary(Alphabet("123"), 3);
    LinearForm f = lift_to_k(ternary.alphabet().encode("12"), ternary);
    EXPECT_EQ(f.to_string(), "x^{121} + x^{122} + x^{123}");
    LinearForm full = lift_to_k(ternary.alphabet().encode("231"), ternary);
    EXPECT_EQ(full.coefficients().size(), 1u);
    KmerIndex ac(Alphabet("AC"), 2);
    EXPECT_EQ(lift_to_k(Word{0}, ac).to_string(), "x^{AA} + x^{AC}");
    EXPECT_THROW(lift_to_k(Word{0, 0, 0}, ac), InvalidParameter);
}

TEST(HammingBall, Examples) {
    Alphabet dna = Alphabet::dna();
    std::vector<Word> ball = hamming_ball_1(dna.encode("AC"), 4);
    std::vector<std::string> got;
    for (const auto &w : ball) got.push_back(dna.decode(w));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<std::string>{"AA", "AG", "AT", "CC", "GC", "TC"}));
    EXPECT_EQ(hamming_ball_1(Word{0}, 2), (std::vector<Word>{{1}}));
    EXPECT_EQ(hamming_ball_1(Word{0, 1}, 2).size(), 2u);
}

TEST(SymbolCounts, Examples) {
    Alphabet dna = Alphabet::dna();
    EXPECT_EQ(symbol_counts(dna.encode("AGCGTATGCG"), 4), (std::vector<std::size_t>{2, 2, 4, 2}));
    EXPECT_EQ(symbol_counts(Word{}, 4), (std::vector<std::size_t>{0, 0, 0, 0}));
    EXPECT_EQ(symbol_counts(dna.encode("AAA"), 4), (std::vector<std::size_t>{3, 0, 0, 0}));
}

// Random circular strings: counts sum to |s|, frequencies are shift-invariant,
// and lifted short words reproduce direct counts.
TEST(CountKmers, PropertiesOnRandomStrings) {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 60; ++trial) {
        Alphabet alphabet(std::string("ACGT").substr(0, 2 + trial % 3));
        std::size_t n = 8 + gen() % 30;
        Word data(n);
        for (auto &c : data) c = static_cast<Symbol>(gen() % alphabet.size());
        CircularString s(alphabet, data);
        for (int k = 1; k <= 4; ++k) {
            KmerCounts c = count_kmers(s, k);
            std::uint64_t total = 0;
            for (auto v : c.counts) total += v;
            ASSERT_EQ(total, n);
            FrequencyVector x = frequencies(c);
            ASSERT_TRUE(is_shift_invariant(x.index(), x.values()));
            for (int j = 1; j <= k; ++j) {
                FrequencyVector short_x = kmer_frequencies(s, j);
                for (std::size_t w = 0; w < short_x.index().size(); ++w) {
                    Word word = short_x.index().decode(w);
                    ASSERT_EQ(lift_to_k(word, x.index()).evaluate(x.values()), short_x[w]);
                    ASSERT_EQ(lift_to_k(word, x.index(), LiftDirection::suffix).evaluate(x.values()), short_x[w]);
                }
            }
        }
    }
}
