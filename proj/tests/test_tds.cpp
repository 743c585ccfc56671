#include "dupsys/tds_analysis.hpp"

#include <gtest/gtest.h>

using namespace dupsys;

namespace {

Rational r(long p, long q = 1) {
    Rational v(p, q);
    v.canonicalize();
    return v;
}

LinearForm form(const KmerIndex &index, std::initializer_list<std::pair<const char *, Rational>> terms) {
    LinearForm f(index);
    for (const auto &[w, c] : terms) f += LinearForm(lift_to_k(index.alphabet().encode(w), index)) *= c;
    return f;
}

} // namespace

TEST(PhiMask, Examples) {
    Alphabet dna = Alphabet::dna();
    PhiMask a = phi_mask(dna.encode("ACAACCACCAACAAC"), 3);
    EXPECT_EQ(a.to_string(), "XXX00X0000X0000");
    EXPECT_EQ(a.l_run, 2);
    EXPECT_EQ(a.r_run, 4);
    EXPECT_EQ(phi_mask(dna.encode("ACACAGAG"), 2).to_string(), "XX000X00");
    PhiMask b = phi_mask(dna.encode("AAAA"), 1);
    EXPECT_EQ(b.to_string(), "X000");
    EXPECT_EQ(b.l_run, 3);
    EXPECT_EQ(b.r_run, 3);
    EXPECT_TRUE(b.fully_periodic());
    EXPECT_THROW(phi_mask(dna.encode("ACG"), 3), InvalidParameter);
}

TEST(DeleteBlock, Examples) {
    Alphabet dna = Alphabet::dna();
    EXPECT_EQ(delete_block(dna.encode("ACACAGAG"), 4, 2), dna.encode("ACAGAG"));
    EXPECT_TRUE(delete_block(dna.encode("ACGT"), 1, 4).empty());
    EXPECT_EQ(delete_block(dna.encode("ACGA"), 2, 1), dna.encode("AGA"));
    EXPECT_THROW(delete_block(dna.encode("ACGA"), 4, 2), InvalidParameter);
}

TEST(AuxForms, GExample) {
    KmerIndex index(Alphabet::dna(), 10);
    Word u = index.alphabet().encode("ACAACCACCA");
    AuxForms aux = aux_forms(u, 3, index);
    EXPECT_EQ(aux.g, form(index, {{"ACAACCA", r(2)}}));
}

TEST(AuxForms, EmptyLeftRun) {
    KmerIndex index(Alphabet::dna(), 5);
    // ACGTA: no position repeats the symbol two places back right after X^2.
    AuxForms aux = aux_forms(index.alphabet().encode("ACGTA"), 2, index);
    EXPECT_TRUE(aux.f_left.empty());
}

TEST(DeltaDup, ShortRegimeExample) {
    KmerIndex index(Alphabet::dna(), 4);
    LinearForm d = delta_dup(index.alphabet().encode("ACGA"), 3, index);
    EXPECT_EQ(d, form(index, {{"ACG", r(1)}, {"CGA", r(1)}, {"GAC", r(1)}}));
}

TEST(DeltaDup, LongRegimeExample) {
    KmerIndex index(Alphabet::dna(), 8);
    LinearForm d = delta_dup(index.alphabet().encode("ACGACGAC"), 3, index);
    LinearForm expected = form(index, {{"ACGAC", r(3)},
                                       {"ACGACG", r(1)},
                                       {"ACGACGA", r(1)},
                                       {"GACGAC", r(1)},
                                       {"CGACGAC", r(1)},
                                       {"ACGACGAC", r(-4)}});
    EXPECT_EQ(d, expected);
}

TEST(DeltaDup, TernaryExample) {
    KmerIndex index(Alphabet("123"), 3);
    LinearForm d = delta_dup(index.alphabet().encode("121"), 2, index);
    EXPECT_EQ(d, form(index, {{"121", r(1)}, {"122", r(1)}, {"123", r(1)}, {"211", r(1)}, {"212", r(1)},
                              {"213", r(1)}}));
    EXPECT_THROW(delta_dup(index.alphabet().encode("121"), 3, index), InvalidParameter);
}

TEST(DeltaSub, Examples) {
    KmerIndex ternary(Alphabet("123"), 3);
    LinearForm d = delta_sub(ternary.alphabet().encode("123"), ternary);
    EXPECT_EQ(d, form(ternary, {{"223", r(1, 2)},
                                {"323", r(1, 2)},
                                {"113", r(1, 2)},
                                {"133", r(1, 2)},
                                {"121", r(1, 2)},
                                {"122", r(1, 2)},
                                {"123", r(-3)}}));
    KmerIndex bin(Alphabet::binary(), 1);
    EXPECT_EQ(delta_sub(Word{0}, bin), form(bin, {{"1", r(1)}, {"0", r(-1)}}));
    for (std::size_t i = 0; i < ternary.size(); ++i)
        EXPECT_EQ(delta_sub(ternary.decode(i), ternary).coefficient_sum(), 0);
}

TEST(RateMatrix, BinaryExample) {
    KmerIndex index(Alphabet::binary(), 2);
    for (int num = 0; num <= 10; ++num) {
        Rational a = r(num, 10);
        if (a == 1) continue;
        RateMatrix rate = build_rate_matrix(MutationModel::tds({a, 1 - a}), index);
        Rational expected[4][4] = {{-2 * a, 1, a, 0}, {a, -(1 + a), 0, a}, {a, 0, -(1 + a), a}, {0, a, 1, -2 * a}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) EXPECT_EQ(rate.combined(i, j), expected[i][j]) << i << "," << j;
        EXPECT_TRUE(column_sums_zero(rate.combined));
        EXPECT_TRUE(metzler_sign_pattern(rate.combined));
    }
}

TEST(RateMatrix, ComponentsBinary) {
    KmerIndex index(Alphabet::binary(), 2);
    RateMatrix rate = build_rate_matrix(MutationModel::tds({r(1, 2), r(1, 2)}), index);
    ASSERT_EQ(rate.components.size(), 2u);
    Rational a0[4][4] = {{-2, 1, 1, 0}, {1, -2, 0, 1}, {1, 0, -2, 1}, {0, 1, 1, -2}};
    Rational a1[4][4] = {{0, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 1, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            EXPECT_EQ(rate.components[0](i, j), a0[i][j]);
            EXPECT_EQ(rate.components[1](i, j), a1[i][j]);
        }
}

TEST(RateMatrix, RequiresKAtLeastM) {
    KmerIndex index(Alphabet::dna(), 1);
    EXPECT_THROW(build_rate_matrix(MutationModel::tds({0, 1}), index), InvalidParameter);
    EXPECT_THROW(build_rate_matrix(MutationModel::id({0, 1}), KmerIndex(Alphabet::dna(), 2)), InvalidParameter);
}

TEST(NullSpaceLimit, ClosedForm) {
    KmerIndex index(Alphabet::binary(), 2);
    for (int num = 1; num <= 9; ++num) {
        Rational a = r(num, 10);
        LimitSet limit = null_space_limit(build_rate_matrix(MutationModel::tds({a, 1 - a}), index));
        ASSERT_EQ(limit.nullity, 1u);
        ASSERT_TRUE(limit.stationary);
        Rational d = 2 * (1 + 3 * a);
        std::vector<Rational> expected = {(a + 1) / d, 2 * a / d, 2 * a / d, (a + 1) / d};
        EXPECT_EQ(*limit.stationary, expected);
        EXPECT_TRUE(is_shift_invariant(index, *limit.stationary));
    }
    LimitSet quarter = null_space_limit(build_rate_matrix(MutationModel::tds({r(1, 4), r(3, 4)}), index));
    std::vector<Rational> eq8 = {r(5, 14), r(1, 7), r(1, 7), r(5, 14)};
    EXPECT_EQ(*quarter.stationary, eq8);
}

TEST(NullSpaceLimit, DegenerateAlphaZero) {
    KmerIndex index(Alphabet::binary(), 2);
    LimitSet limit = null_space_limit(build_rate_matrix(MutationModel::tds({0, 1}), index));
    EXPECT_EQ(limit.nullity, 2u);
    EXPECT_FALSE(limit.stationary);
    std::vector<std::vector<Rational>> basis = {{1, 0, 0, 0}, {0, 0, 0, 1}};
    EXPECT_EQ(limit.basis, basis);
}

TEST(NullSpaceLimit, NumericPathAgrees) {
    KmerIndex index(Alphabet::binary(), 2);
    RateMatrix rate = build_rate_matrix(MutationModel::tds({r(1, 4), r(3, 4)}), index);
    NumericLimitSet limit = null_space_limit_numeric(rate.to_double());
    ASSERT_TRUE(limit.stationary);
    EXPECT_NEAR((*limit.stationary)[0], 5.0 / 14.0, 1e-12);
    EXPECT_NEAR((*limit.stationary)[1], 1.0 / 7.0, 1e-12);
}

TEST(RateMatrix, StructureAcrossAlphabets) {
    for (const char *symbols : {"01", "012", "ACGT"}) {
        Alphabet alphabet(symbols);
        for (int k = 3; k <= 4; ++k) {
            KmerIndex index(alphabet, k);
            RateMatrix rate = build_rate_matrix(MutationModel::tds({r(1, 5), r(2, 5), r(2, 5)}), index);
            EXPECT_TRUE(column_sums_zero(rate.combined));
            for (const auto &c : rate.components) EXPECT_TRUE(column_sums_zero(c));
            EXPECT_TRUE(metzler_sign_pattern(rate.combined));
        }
    }
}
