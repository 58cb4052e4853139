#include "glncomb/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "glncomb/families.hpp"
#include "glncomb/laurent.hpp"
#include "glncomb/weyl.hpp"

namespace glncomb {
namespace {

LaurentPoly mono(int n, std::vector<int> exps, long c = 1) {
    return LaurentPoly::monomial(n, exps, Int(c));
}

TEST(DemazureChar, SingleBoxAfterOneOperator) {
    MultFamily d = parse_mult_family("2:1", 2);
    LaurentPoly chr = demazure_char(d, Word{2, {1}});
    EXPECT_EQ(chr, mono(2, {1, 0}) + mono(2, {0, 1}));
    EXPECT_EQ(demazure_char(d), chr);
}

TEST(DemazureChar, PrefixMembersMultiplyFundamentalWeights) {
    MultFamily d = parse_mult_family("1:1,12:1", 2);
    EXPECT_EQ(demazure_char(d, Word{2, {}}), mono(2, {2, 1}));
    EXPECT_EQ(demazure_char(d), mono(2, {2, 1}));
}

TEST(DemazureChar, InversionFamilyOf24153) {
    MultFamily d = inversion_family(parse_permutation("2,4,1,5,3"));
    LaurentPoly expected = mono(5, {2, 2, 0, 0, 0}) + mono(5, {2, 1, 1, 0, 0}) +
                           mono(5, {2, 1, 0, 1, 0}) + mono(5, {1, 2, 1, 0, 0}) +
                           mono(5, {1, 2, 0, 1, 0});
    EXPECT_EQ(demazure_char(d, Word{5, {1, 3, 2}}), expected);
    EXPECT_EQ(demazure_char(d), expected);
}

TEST(DemazureChar, RejectsBadInput) {
    MultFamily d = parse_mult_family("2:1", 2);
    EXPECT_THROW(demazure_char(d, Word{2, {1, 1}}), std::invalid_argument);
    try {
        demazure_char(parse_mult_family("13:1", 3), Word{3, {1}});
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("not a chamber set"), std::string::npos);
    }
    MultFamily bad = d;
    bad.mult = {-1};
    EXPECT_THROW(demazure_char(bad, Word{2, {1}}), std::invalid_argument);
    bad.mult = {1, 1};
    EXPECT_THROW(demazure_char(bad, Word{2, {1}}), std::invalid_argument);
}

TEST(DemazureChar, AnyEmbeddingWordGivesTheSameCharacter) {
    MultFamily d = parse_mult_family("23:1", 3);
    LaurentPoly a = demazure_char(d, Word{3, {1, 2, 1}});
    LaurentPoly b = demazure_char(d, Word{3, {2, 1, 2}});
    EXPECT_EQ(a, b);

    // Across all reduced words of the longest element of S_4 that contain the
    // members among their chamber sets.
    MultFamily inv = inversion_family(parse_permutation("3,1,4,2"));
    std::vector<LaurentPoly> values;
    for (const Word& w : reduced_words(longest(4))) {
        SubsetFamily chambers = chamber_family(w);
        bool usable = true;
        for (const Subset& c : inv.members) {
            if (as_prefix_set(c)) continue;
            if (std::find(chambers.members.begin(), chambers.members.end(), c) ==
                chambers.members.end()) {
                usable = false;
                break;
            }
        }
        if (usable) values.push_back(demazure_char(inv, w));
    }
    ASSERT_GE(values.size(), 2u);
    for (const LaurentPoly& v : values) EXPECT_EQ(v, values.front());
}

TEST(BottSamelsonChar, SmallWords) {
    EXPECT_EQ(bott_samelson_char(Word{2, {1}}, {1}), mono(2, {1, 0}) + mono(2, {0, 1}));
    // A repeated letter with multiplicity zero inserted before its twin
    // changes nothing.
    EXPECT_EQ(bott_samelson_char(Word{2, {1, 1}}, {0, 1}),
              bott_samelson_char(Word{2, {1}}, {1}));
    EXPECT_EQ(bott_samelson_char(Word{3, {2, 1, 1, 2}}, {1, 0, 1, 1}),
              bott_samelson_char(Word{3, {2, 1, 2}}, {1, 1, 1}));
    // Non-reduced words are fine here.
    LaurentPoly f = bott_samelson_char(Word{3, {2, 1, 1, 2}}, {1, 1, 1, 1});
    EXPECT_FALSE(f.is_zero());
    EXPECT_THROW(bott_samelson_char(Word{3, {1}}, {1, 2}), std::invalid_argument);
    EXPECT_THROW(bott_samelson_char(Word{3, {3}}, {1}), std::invalid_argument);
    EXPECT_THROW(bott_samelson_char(Word{3, {1}}, {-1}), std::invalid_argument);
}

TEST(BottSamelsonChar, MatchesDemazureCharOnChamberFamilies) {
    // For a reduced word with every chamber at multiplicity one and no
    // prefix members, the two evaluations coincide.
    Word w{3, {1, 2}};
    MultFamily d{3, chamber_family(w).members, {1, 1}};
    EXPECT_EQ(bott_samelson_char(w, {1, 1}), demazure_char(d, w));
}

TEST(FullChar, SymmetrizesTheDemazureCharacter) {
    MultFamily d = parse_mult_family("1:1,12:1", 2);
    LaurentPoly f = full_char(d);
    EXPECT_EQ(f, mono(2, {2, 1}) + mono(2, {1, 2}));
    MultFamily inv = inversion_family(parse_permutation("2,4,1,5,3"));
    LaurentPoly g = full_char(inv);
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(swap_vars(i, g), g);
    EXPECT_EQ(full_char(inv, Word{5, {1, 3, 2}}), g);
}

TEST(Fillings, FlaggedBoundIsComponentwiseAfterSorting) {
    EXPECT_TRUE(is_flagged_filling({2, 3, 4}, {1, 2, 4}));
    EXPECT_FALSE(is_flagged_filling({3}, {4}));
    EXPECT_TRUE(is_flagged_filling({3}, {2}));
    EXPECT_FALSE(is_flagged_filling({2, 3, 4}, {1, 2}));
}

TEST(Fillings, EnumerationMatchesHandCount) {
    MultFamily d = parse_mult_family("123:1", 4);
    EXPECT_EQ(enumerate_fillings(d, false).size(), 4u);   // any 3 of 4 rows
    EXPECT_EQ(enumerate_fillings(d, true).size(), 1u);    // only {1,2,3} stays below (1,2,3)
    MultFamily prefix = parse_mult_family("1:1,12:1", 2);
    EXPECT_EQ(enumerate_fillings(prefix, true).size(), 1u);
    EXPECT_EQ(enumerate_fillings(MultFamily{3, {}, {}}, true).size(), 1u);
}

TEST(Fillings, TwoColumnExample) {
    MultFamily d = parse_mult_family("234:2,3:3", 4);
    Filling tau2 = {{2, 3, 4}, {1, 2, 4}, {3}, {2}, {3}};
    Filling tau1 = {{2, 3, 4}, {1, 2, 3}, {4}, {3}, {4}};
    auto flagged = enumerate_fillings(d, true);
    auto all = enumerate_fillings(d, false);
    EXPECT_NE(std::find(flagged.begin(), flagged.end(), tau2), flagged.end());
    EXPECT_EQ(std::find(flagged.begin(), flagged.end(), tau1), flagged.end());
    EXPECT_NE(std::find(all.begin(), all.end(), tau1), all.end());
    EXPECT_NE(std::find(all.begin(), all.end(), tau2), all.end());
}

TEST(WeylCharOracle, AgreesWithKnownCharacters) {
    EXPECT_EQ(weyl_char_oracle(parse_mult_family("2:1", 2), true),
              mono(2, {1, 0}) + mono(2, {0, 1}));
    EXPECT_EQ(weyl_char_oracle(parse_mult_family("1:1,12:1", 2), true), mono(2, {2, 1}));
    EXPECT_EQ(weyl_char_oracle(parse_mult_family("1:1", 3), false),
              mono(3, {1, 0, 0}) + mono(3, {0, 1, 0}) + mono(3, {0, 0, 1}));
    EXPECT_EQ(weyl_char_oracle(MultFamily{3, {}, {}}, true), LaurentPoly::constant(3, Int(1)));
}

TEST(WeylCharOracle, MatchesProductFormulaOnInversionFamilies) {
    for (const char* p : {"2,1,3,4", "1,3,2,4", "2,3,1,4", "3,1,4,2", "2,4,1,3"}) {
        MultFamily d = inversion_family(parse_permutation(p));
        EXPECT_EQ(weyl_char_oracle(d, true), demazure_char(d)) << p;
    }
    MultFamily d = inversion_family(parse_permutation("2,3,1"));
    EXPECT_EQ(weyl_char_oracle(d, false), full_char(d));
}

TEST(WeylCharOracle, LambdaRecursionTransportsMultiplicities) {
    // char(Lambda_i(D, m), m0) = Lambda_i(pi_i^m0 * char(D, m)).
    struct Case {
        const char* family;
        int n, i, m0;
    } cases[] = {
        {"1:1", 3, 1, 0},
        {"1:1", 3, 1, 1},
        {"1:1", 3, 1, 2},
        {"12:1,1:1", 3, 2, 1},
        {"2:2", 3, 2, 1},
    };
    for (const Case& c : cases) {
        MultFamily d = parse_mult_family(c.family, c.n);
        MultFamily lifted = lambda_mult_family(c.i, d, c.m0);
        LaurentPoly lhs = demazure_char(lifted);
        LaurentPoly base = demazure_char(d);
        LaurentPoly pim = LaurentPoly::constant(c.n, Int(1));
        for (int t = 0; t < c.m0; ++t) pim *= fundamental_weight(c.n, c.i);
        LaurentPoly rhs = demazure(c.i, pim * base);
        EXPECT_EQ(lhs, rhs) << c.family;
        EXPECT_EQ(weyl_char_oracle(lifted, true), lhs) << c.family;
    }
}

TEST(WeylCharOracle, SweepIsCleanForTwoVariables) {
    OracleSweepReport report = verify_oracle_sweep(2, 6);
    EXPECT_TRUE(report.ok());
    EXPECT_GT(report.checked, 0);
    EXPECT_THROW(verify_oracle_sweep(6, 4), std::invalid_argument);
}

TEST(Characters, JsonCarriesFamilyWordAndTerms) {
    MultFamily d = parse_mult_family("2:1", 2);
    Word w{2, {1}};
    std::string j = char_to_json(d, w, demazure_char(d, w));
    EXPECT_NE(j.find("\"family\""), std::string::npos);
    EXPECT_NE(j.find("\"word\""), std::string::npos);
    EXPECT_NE(j.find("\"char\""), std::string::npos);
}

}  // namespace
}  // namespace glncomb
