#include "glncomb/schubert.hpp"

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

TEST(Schubert, FullTableForThreeVariables) {
    struct Row {
        const char* w;
        LaurentPoly value;
    };
    std::vector<Row> table = {
        {"1,2,3", LaurentPoly::constant(3, Int(1))},
        {"1,3,2", mono(3, {1, 0, 0}) + mono(3, {0, 1, 0})},
        {"2,1,3", mono(3, {1, 0, 0})},
        {"2,3,1", mono(3, {1, 1, 0})},
        {"3,1,2", mono(3, {2, 0, 0})},
        {"3,2,1", mono(3, {2, 1, 0})},
    };
    for (const Row& row : table) {
        Permutation w = parse_permutation(row.w);
        EXPECT_EQ(schubert_descending(w), row.value) << row.w;
        EXPECT_EQ(schubert_ascending(w), row.value) << row.w;
    }
}

TEST(Schubert, ExtremesOfS4) {
    EXPECT_EQ(schubert_descending(Permutation(4)), LaurentPoly::constant(4, Int(1)));
    EXPECT_EQ(schubert_descending(longest(4)), mono(4, {3, 2, 1, 0}));
    EXPECT_EQ(schubert_ascending(longest(4)), mono(4, {3, 2, 1, 0}));
}

TEST(Schubert, BothRoutesOn24153) {
    Permutation w = parse_permutation("2,4,1,5,3");
    LaurentPoly expected = mono(5, {2, 2, 0, 0, 0}) + mono(5, {2, 1, 1, 0, 0}) +
                           mono(5, {2, 1, 0, 1, 0}) + mono(5, {1, 2, 1, 0, 0}) +
                           mono(5, {1, 2, 0, 1, 0});
    EXPECT_EQ(schubert_descending(w), expected);
    EXPECT_EQ(schubert_ascending(w), expected);
    EXPECT_EQ(ascending_embedding_word(w).letters, (std::vector<int>{1, 3, 2, 1, 4, 3}));
}

TEST(Schubert, DescendingIsIndependentOfTheWordToTheTop) {
    std::vector<int> image{1, 2, 3};
    do {
        Permutation w(3, image);
        LaurentPoly reference = schubert_descending(w);
        Permutation to_top = compose(inverse(w), longest(3));
        for (const Word& word : reduced_words(to_top)) {
            EXPECT_EQ(schubert_descending(w, word), reference);
        }
    } while (std::next_permutation(image.begin(), image.end()));
    // A word that does not reach the longest element is rejected.
    EXPECT_THROW(schubert_descending(Permutation(3), Word{3, {1}}), std::invalid_argument);
    EXPECT_THROW(schubert_descending(longest(3), Word{3, {1, 1}}), std::invalid_argument);
}

TEST(Schubert, DividedDifferenceRecursionAcrossS4) {
    std::vector<int> image{1, 2, 3, 4};
    do {
        Permutation w(4, image);
        LaurentPoly sw = schubert_descending(w);
        // Homogeneous of degree length(w) with nonnegative coefficients.
        for (const auto& [exps, coef] : sw.terms()) {
            int total = 0;
            for (int e : exps) {
                EXPECT_GE(e, 0);
                total += e;
            }
            EXPECT_EQ(total, length(w));
            EXPECT_GT(coef, Int(0));
        }
        for (int i = 1; i <= 3; ++i) {
            Permutation ws = right_mul(w, i);
            if (length(ws) < length(w)) {
                EXPECT_EQ(divided_difference(i, sw), schubert_descending(ws));
            } else {
                EXPECT_TRUE(divided_difference(i, sw).is_zero());
            }
        }
    } while (std::next_permutation(image.begin(), image.end()));
}

TEST(FirstAscentChain, LongestS3RunsToIdentity) {
    auto chain = first_ascent_chain(longest(3));
    ASSERT_EQ(chain.size(), 3u);
    EXPECT_EQ(chain[0].i, 1);
    EXPECT_EQ(chain[0].to, parse_permutation("2,3,1"));
    EXPECT_EQ(chain[1].i, 2);
    EXPECT_EQ(chain[1].to, parse_permutation("2,1,3"));
    EXPECT_EQ(chain[2].i, 1);
    EXPECT_EQ(chain[2].to, Permutation(3));
    // The i-free part of the first step: I(321) minus one copy of [1].
    EXPECT_EQ(to_string(chain[0].i_free_part), "12:1");
}

TEST(FirstAscentChain, CanGetStuckBeforeTheIdentity) {
    auto chain = first_ascent_chain(parse_permutation("2,4,1,5,3"));
    ASSERT_EQ(chain.size(), 2u);
    EXPECT_EQ(chain[0].i, 2);
    EXPECT_EQ(chain[1].to, parse_permutation("1,2,4,5,3"));
    EXPECT_TRUE(first_ascent_chain(parse_permutation("1,3,4,2")).empty());
    EXPECT_TRUE(first_ascent_chain(Permutation(3)).empty());
}

TEST(FirstAscentChain, StepFactsHoldAcrossS4) {
    // Every executed step re-checks the freeness and transport facts
    // internally and throws on a violation, so running the chain is the test.
    std::vector<int> image{1, 2, 3, 4};
    do {
        Permutation w(4, image);
        auto chain = first_ascent_chain(w);
        for (const FirstAscentStep& step : chain) {
            EXPECT_EQ(length(step.to), length(step.from) - 1);
            EXPECT_EQ(right_mul(step.from, step.i), step.to);
        }
    } while (std::next_permutation(image.begin(), image.end()));
}

TEST(VerifyKp, CleanOnS3) {
    KpReport report = verify_kp(3);
    EXPECT_EQ(report.total, 6);
    EXPECT_TRUE(report.ok());
    EXPECT_THROW(verify_kp(6), std::invalid_argument);
}

}  // namespace
}  // namespace glncomb
