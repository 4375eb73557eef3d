#include <gtest/gtest.h>

#include "basephi/bergman.hpp"
#include "basephi/errors.hpp"
#include "basephi/render.hpp"
#include "basephi/words.hpp"

using namespace basephi;

namespace {

DigitWord w(std::string_view text) { return parse_expansion(text); }

}  // namespace

TEST(BergmanGreedy, Examples) {
    EXPECT_EQ(bergman_greedy(4), w("101.01"));
    EXPECT_EQ(bergman_greedy(14), w("100100.001001"));
    EXPECT_EQ(bergman_greedy(0), DigitWord());
    EXPECT_EQ(bergman_greedy(1), w("1"));
    EXPECT_EQ(bergman_greedy(2), w("10.01"));
    EXPECT_EQ(bergman_greedy(3), w("100.01"));
    EXPECT_EQ(bergman_greedy(5), w("1000.1001"));
    EXPECT_EQ(bergman_greedy(6), w("1010.0001"));
}

TEST(BergmanGreedy, ProducesBergmanWordOfRightValue) {
    for (long n = 0; n <= 3000; ++n) {
        const DigitWord beta = bergman_greedy(n);
        ASSERT_TRUE(beta.is_bergman());
        ASSERT_TRUE(beta.is_canonical());
        ASSERT_EQ(evaluate(beta), GoldenInteger::from_integer(n));
    }
}

TEST(BergmanGreedy, LargeInput) {
    const BigInt n = fibonacci(90);
    EXPECT_EQ(bergman_greedy(n), bergman_fibonacci(90));
}

TEST(BergmanRecursive, Examples) {
    EXPECT_EQ(bergman_recursive(14), w("100100.001001"));
    EXPECT_EQ(bergman_recursive(6), w("1010.0001"));
    const DigitWord seven = bergman_recursive(7);
    EXPECT_EQ(seven, w("10000.0001"));
    EXPECT_EQ(seven, bergman_greedy(7));
}

TEST(BergmanRecursive, AgreesWithGreedy) {
    for (long n = 0; n <= 20'000; ++n) ASSERT_EQ(bergman_recursive(n), bergman_greedy(n)) << n;
}

TEST(BergmanRecursive, AgreesWithGreedyOnLargeInputs) {
    for (int k = 20; k <= 60; k += 7) {
        const BigInt base = lucas(k);
        for (int d = -3; d <= 3; ++d) {
            const BigInt n = base + d;
            ASSERT_EQ(bergman_recursive(n), bergman_greedy(n)) << n;
        }
    }
}

TEST(BergmanFibonacci, Examples) {
    EXPECT_EQ(bergman_fibonacci(5), w("1000.1001"));
    EXPECT_EQ(bergman_fibonacci(6), w("10001.0001"));
    EXPECT_EQ(bergman_fibonacci(7), w("100010.001001"));
    EXPECT_EQ(bergman_fibonacci(3), w("10.01"));
    EXPECT_EQ(bergman_fibonacci(4), w("100.01"));
    EXPECT_THROW(bergman_fibonacci(2), DomainError);
}

TEST(BergmanFibonacci, LeadingPositionIsNMinusTwo) {
    for (int n = 3; n <= 30; ++n) {
        EXPECT_EQ(bergman_fibonacci(n), bergman_greedy(fibonacci(n))) << n;
        EXPECT_EQ(bergman_fibonacci(n).high(), n - 2);
    }
}

TEST(BergmanLucas, Examples) {
    EXPECT_EQ(bergman_lucas(4), w("10000.0001"));
    EXPECT_EQ(bergman_lucas(5), w("10101.0101"));
    const DigitWord l6 = bergman_lucas(6);
    EXPECT_EQ(l6, w("1000000.000001"));
    EXPECT_EQ(l6, bergman_greedy(18));
    EXPECT_THROW(bergman_lucas(1), DomainError);
}

TEST(BergmanLucas, MatchesGreedy) {
    for (int n = 2; n <= 25; ++n) EXPECT_EQ(bergman_lucas(n), bergman_greedy(lucas(n))) << n;
}

TEST(ClassifyLucasInterval, Examples) {
    const auto eight = classify_lucas_interval(8);
    EXPECT_EQ(eight.parity, Parity::even);
    EXPECT_EQ(eight.n, 2);
    EXPECT_EQ(eight.index(), 4);
    EXPECT_EQ(eight.bounds, (IntegerRange{7, 11}));
    EXPECT_FALSE(eight.subinterval);

    const auto thirteen = classify_lucas_interval(13);
    EXPECT_EQ(thirteen.parity, Parity::odd);
    EXPECT_EQ(thirteen.n, 2);
    EXPECT_EQ(thirteen.bounds, (IntegerRange{12, 17}));
    ASSERT_TRUE(thirteen.subinterval);
    EXPECT_EQ(thirteen.subinterval->which, Subinterval::I);
    EXPECT_EQ(thirteen.subinterval->bounds, (IntegerRange{12, 13}));

    const auto three = classify_lucas_interval(3);
    EXPECT_EQ(three.parity, Parity::even);
    EXPECT_EQ(three.n, 1);
    EXPECT_EQ(three.bounds, (IntegerRange{3, 4}));

    const auto two = classify_lucas_interval(2);
    EXPECT_EQ(two.index(), 1);
    EXPECT_FALSE(two.subinterval);

    EXPECT_THROW(classify_lucas_interval(1), DomainError);
}

TEST(ClassifyLucasInterval, SubintervalsOfLambdaFive) {
    // I_2 = [12,13], J_2 = [14,15], K_2 = [16,17]
    const Subinterval expected[] = {Subinterval::I, Subinterval::I, Subinterval::J,
                                    Subinterval::J, Subinterval::K, Subinterval::K};
    for (int n = 12; n <= 17; ++n) {
        EXPECT_EQ(classify_lucas_interval(n).subinterval->which, expected[n - 12]) << n;
    }
}

TEST(ClassifyLucasInterval, IntervalsTileTheNaturals) {
    int previous_index = 1;
    for (long n = 2; n <= 5000; ++n) {
        const auto info = classify_lucas_interval(n);
        ASSERT_TRUE(info.bounds.contains(n));
        ASSERT_GE(info.index(), previous_index);
        ASSERT_LE(info.index(), previous_index + 1);
        previous_index = info.index();
        if (info.parity == Parity::odd && info.n >= 1) {
            ASSERT_TRUE(info.subinterval);
            ASSERT_TRUE(info.subinterval->bounds.contains(n));
        }
    }
}

TEST(PropS, TailParityAndLowPosition) {
    for (long n = 2; n <= 10'000; ++n) {
        const DigitWord beta = bergman_greedy(n);
        const auto info = classify_lucas_interval(n);
        const int s1 = block_factorization(beta).s(1);
        if (info.parity == Parity::even) {
            ASSERT_EQ(s1 % 2, 1) << n;
            ASSERT_EQ(-beta.low(), 2 * info.n) << n;
        } else {
            ASSERT_EQ(s1 % 2, 0) << n;
            ASSERT_EQ(-beta.low(), 2 * info.n + 2) << n;
        }
    }
}

TEST(LucasFibonacciInterplay, FibonacciNumbersLandInAlternateIntervals) {
    for (int n = 1; n <= 15; ++n) {
        EXPECT_EQ(classify_lucas_interval(fibonacci(2 * n + 2)).index(), 2 * n);
        EXPECT_EQ(classify_lucas_interval(fibonacci(2 * n + 3)).index(), 2 * n + 1);
    }
}
