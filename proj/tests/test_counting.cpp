#include <gtest/gtest.h>

#include "basephi/bergman.hpp"
#include "basephi/counting.hpp"
#include "basephi/enumeration.hpp"
#include "basephi/errors.hpp"
#include "basephi/render.hpp"

using namespace basephi;

namespace {

// Number of subsets of {F_2, ..., F_top} with the given sum, by plain enumeration.
int subset_sum_count(long target, int top) {
    std::vector<long> fibs;
    for (int i = 2; i <= top; ++i) fibs.push_back(fibonacci(i).convert_to<long>());
    int count = 0;
    for (unsigned mask = 0; mask < (1u << fibs.size()); ++mask) {
        long sum = 0;
        for (std::size_t i = 0; i < fibs.size(); ++i) {
            if (mask & (1u << i)) sum += fibs[i];
        }
        if (sum == target) ++count;
    }
    return count;
}

BlockFactorization blocks(std::vector<int> gaps) { return {std::move(gaps)}; }

}  // namespace

TEST(CountWord, Examples) {
    const RecursionTrace five = count_trace(blocks({3, 2}), CountMode::knott);
    EXPECT_EQ(five.r, (std::vector<BigInt>{1, 2, 5}));
    EXPECT_EQ(count_word(block_factorization(bergman_greedy(5)), CountMode::knott), 5);

    // B(L_5) = 101010101
    EXPECT_EQ(count_word(blocks({1, 1, 1, 1}), CountMode::knott), 5);
    EXPECT_EQ(count_word(blocks({}), CountMode::knott), 1);
    EXPECT_EQ(count_word(blocks({}), CountMode::natural_or_fib), 1);
}

TEST(CountWord, InitialConditionsDifferOnlyForOddTail) {
    EXPECT_EQ(count_word(blocks({4}), CountMode::knott), 3);
    EXPECT_EQ(count_word(blocks({4}), CountMode::natural_or_fib), 3);
    EXPECT_EQ(count_word(blocks({7}), CountMode::knott), 5);
    EXPECT_EQ(count_word(blocks({7}), CountMode::natural_or_fib), 4);
}

TEST(CountWord, RejectsNegativeGap) { EXPECT_THROW(count_word(blocks({2, -1}), CountMode::knott), MalformedWord); }

TEST(TotKappa, Examples) {
    EXPECT_EQ(tot_kappa(7), 5);
    EXPECT_EQ(tot_kappa(13), 13);
    EXPECT_EQ(tot_kappa(4), 3);
    EXPECT_EQ(tot_kappa(0), 1);
}

TEST(TotKappa, TableRows) {
    const int lambda4[] = {5, 8, 8, 8, 5};
    for (int i = 0; i < 5; ++i) EXPECT_EQ(tot_kappa(7 + i), lambda4[i]);
    const int lambda5[] = {10, 13, 12, 12, 13, 10};
    for (int i = 0; i < 6; ++i) EXPECT_EQ(tot_kappa(12 + i), lambda5[i]);
}

TEST(TotNu, Examples) {
    EXPECT_EQ(tot_nu(4), 1);
    EXPECT_EQ(tot_nu(14), 12);
    EXPECT_EQ(tot_nu(11), 1);
    EXPECT_EQ(tot_nu(0), 1);
}

TEST(Zeckendorf, Examples) {
    const FibonacciWord twelve = zeckendorf(12);
    EXPECT_EQ(twelve.to_string(), "10101");
    EXPECT_EQ(twelve.top_index(), 6);
    // 8+3+1 is the only subset of {1,2,3,5,8} with sum 12.
    EXPECT_EQ(subset_sum_count(12, 6), 1);
    EXPECT_EQ(zeckendorf(1).to_string(), "1");
    EXPECT_TRUE(zeckendorf(0).empty());
}

TEST(Zeckendorf, GreedyIsValidAndNoEleven) {
    for (long m = 0; m <= 5000; ++m) {
        const FibonacciWord z = zeckendorf(m);
        ASSERT_EQ(z.value(), m);
        const std::string s = z.to_string();
        ASSERT_EQ(s.find("11"), std::string::npos) << m;
        if (m > 0) ASSERT_EQ(s.front(), '1');
    }
}

TEST(TotFib, Examples) {
    EXPECT_EQ(tot_fib(5), 2);
    EXPECT_EQ(tot_fib(6), 2);
    EXPECT_EQ(tot_fib(7), 1);
    EXPECT_EQ(tot_fib(12), 1);
    EXPECT_EQ(tot_fib(294), 12);
    EXPECT_EQ(tot_fib(0), 1);
    const int row[] = {3, 2, 2, 3, 1};
    for (int i = 0; i < 5; ++i) EXPECT_EQ(tot_fib(8 + i), row[i]);
}

TEST(TotFibOracle, Examples) {
    EXPECT_EQ(tot_fib_oracle(8), 3);
    EXPECT_EQ(tot_fib_oracle(24), 5);
    EXPECT_EQ(tot_fib_oracle(0), 1);
    EXPECT_THROW(tot_fib_oracle(1'000'001), GuardRefusal);
    EXPECT_NO_THROW(tot_fib_oracle(1'000'000));
}

TEST(TotFibOracle, MatchesPlainSubsetEnumeration) {
    for (long m = 0; m <= 300; ++m) EXPECT_EQ(tot_fib_oracle(m), subset_sum_count(m, 14)) << m;
}

TEST(TotFib, MatchesOracle) {
    for (long m = 0; m <= 3000; ++m) ASSERT_EQ(tot_fib(m), tot_fib_oracle(m)) << m;
}

TEST(TotNuViaFib, Examples) {
    EXPECT_EQ(totnu_via_fib(4), tot_fib(12));
    EXPECT_EQ(totnu_via_fib(4), 1);
    EXPECT_EQ(totnu_via_fib(14), tot_fib(294));
    EXPECT_EQ(totnu_via_fib(14), 12);

    EXPECT_EQ(bergman_greedy(7).low(), -4);
    EXPECT_EQ(totnu_via_fib(7), tot_fib(56));
    EXPECT_EQ(totnu_via_fib(7), tot_nu(7));
    EXPECT_EQ(BigInt(enumerate_natural(7).size()), tot_fib(56));
    EXPECT_EQ(tot_fib(56), 4);

    EXPECT_THROW(totnu_via_fib(3), DomainError);
}

TEST(TotNuViaFib, BridgeHolds) {
    for (long n = 4; n <= 500; ++n) ASSERT_EQ(tot_nu(n), totnu_via_fib(n)) << n;
}

TEST(Theorems, KnottCountAtFibonacciNumbers) {
    for (int n = 1; n <= 25; ++n) EXPECT_EQ(tot_kappa(fibonacci(n)), fibonacci(n)) << n;
}

TEST(Theorems, KnottCountAtLucasNumbers) {
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(tot_kappa(lucas(2 * n)), 2 * n + 1);
        EXPECT_EQ(tot_kappa(lucas(2 * n + 1)), 2 * n + 1);
    }
}

TEST(Theorems, NaturalCountAtFibonacciNumbers) {
    for (int n = 0; n <= 10; ++n) {
        EXPECT_EQ(tot_nu(fibonacci(2 * n + 2)), fibonacci(2 * n + 1));
        EXPECT_EQ(tot_nu(fibonacci(2 * n + 3)), fibonacci(2 * n + 3));
    }
}

TEST(Theorems, FibonacciMinusOne) {
    for (int n = 3; n <= 25; ++n) EXPECT_EQ(tot_fib(fibonacci(n) - 1), 1) << n;
}

TEST(Theorems, LucasProducts) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(tot_fib(fibonacci(2 * n + 2) * lucas(2 * n)), 2 * n);
        EXPECT_EQ(tot_fib(fibonacci(2 * n + 2) * lucas(2 * n + 1)), 1);
        EXPECT_EQ(fibonacci(2 * n + 2) * lucas(2 * n + 1), fibonacci(4 * n + 3) - 1);
    }
}

TEST(Theorems, Squares) {
    for (int n = 1; n <= 8; ++n) {
        const BigInt a = fibonacci(2 * n);
        const BigInt b = fibonacci(2 * n + 1);
        EXPECT_EQ(tot_fib(a * a), fibonacci(2 * n - 1));
        EXPECT_EQ(tot_fib(b * b - 2), fibonacci(2 * n));
    }
}

TEST(Theorems, StockmeyerSquareIdentities) {
    for (int m = 3; m <= 30; ++m) {
        EXPECT_EQ(fibonacci(m) * fibonacci(m), fibonacci(2 * m - 2) + fibonacci(m - 2) * fibonacci(m - 2));
        EXPECT_EQ(fibonacci(m) * fibonacci(m), fibonacci(2 * m - 1) - fibonacci(m - 1) * fibonacci(m - 1));
    }
}

TEST(Theorems, Klarner) {
    for (int m = 4; m <= 18; ++m) {
        const BigInt fm = fibonacci(m);
        const BigInt fm1 = fibonacci(m + 1);
        for (BigInt n = fm; n < fm1 - 1; ++n) {
            ASSERT_EQ(tot_fib(n), tot_fib(n - fm) + tot_fib(fm1 - n - 2)) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Theorems, EvenOddFibonacciRecurrence) {
    for (int n = 4; n <= 40; ++n) EXPECT_EQ(3 * fibonacci(n - 1) - fibonacci(n - 3), fibonacci(n + 1));
}

TEST(Counts, ExponentialGrowthStaysExact) {
    EXPECT_EQ(tot_kappa(fibonacci(80)), fibonacci(80));
}
