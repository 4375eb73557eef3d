#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "basephi/golden.hpp"
#include "basephi/words.hpp"

namespace basephi {

/// Which initial condition the block recursion uses when s_1 is odd.
/// Knott counts include the extra double-flip expansion; natural and
/// Fibonacci counts do not.
enum class CountMode { knott, natural_or_fib };

/// Zeckendorf-style digits e_m ... e_2 over Fibonacci indices, most significant first.
struct FibonacciWord {
    std::vector<Digit> digits;

    bool empty() const noexcept { return digits.empty(); }
    /// Fibonacci index of digits.front().
    int top_index() const noexcept { return static_cast<int>(digits.size()) + 1; }
    /// Digit for F_i; zero outside [2, top_index()].
    Digit at(int index) const noexcept;
    BigInt value() const;
    std::string to_string() const;

    friend bool operator==(const FibonacciWord&, const FibonacciWord&) = default;
};

/// Values r_0 .. r_n of the block recursion.
struct RecursionTrace {
    std::vector<BigInt> r;
    CountMode mode = CountMode::knott;

    const BigInt& result() const { return r.back(); }
};

/// Upper bound for tot_fib_oracle.
inline constexpr std::uint64_t kFibOracleMax = 1'000'000;

/// r_0 = 1; r_1 = s_1/2 + 1 (s_1 even) or (s_1+1)/2 + [knott] (s_1 odd);
/// r_k = (s_k/2 + 1) r_{k-1} (s_k even), ((s_k+1)/2 + 1) r_{k-1} - r_{k-2} (s_k odd).
RecursionTrace count_trace(const BlockFactorization& blocks, CountMode mode);
BigInt count_word(const BlockFactorization& blocks, CountMode mode);

/// Number of Knott expansions of N; 1 for N = 0.
BigInt tot_kappa(const BigInt& n);

/// Number of natural expansions of N; 1 for N = 0.
BigInt tot_nu(const BigInt& n);

/// Greedy Zeckendorf expansion over F_2, F_3, ...; empty for 0.
FibonacciWord zeckendorf(const BigInt& m);

/// Number of ways to write M as a sum of distinct F_i, i >= 2; 1 for M = 0.
BigInt tot_fib(const BigInt& m);

/// Same count by memoized subset-sum over the Fibonacci numbers. GuardRefusal above kFibOracleMax.
BigInt tot_fib_oracle(const BigInt& m);

/// tot_fib(F_{2-R} N) with R the lowest position of beta(N); DomainError for N <= 3.
BigInt totnu_via_fib(const BigInt& n);

}  // namespace basephi
