#pragma once

#include <string>
#include <vector>

#include "basephi/golden.hpp"
#include "basephi/words.hpp"

namespace basephi {

enum class ExpansionMode { knott, natural, raw_closure };

std::string to_string(ExpansionMode mode);

/// Distinct canonical binary words of equal value, sorted by (low, digit string).
struct ExpansionSet {
    BigInt target;
    ExpansionMode mode = ExpansionMode::knott;
    std::vector<DigitWord> members;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(const DigitWord& w) const;
};

/// Widest window brute_force_expansions accepts (hi - lo).
inline constexpr int kBruteForceMaxWidth = 64;

/// Every binary word reachable from w by forward flips whose windows stay at
/// positions >= floor (w included). Breadth-first with canonical dedup.
/// The target of the result is the unit coefficient of evaluate(w).
ExpansionSet flip_closure(const DigitWord& w, Position floor);

/// All Knott expansions of N >= 1: the closure of beta(N) down to R(beta) - 2,
/// filtered by the Knott rule.
ExpansionSet enumerate_knott(const BigInt& n);

/// Knott expansions of N >= 1 whose lowest one sits at R(beta(N)).
ExpansionSet enumerate_natural(const BigInt& n);

/// Backtracking search over every 0/1 word on positions [lo, hi] with value N,
/// pruned by exact tail-sum bounds. Uses no flips. Throws GuardRefusal when
/// hi - lo exceeds kBruteForceMaxWidth and DomainError when hi < lo.
ExpansionSet brute_force_expansions(const BigInt& n, Position hi, Position lo);

/// Members of `set` that satisfy the Knott rule.
ExpansionSet knott_filter(const ExpansionSet& set);

}  // namespace basephi
