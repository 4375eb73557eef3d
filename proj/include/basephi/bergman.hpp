#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "basephi/golden.hpp"
#include "basephi/words.hpp"

namespace basephi {

enum class Parity { even, odd };
enum class Subinterval { I, J, K };

std::string to_string(Parity p);
std::string to_string(Subinterval s);

struct IntegerRange {
    BigInt lo;
    BigInt hi;

    bool contains(const BigInt& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const IntegerRange&, const IntegerRange&) = default;
};

/// Position of N among the Lucas intervals
///   Lambda_{2n} = [L_{2n}, L_{2n+1}],  Lambda_{2n+1} = [L_{2n+1}+1, L_{2n+2}-1],
/// and for odd intervals the part I_n, J_n or K_n it falls in.
struct LucasIntervalInfo {
    int n = 0;
    Parity parity = Parity::even;
    IntegerRange bounds;
    struct Part {
        Subinterval which;
        IntegerRange bounds;
    };
    /// Present for odd intervals with n >= 1. Lambda_1 = {2} has no split.
    std::optional<Part> subinterval;

    /// Index m of Lambda_m.
    int index() const noexcept { return parity == Parity::even ? 2 * n : 2 * n + 1; }
};

/// Canonical Bergman expansion by the greedy algorithm: repeatedly take the
/// largest phi^k not exceeding the residue.
DigitWord bergman_greedy(const BigInt& n);

/// Bergman expansion from the recursive structure of the Lucas intervals
/// (frame overlay on even intervals, prefix/suffix surgery on I/J/K).
DigitWord bergman_recursive(const BigInt& n);

/// Closed form for beta(F_n), n >= 3:
/// (1000)^p 1001 (odd n) or (1000)^p 10001 (even n), leading digit at position n-2.
DigitWord bergman_fibonacci(std::int64_t n);

/// Closed form for beta(L_n), n >= 2:
/// 1 0^{2m} . 0^{2m-1} 1 for n = 2m, 1 (01)^m . (01)^m for n = 2m+1.
DigitWord bergman_lucas(std::int64_t n);

/// Throws DomainError for N < 2.
LucasIntervalInfo classify_lucas_interval(const BigInt& n);

}  // namespace basephi
