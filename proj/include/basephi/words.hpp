#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "basephi/golden.hpp"

namespace basephi {

/// Exponent of phi. Position 0 is the units digit; negative positions sit
/// right of the radix point.
using Position = int;
using Digit = std::uint32_t;

/// Finite digit sequence over positions high()..low(), most significant first.
///
/// A word is canonical when its end digits are nonzero, or when it is the zero
/// word (high = low = 0, one digit 0). Constructors keep the digits as given;
/// canonicalize() trims. Binary and Bergman words are the same type, checked
/// with is_binary() / is_bergman() where an operation needs it.
class DigitWord {
public:
    /// The canonical zero word.
    DigitWord() : high_(0), digits_{0} {}

    /// digits[0] sits at position `high`. An empty digit list yields the zero word.
    DigitWord(Position high, std::vector<Digit> digits);

    /// Binary word with ones at the given positions (any order, duplicates ignored).
    static DigitWord from_positions(std::span<const Position> ones);

    Position high() const noexcept { return high_; }
    Position low() const noexcept { return high_ - static_cast<Position>(digits_.size()) + 1; }
    std::size_t size() const noexcept { return digits_.size(); }

    /// Digit at a position; zero outside [low, high].
    Digit at(Position p) const noexcept {
        if (p > high_ || p < low()) return 0;
        return digits_[static_cast<std::size_t>(high_ - p)];
    }

    std::span<const Digit> digits() const noexcept { return digits_; }

    bool is_zero() const noexcept;
    bool is_canonical() const noexcept;
    bool is_binary() const noexcept;
    /// Binary with no two adjacent ones.
    bool is_bergman() const noexcept;
    std::size_t count_ones() const noexcept;

    /// Digits without the radix point, e.g. "10001001" for 1000.1001.
    std::string digit_string() const;

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
    /// Orders by (low, digit string); the enumeration output order.
    friend std::strong_ordering operator<=>(const DigitWord& x, const DigitWord& y);

private:
    Position high_;
    std::vector<Digit> digits_;
};

/// Gap list (s_n, ..., s_1) of a binary word 1 0^{s_n} 1 ... 1 0^{s_1} 1,
/// stored left to right, so gaps.back() is s_1.
struct BlockFactorization {
    std::vector<int> gaps;

    std::size_t n() const noexcept { return gaps.size(); }
    /// s_k with 1-based k counted from the right.
    int s(std::size_t k) const { return gaps.at(gaps.size() - k); }
    /// The binary digit string 1 0^{s_n} ... 1 0^{s_1} 1.
    std::vector<Digit> reconstruct() const;

    friend bool operator==(const BlockFactorization&, const BlockFactorization&) = default;
};

/// Maximum number of rewriting steps before reduction gives up.
inline constexpr std::size_t kRewriteStepCap = 1'000'000;

/// Sum of digit * phi^position, exact.
GoldenInteger evaluate(const DigitWord& w);

/// Trim leading and trailing zeros. Idempotent and value preserving.
DigitWord canonicalize(const DigitWord& w);

/// Golden mean flip 100 -> 011 with the 1 at position p. Up to two implicit
/// zeros below low() take part in the window. Throws PatternMismatch.
DigitWord flip(const DigitWord& w, Position p);

/// Reverse flip 011 -> 100 with the 0 at position p; p may be high()+1.
/// Throws PatternMismatch.
DigitWord unflip(const DigitWord& w, Position p);

/// True when a flip at p is legal.
bool can_flip(const DigitWord& w, Position p) noexcept;
bool can_unflip(const DigitWord& w, Position p) noexcept;

/// Knott truncation rule: digits at (low+2, low+1, low) are not 0,1,1.
bool satisfies_knott(const DigitWord& w);

/// Repeated reverse flips at the leftmost 11 until no 11 remains.
/// Input must be binary (MalformedWord otherwise).
DigitWord reduce_to_bergman(const DigitWord& w);

/// Rewrites any word over the naturals into binary no-11 form:
/// 2 phi^i -> phi^{i+1} + phi^{i-2} lowest position first, then reduce_to_bergman.
DigitWord normalize_to_bergman(const DigitWord& w);

/// Block gaps of a canonical binary word whose first and last digits are 1.
/// Throws MalformedWord otherwise. The radix point is ignored.
BlockFactorization block_factorization(const DigitWord& w);

}  // namespace basephi
