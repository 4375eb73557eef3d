#include "basephi/bergman.hpp"

#include <array>
#include <string>
#include <string_view>

#include "basephi/errors.hpp"

namespace basephi {

namespace {

std::vector<Digit> digits_of(std::string_view bits) {
    std::vector<Digit> out;
    out.reserve(bits.size());
    for (char c : bits) out.push_back(c == '1' ? 1 : 0);
    return out;
}

DigitWord word_from_bits(Position high, std::string_view bits) { return {high, digits_of(bits)}; }

// beta(0) .. beta(6); anchors of the recursion.
DigitWord base_case(unsigned n) {
    switch (n) {
        case 0: return {};
        case 1: return word_from_bits(0, "1");
        case 2: return word_from_bits(1, "1001");
        case 3: return word_from_bits(2, "10001");
        case 4: return word_from_bits(2, "10101");
        case 5: return word_from_bits(3, "10001001");
        case 6: return word_from_bits(3, "10100001");
        default: throw InternalError("base_case: no table entry for " + std::to_string(n));
    }
}

// prefix (10)^{-1} inner (01)^{-1} suffix, with the top digit moving up by |prefix| - 2.
DigitWord surgery(std::string_view prefix, const DigitWord& inner, std::string_view suffix) {
    const std::string bits = inner.digit_string();
    if (bits.size() < 4 || !bits.starts_with("10") || !bits.ends_with("01")) {
        throw InternalError("bergman_recursive: surgery expects 10...01, got " + bits);
    }
    std::string out(prefix);
    out.append(bits, 2, bits.size() - 4);
    out.append(suffix);
    return word_from_bits(inner.high() + static_cast<Position>(prefix.size()) - 2, out);
}

// 1 0^{2n-1} [inner] 0^{2n-1} 1 with the ones at +-2n.
DigitWord frame_overlay(int n, const DigitWord& inner) {
    const Position top = 2 * n;
    std::vector<Digit> digits(static_cast<std::size_t>(4 * n + 1), 0);
    digits.front() = 1;
    digits.back() = 1;
    if (!inner.is_zero()) {
        if (inner.high() > top - 2 || inner.low() < -top + 2) {
            throw InternalError("bergman_recursive: inner word " + inner.digit_string() + " collides with frame");
        }
        for (Position p = inner.low(); p <= inner.high(); ++p) {
            digits[static_cast<std::size_t>(top - p)] = inner.at(p);
        }
    }
    return {top, std::move(digits)};
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(Subinterval s) {
    switch (s) {
        case Subinterval::I: return "I";
        case Subinterval::J: return "J";
        case Subinterval::K: return "K";
    }
    return "?";
}

DigitWord bergman_greedy(const BigInt& n) {
    if (n.sign() < 0) throw DomainError("bergman_greedy: N must be non-negative");
    if (n.is_zero()) return {};

    const GoldenInteger target = GoldenInteger::from_integer(n);
    // Climb to the largest k with phi^k <= N; keep (phi^k, phi^{k+1}).
    Position k = 0;
    GoldenInteger power = phi_power(0);
    GoldenInteger above = phi_power(1);
    while (above <= target) {
        GoldenInteger next = power + above;
        power = std::move(above);
        above = std::move(next);
        ++k;
    }

    const Position floor = -4 * (k + 4);
    GoldenInteger residue = target;
    std::vector<Position> ones;
    while (!residue.is_integer() || !residue.unit().is_zero()) {
        if (k < floor) {
            throw InternalError("bergman_greedy: no termination for " + n.str());
        }
        if (power <= residue) {
            ones.push_back(k);
            residue -= power;
        }
        GoldenInteger below = above - power;
        above = std::move(power);
        power = std::move(below);
        --k;
    }

    DigitWord w = DigitWord::from_positions(ones);
    if (!w.is_bergman()) {
        throw InternalError("bergman_greedy: produced " + w.digit_string() + " containing 11");
    }
    return w;
}

DigitWord bergman_recursive(const BigInt& n) {
    if (n.sign() < 0) throw DomainError("bergman_recursive: N must be non-negative");
    if (n <= 6) return base_case(n.convert_to<unsigned>());

    const LucasIntervalInfo info = classify_lucas_interval(n);
    const int m = info.n;
    if (info.parity == Parity::even) {
        return frame_overlay(m, bergman_recursive(n - lucas(2 * m)));
    }

    const BigInt base = lucas(2 * m + 1);
    switch (info.subinterval->which) {
        case Subinterval::I:
            return surgery("1000", bergman_recursive(lucas(2 * m - 1) + (n - base)), "1001");
        case Subinterval::J: {
            const BigInt k = n - base - lucas(2 * m - 2);
            return surgery("10010", bergman_recursive(lucas(2 * m - 2) + k), "001001");
        }
        case Subinterval::K: {
            const BigInt k = n - base - lucas(2 * m - 1);
            return surgery("1010", bergman_recursive(lucas(2 * m - 1) + k), "0001");
        }
    }
    throw InternalError("bergman_recursive: unreachable");
}

DigitWord bergman_fibonacci(std::int64_t n) {
    if (n < 3) throw DomainError("bergman_fibonacci: need n >= 3, got " + std::to_string(n));
    const bool odd = n % 2 != 0;
    const std::int64_t p = odd ? (n - 3) / 2 : (n - 4) / 2;
    std::string bits;
    for (std::int64_t i = 0; i < p; ++i) bits += "1000";
    bits += odd ? "1001" : "10001";
    return word_from_bits(static_cast<Position>(n - 2), bits);
}

DigitWord bergman_lucas(std::int64_t n) {
    if (n < 2) throw DomainError("bergman_lucas: need n >= 2, got " + std::to_string(n));
    const std::int64_t m = n / 2;
    std::string bits = "1";
    if (n % 2 == 0) {
        bits += std::string(static_cast<std::size_t>(4 * m - 1), '0');
        bits += '1';
    } else {
        for (std::int64_t i = 0; i < 2 * m; ++i) bits += "01";
    }
    return word_from_bits(static_cast<Position>(2 * m), bits);
}

LucasIntervalInfo classify_lucas_interval(const BigInt& n) {
    if (n < 2) throw DomainError("classify_lucas_interval: need N >= 2, got " + n.str());

    // L_0 .. L_{m+1} with L_m > N covers every bound used below.
    std::vector<BigInt> l{2, 1};
    while (l.back() <= n || l.size() < 4) l.push_back(l[l.size() - 1] + l[l.size() - 2]);
    l.push_back(l[l.size() - 1] + l[l.size() - 2]);

    LucasIntervalInfo info;
    // Lambda_0 = [2, 1] is empty, so start with Lambda_1 = {2}.
    for (std::size_t j = 0; 2 * j + 3 < l.size(); ++j) {
        const IntegerRange odd{l[2 * j + 1] + 1, l[2 * j + 2] - 1};
        if (odd.contains(n)) {
            info.n = static_cast<int>(j);
            info.parity = Parity::odd;
            info.bounds = odd;
            break;
        }
        const IntegerRange even{l[2 * j + 2], l[2 * j + 3]};
        if (even.contains(n)) {
            info.n = static_cast<int>(j + 1);
            info.parity = Parity::even;
            info.bounds = even;
            break;
        }
    }
    if (info.bounds.hi.is_zero()) {
        throw InternalError("classify_lucas_interval: no interval found for " + n.str());
    }

    if (info.parity == Parity::odd && info.n >= 1) {
        const auto j = static_cast<std::size_t>(info.n);
        const BigInt& base = l[2 * j + 1];
        const BigInt& l2 = l[2 * j - 2];
        const BigInt& l1 = l[2 * j - 1];
        const std::array<LucasIntervalInfo::Part, 3> parts{{
            {Subinterval::I, {base + 1, base + l2 - 1}},
            {Subinterval::J, {base + l2, base + l1}},
            {Subinterval::K, {base + l1 + 1, l[2 * j + 2] - 1}},
        }};
        for (const auto& part : parts) {
            if (part.bounds.contains(n)) {
                info.subinterval = part;
                break;
            }
        }
        if (!info.subinterval) {
            throw InternalError("classify_lucas_interval: " + n.str() + " in no subinterval");
        }
    }
    return info;
}

}  // namespace basephi
