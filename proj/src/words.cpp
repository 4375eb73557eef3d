#include "basephi/words.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "basephi/errors.hpp"

namespace basephi {

namespace {

// Mutable digit buffer that grows in both directions; index 0 is position `low`.
class DigitBuffer {
public:
    explicit DigitBuffer(const DigitWord& w) : low_(w.low()) {
        cells_.assign(w.digits().rbegin(), w.digits().rend());
    }

    Position low() const noexcept { return low_; }
    Position high() const noexcept { return low_ + static_cast<Position>(cells_.size()) - 1; }

    Digit get(Position p) const noexcept {
        if (p < low_ || p > high()) return 0;
        return cells_[static_cast<std::size_t>(p - low_)];
    }

    Digit& ref(Position p) {
        if (p < low_) {
            cells_.insert(cells_.begin(), static_cast<std::size_t>(low_ - p), 0);
            low_ = p;
        } else if (p > high()) {
            cells_.resize(static_cast<std::size_t>(p - low_ + 1), 0);
        }
        return cells_[static_cast<std::size_t>(p - low_)];
    }

    DigitWord to_word() const {
        return canonicalize(DigitWord(high(), std::vector<Digit>(cells_.rbegin(), cells_.rend())));
    }

private:
    Position low_;
    std::vector<Digit> cells_;
};

// Leftmost (highest) m with digits 1 at m and m-1, or nothing.
bool find_leftmost_pair(const DigitBuffer& buf, Position& m) {
    for (Position p = buf.high(); p > buf.low(); --p) {
        if (buf.get(p) == 1 && buf.get(p - 1) == 1) {
            m = p;
            return true;
        }
    }
    return false;
}

void reduce_in_place(DigitBuffer& buf) {
    std::size_t steps = 0;
    Position m = 0;
    while (find_leftmost_pair(buf, m)) {
        if (++steps > kRewriteStepCap) {
            throw InternalError("reduce_to_bergman: rewrite step cap exceeded");
        }
        // Leftmost 11 implies the digit above it is 0.
        buf.ref(m + 1) = 1;
        buf.ref(m) = 0;
        buf.ref(m - 1) = 0;
    }
}

}  // namespace

DigitWord::DigitWord(Position high, std::vector<Digit> digits) : high_(high), digits_(std::move(digits)) {
    if (digits_.empty()) {
        high_ = 0;
        digits_ = {0};
    }
}

DigitWord DigitWord::from_positions(std::span<const Position> ones) {
    if (ones.empty()) return {};
    const auto [lo, hi] = std::minmax_element(ones.begin(), ones.end());
    std::vector<Digit> digits(static_cast<std::size_t>(*hi - *lo + 1), 0);
    for (Position p : ones) {
        digits[static_cast<std::size_t>(*hi - p)] = 1;
    }
    return {*hi, std::move(digits)};
}

bool DigitWord::is_zero() const noexcept {
    return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; });
}

bool DigitWord::is_canonical() const noexcept {
    if (digits_.size() == 1 && digits_[0] == 0) return high_ == 0;
    return digits_.front() != 0 && digits_.back() != 0;
}

bool DigitWord::is_binary() const noexcept {
    return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d <= 1; });
}

bool DigitWord::is_bergman() const noexcept {
    if (!is_binary()) return false;
    return std::adjacent_find(digits_.begin(), digits_.end(),
                              [](Digit a, Digit b) { return a == 1 && b == 1; }) == digits_.end();
}

std::size_t DigitWord::count_ones() const noexcept {
    return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), Digit{1}));
}

std::string DigitWord::digit_string() const {
    std::string out;
    out.reserve(digits_.size());
    for (Digit d : digits_) {
        if (d < 10) {
            out.push_back(static_cast<char>('0' + d));
        } else {
            out += '(' + std::to_string(d) + ')';
        }
    }
    return out;
}

std::strong_ordering operator<=>(const DigitWord& x, const DigitWord& y) {
    if (auto c = x.low() <=> y.low(); c != 0) return c;
    return std::lexicographical_compare_three_way(x.digits_.begin(), x.digits_.end(), y.digits_.begin(),
                                                  y.digits_.end());
}

std::vector<Digit> BlockFactorization::reconstruct() const {
    std::vector<Digit> out{1};
    for (int s : gaps) {
        out.insert(out.end(), static_cast<std::size_t>(s), 0);
        out.push_back(1);
    }
    return out;
}

GoldenInteger evaluate(const DigitWord& w) {
    // Horner in phi from the top digit down, then scale by phi^low.
    BigInt a = 0;
    BigInt b = 0;
    for (Digit d : w.digits()) {
        // (a + b phi) * phi = b + (a + b) phi
        BigInt na = b;
        b += a;
        a = std::move(na);
        a += d;
    }
    for (Position k = w.low(); k > 0; --k) {
        BigInt na = b;
        b += a;
        a = std::move(na);
    }
    for (Position k = w.low(); k < 0; ++k) {
        // (a + b phi) * (phi - 1) = (b - a) + a phi
        BigInt na = b - a;
        b = std::move(a);
        a = std::move(na);
    }
    return {std::move(a), std::move(b)};
}

DigitWord canonicalize(const DigitWord& w) {
    const auto digits = w.digits();
    const auto first = std::find_if(digits.begin(), digits.end(), [](Digit d) { return d != 0; });
    if (first == digits.end()) return {};
    const auto last = std::find_if(digits.rbegin(), digits.rend(), [](Digit d) { return d != 0; }).base();
    const Position high = w.high() - static_cast<Position>(first - digits.begin());
    return {high, std::vector<Digit>(first, last)};
}

bool can_flip(const DigitWord& w, Position p) noexcept {
    if (w.is_zero() || p > w.high()) return false;
    return w.at(p) == 1 && w.at(p - 1) == 0 && w.at(p - 2) == 0;
}

bool can_unflip(const DigitWord& w, Position p) noexcept {
    if (w.is_zero() || p > w.high() + 1 || p - 2 < w.low()) return false;
    return w.at(p) == 0 && w.at(p - 1) == 1 && w.at(p - 2) == 1;
}

DigitWord flip(const DigitWord& w, Position p) {
    if (!can_flip(w, p)) {
        throw PatternMismatch("flip: window at position " + std::to_string(p) + " of " + w.digit_string() +
                              " is not 100");
    }
    DigitBuffer buf(w);
    buf.ref(p) = 0;
    buf.ref(p - 1) = 1;
    buf.ref(p - 2) = 1;
    return buf.to_word();
}

DigitWord unflip(const DigitWord& w, Position p) {
    if (!can_unflip(w, p)) {
        throw PatternMismatch("unflip: window at position " + std::to_string(p) + " of " + w.digit_string() +
                              " is not 011");
    }
    DigitBuffer buf(w);
    buf.ref(p) = 1;
    buf.ref(p - 1) = 0;
    buf.ref(p - 2) = 0;
    return buf.to_word();
}

bool satisfies_knott(const DigitWord& w) {
    const Position r = w.low();
    return !(w.at(r + 2) == 0 && w.at(r + 1) == 1 && w.at(r) == 1);
}

DigitWord reduce_to_bergman(const DigitWord& w) {
    if (!w.is_binary()) {
        throw MalformedWord("reduce_to_bergman: word " + w.digit_string() + " is not binary");
    }
    DigitBuffer buf(w);
    reduce_in_place(buf);
    return buf.to_word();
}

DigitWord normalize_to_bergman(const DigitWord& w) {
    DigitBuffer buf(w);
    std::set<Position> pending;
    for (Position p = buf.low(); p <= buf.high(); ++p) {
        if (buf.get(p) >= 2) pending.insert(p);
    }
    std::size_t steps = 0;
    while (!pending.empty()) {
        if (++steps > kRewriteStepCap) {
            throw InternalError("normalize_to_bergman: rewrite step cap exceeded");
        }
        const Position p = *pending.begin();
        Digit& d = buf.ref(p);
        d -= 2;
        if (d < 2) pending.erase(p);
        // 2 phi^p = phi^{p+1} + phi^{p-2}
        if (++buf.ref(p + 1) >= 2) pending.insert(p + 1);
        if (++buf.ref(p - 2) >= 2) pending.insert(p - 2);
    }
    reduce_in_place(buf);
    return buf.to_word();
}

BlockFactorization block_factorization(const DigitWord& w) {
    if (!w.is_binary() || w.is_zero() || !w.is_canonical()) {
        throw MalformedWord("block_factorization: need a canonical binary word starting and ending in 1, got " +
                            w.digit_string());
    }
    BlockFactorization out;
    int run = 0;
    const auto digits = w.digits();
    for (std::size_t i = 1; i < digits.size(); ++i) {
        if (digits[i] == 0) {
            ++run;
        } else {
            out.gaps.push_back(run);
            run = 0;
        }
    }
    return out;
}

}  // namespace basephi
