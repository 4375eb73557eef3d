#include "basephi/counting.hpp"

#include <map>
#include <utility>

#include "basephi/bergman.hpp"
#include "basephi/errors.hpp"

namespace basephi {

namespace {

// Number of expansions of the single block 1 0^s; also r_1 in the
// natural/Fibonacci recursion.
BigInt block_count(int s) { return s % 2 == 0 ? BigInt(s / 2 + 1) : BigInt((s + 1) / 2); }

// One step of the recursion given r_{k-1} and r_{k-2}.
BigInt step(int s, const BigInt& prev, const BigInt& prev2) {
    if (s % 2 == 0) return BigInt(s / 2 + 1) * prev;
    return BigInt((s + 1) / 2 + 1) * prev - prev2;
}

}  // namespace

Digit FibonacciWord::at(int index) const noexcept {
    if (index < 2 || index > top_index()) return 0;
    return digits[static_cast<std::size_t>(top_index() - index)];
}

BigInt FibonacciWord::value() const {
    BigInt total = 0;
    BigInt lower = 1;  // F_1
    BigInt f = 1;      // F_2
    for (int i = 2; i <= top_index(); ++i) {
        if (at(i) != 0) total += at(i) * f;
        BigInt next = f + lower;
        lower = std::move(f);
        f = std::move(next);
    }
    return total;
}

std::string FibonacciWord::to_string() const {
    std::string out;
    for (Digit d : digits) out += std::to_string(d);
    return out;
}

RecursionTrace count_trace(const BlockFactorization& blocks, CountMode mode) {
    RecursionTrace trace;
    trace.mode = mode;
    trace.r.push_back(1);
    const std::size_t n = blocks.n();
    if (n == 0) return trace;
    for (int s : blocks.gaps) {
        if (s < 0) throw MalformedWord("count_word: negative gap " + std::to_string(s));
    }

    const int s1 = blocks.s(1);
    BigInt r1 = block_count(s1);
    if (s1 % 2 != 0 && mode == CountMode::knott) r1 += 1;
    trace.r.push_back(std::move(r1));
    for (std::size_t k = 2; k <= n; ++k) {
        trace.r.push_back(step(blocks.s(k), trace.r[k - 1], trace.r[k - 2]));
    }
    return trace;
}

BigInt count_word(const BlockFactorization& blocks, CountMode mode) { return count_trace(blocks, mode).result(); }

BigInt tot_kappa(const BigInt& n) {
    if (n.sign() < 0) throw DomainError("tot_kappa: N must be non-negative");
    if (n.is_zero()) return 1;
    return count_word(block_factorization(bergman_greedy(n)), CountMode::knott);
}

BigInt tot_nu(const BigInt& n) {
    if (n.sign() < 0) throw DomainError("tot_nu: N must be non-negative");
    if (n.is_zero()) return 1;
    return count_word(block_factorization(bergman_greedy(n)), CountMode::natural_or_fib);
}

FibonacciWord zeckendorf(const BigInt& m) {
    if (m.sign() < 0) throw DomainError("zeckendorf: M must be non-negative");
    FibonacciWord word;
    if (m.is_zero()) return word;

    std::vector<BigInt> fibs{1, 2};  // F_2, F_3, ...
    while (fibs.back() <= m) fibs.push_back(fibs[fibs.size() - 1] + fibs[fibs.size() - 2]);
    fibs.pop_back();

    BigInt rest = m;
    for (std::size_t i = fibs.size(); i-- > 0;) {
        const bool take = fibs[i] <= rest;
        if (take) rest -= fibs[i];
        word.digits.push_back(take ? 1 : 0);
    }
    return word;
}

BigInt tot_fib(const BigInt& m) {
    if (m.sign() < 0) throw DomainError("tot_fib: M must be non-negative");
    if (m.is_zero()) return 1;
    const FibonacciWord z = zeckendorf(m);

    // Trim the zeros below the lowest one; they form a final block 1 0^t.
    std::size_t last = z.digits.size();
    while (z.digits[last - 1] == 0) --last;
    const int trailing = static_cast<int>(z.digits.size() - last);
    const BlockFactorization blocks =
        block_factorization(DigitWord(0, std::vector<Digit>(z.digits.begin(), z.digits.begin() + last)));
    if (trailing == 0) return count_word(blocks, CountMode::natural_or_fib);

    // Same recursion with the extra block: r_{-1} = r_0 = 1 and r_1 = count(1 0^t).
    BigInt prev2 = 1;
    BigInt prev = block_count(trailing);
    for (std::size_t k = 1; k <= blocks.n(); ++k) {
        BigInt next = step(blocks.s(k), prev, prev2);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

BigInt tot_fib_oracle(const BigInt& m) {
    if (m.sign() < 0) throw DomainError("tot_fib_oracle: M must be non-negative");
    if (m > kFibOracleMax) {
        throw GuardRefusal("tot_fib_oracle: M = " + m.str() + " exceeds " + std::to_string(kFibOracleMax));
    }
    const auto target = m.convert_to<std::uint64_t>();

    std::vector<std::uint64_t> fibs{1, 2};
    while (fibs.back() <= target) fibs.push_back(fibs[fibs.size() - 1] + fibs[fibs.size() - 2]);
    // prefix[i] = fibs[0] + ... + fibs[i-1]
    std::vector<std::uint64_t> prefix{0};
    for (auto f : fibs) prefix.push_back(prefix.back() + f);

    // ways(rest, i): subsets of fibs[0..i) summing to rest.
    std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> memo;
    auto ways = [&](auto&& self, std::uint64_t rest, std::size_t i) -> std::uint64_t {
        if (rest == 0) return 1;
        if (i == 0 || prefix[i] < rest) return 0;
        const auto key = std::make_pair(rest, i);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t total = self(self, rest, i - 1);
        if (fibs[i - 1] <= rest) total += self(self, rest - fibs[i - 1], i - 1);
        memo.emplace(key, total);
        return total;
    };
    return BigInt(ways(ways, target, fibs.size()));
}

BigInt totnu_via_fib(const BigInt& n) {
    if (n <= 3) throw DomainError("totnu_via_fib: stated for N > 3, got " + n.str());
    const Position r = bergman_greedy(n).low();
    return tot_fib(fibonacci(2 - r) * n);
}

}  // namespace basephi
