#include "basephi/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "basephi/bergman.hpp"
#include "basephi/errors.hpp"

namespace basephi {

namespace {

void require_positive(const BigInt& n, const char* what) {
    if (n < 1) throw DomainError(std::string(what) + ": N must be at least 1, got " + n.str());
}

struct BruteForceSearch {
    // powers[i] = phi^{hi - i}; tails[i] = sum of powers[i..].
    std::vector<GoldenInteger> powers;
    std::vector<GoldenInteger> tails;
    Position hi = 0;
    std::vector<Position> chosen;
    std::set<DigitWord> found;

    void run(std::size_t i, const GoldenInteger& residue) {
        const int s = residue.sign();
        if (s < 0) return;
        if (s == 0) {
            found.insert(DigitWord::from_positions(chosen));
            return;
        }
        if (i == powers.size() || tails[i] < residue) return;
        chosen.push_back(hi - static_cast<Position>(i));
        run(i + 1, residue - powers[i]);
        chosen.pop_back();
        run(i + 1, residue);
    }
};

}  // namespace

std::string to_string(ExpansionMode mode) {
    switch (mode) {
        case ExpansionMode::knott: return "knott";
        case ExpansionMode::natural: return "natural";
        case ExpansionMode::raw_closure: return "raw-closure";
    }
    return "?";
}

bool ExpansionSet::contains(const DigitWord& w) const {
    return std::binary_search(members.begin(), members.end(), w);
}

ExpansionSet flip_closure(const DigitWord& w, Position floor) {
    const DigitWord start = canonicalize(w);
    std::set<DigitWord> seen{start};
    std::deque<DigitWord> queue{start};
    while (!queue.empty()) {
        const DigitWord current = std::move(queue.front());
        queue.pop_front();
        if (current.is_zero()) continue;
        for (Position p = current.high(); p - 2 >= floor && p >= current.low(); --p) {
            if (!can_flip(current, p)) continue;
            DigitWord next = flip(current, p);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    ExpansionSet out;
    out.target = evaluate(start).unit();
    out.mode = ExpansionMode::raw_closure;
    out.members.assign(seen.begin(), seen.end());
    return out;
}

ExpansionSet knott_filter(const ExpansionSet& set) {
    ExpansionSet out;
    out.target = set.target;
    out.mode = ExpansionMode::knott;
    std::copy_if(set.members.begin(), set.members.end(), std::back_inserter(out.members), satisfies_knott);
    return out;
}

ExpansionSet enumerate_knott(const BigInt& n) {
    require_positive(n, "enumerate_knott");
    const DigitWord beta = bergman_greedy(n);
    ExpansionSet out = knott_filter(flip_closure(beta, beta.low() - 2));
    out.target = n;
    return out;
}

ExpansionSet enumerate_natural(const BigInt& n) {
    require_positive(n, "enumerate_natural");
    const Position r = bergman_greedy(n).low();
    ExpansionSet out = enumerate_knott(n);
    std::erase_if(out.members, [r](const DigitWord& w) { return w.low() != r; });
    out.mode = ExpansionMode::natural;
    return out;
}

ExpansionSet brute_force_expansions(const BigInt& n, Position hi, Position lo) {
    if (hi < lo) throw DomainError("brute_force_expansions: window hi < lo");
    if (hi - lo > kBruteForceMaxWidth) {
        throw GuardRefusal("brute_force_expansions: window width " + std::to_string(hi - lo) + " exceeds " +
                           std::to_string(kBruteForceMaxWidth));
    }
    if (n.sign() < 0) throw DomainError("brute_force_expansions: N must be non-negative");

    BruteForceSearch search;
    search.hi = hi;
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    search.powers.reserve(width);
    for (Position p = hi; p >= lo; --p) search.powers.push_back(phi_power(p));
    search.tails.assign(width, GoldenInteger{});
    GoldenInteger acc;
    for (std::size_t i = width; i-- > 0;) {
        acc += search.powers[i];
        search.tails[i] = acc;
    }
    search.run(0, GoldenInteger::from_integer(n));

    ExpansionSet out;
    out.target = n;
    out.mode = ExpansionMode::raw_closure;
    out.members.assign(search.found.begin(), search.found.end());
    return out;
}

}  // namespace basephi
