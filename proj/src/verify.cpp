#include "basephi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "basephi/bergman.hpp"
#include "basephi/counting.hpp"
#include "basephi/enumeration.hpp"
#include "basephi/errors.hpp"
#include "basephi/golden.hpp"
#include "basephi/render.hpp"
#include "basephi/words.hpp"

namespace basephi {

namespace {

// Published listings, index 0 first.
constexpr int kKappaListing[] = {1, 1, 2, 3, 3, 5, 5, 5, 8, 8, 8, 5, 10, 13, 12, 12, 13, 10, 7, 15, 18};
// Same counts in the OEIS A289749 layout: one leading 0, then TotKap(0), TotKap(1), ...
constexpr int kKappaOffsetListing[] = {0,  1,  1,  2,  3,  3,  5,  5,  5,  8,  8,  8,  5,  10, 13, 12,
                                       12, 13, 10, 7,  15, 18, 21, 16, 20, 20, 16, 21, 18, 15, 7,  17};
constexpr int kNuListing[] = {1, 1, 2, 2, 1, 5, 5, 4, 5, 4, 3, 1, 10, 13, 12, 12, 13, 10, 6, 11, 12};
constexpr int kFibListing[] = {1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 3, 3, 2, 4, 2, 3, 3, 1, 4, 3, 3, 5};

class Checker {
public:
    explicit Checker(SuiteReport& report) : report_(report) {}

    template <typename A, typename B>
    void expect_equal(const std::string& input, const A& expected, const B& actual) {
        ++report_.checks;
        if (!(expected == actual)) report_.failures.push_back({input, str(expected), str(actual)});
    }

    void expect(const std::string& input, bool ok, const std::string& expected, const std::string& actual) {
        ++report_.checks;
        if (!ok) report_.failures.push_back({input, expected, actual});
    }

    // Several sub-conditions counted as one check.
    void expect_all(const std::string& input, const std::vector<SuiteFailure>& problems) {
        ++report_.checks;
        for (const auto& p : problems) report_.failures.push_back({input + " " + p.input, p.expected, p.actual});
    }

    void note(std::string line) { report_.notes.push_back(std::move(line)); }

private:
    template <typename T>
    static std::string str(const T& x) {
        if constexpr (std::is_same_v<T, DigitWord>) {
            return render_word(x);
        } else {
            std::ostringstream os;
            os << x;
            return os.str();
        }
    }

    SuiteReport& report_;
};

std::string words_to_string(const std::vector<DigitWord>& words) {
    std::string out = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ' ';
        out += render_word(words[i]);
    }
    return out + "}";
}

std::string idx(const char* name, std::int64_t n) { return std::string(name) + "=" + std::to_string(n); }

void suite_fib_totkap(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 1; n <= bound; ++n) c.expect_equal(idx("n", n), fibonacci(n), tot_kappa(fibonacci(n)));
}

void suite_lucas_totkap(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 1; n <= bound; ++n) {
        const BigInt want = 2 * n + 1;
        std::vector<SuiteFailure> problems;
        const BigInt even = tot_kappa(lucas(2 * n));
        const BigInt odd = tot_kappa(lucas(2 * n + 1));
        if (even != want) problems.push_back({"TotKap(L_2n)", want.str(), even.str()});
        if (odd != want) problems.push_back({"TotKap(L_2n+1)", want.str(), odd.str()});
        c.expect_all(idx("n", n), problems);
    }
}

void suite_totnu_fib(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 0; n <= bound; ++n) {
        std::vector<SuiteFailure> problems;
        const BigInt even = tot_nu(fibonacci(2 * n + 2));
        const BigInt odd = tot_nu(fibonacci(2 * n + 3));
        if (even != fibonacci(2 * n + 1)) problems.push_back({"TotNu(F_2n+2)", fibonacci(2 * n + 1).str(), even.str()});
        if (odd != fibonacci(2 * n + 3)) problems.push_back({"TotNu(F_2n+3)", fibonacci(2 * n + 3).str(), odd.str()});
        c.expect_all(idx("n", n), problems);
    }
}

void suite_count_bridge(Checker& c, std::int64_t bound) {
    c.expect_equal("TotNu(4)", BigInt(1), tot_nu(4));
    c.expect_equal("TotFIB(12)", BigInt(1), tot_fib(12));
    c.expect_equal("TotNu(14)", BigInt(12), tot_nu(14));
    c.expect_equal("TotFIB(294)", BigInt(12), tot_fib(294));
    for (std::int64_t n = 4; n <= bound; ++n) c.expect_equal(idx("N", n), tot_nu(n), totnu_via_fib(n));
    for (int n = 1; n <= 3; ++n) {
        const Position r = bergman_greedy(n).low();
        const BigInt via = tot_fib(fibonacci(2 - r) * n);
        c.note("N=" + std::to_string(n) + " (outside the stated range): TotNu=" + tot_nu(n).str() +
               ", TotFIB(F_{2-R}N)=" + via.str() + (via == tot_nu(n) ? " (agree)" : " (differ)"));
    }
}

void suite_prop_s(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 2; n <= bound; ++n) {
        const DigitWord beta = bergman_greedy(n);
        const LucasIntervalInfo info = classify_lucas_interval(n);
        const int s1 = block_factorization(beta).s(1);
        const Parity tail = s1 % 2 != 0 ? Parity::even : Parity::odd;
        const int want_r = info.parity == Parity::even ? 2 * info.n : 2 * info.n + 2;
        std::vector<SuiteFailure> problems;
        if (tail != info.parity) {
            problems.push_back({"s_1 parity", to_string(info.parity) + " interval needs " +
                                                  (info.parity == Parity::even ? "odd" : "even") + " s_1",
                                "s_1=" + std::to_string(s1)});
        }
        if (-beta.low() != want_r) {
            problems.push_back({"-R", std::to_string(want_r), std::to_string(-beta.low())});
        }
        c.expect_all(idx("N", n), problems);
    }
}

void suite_closed_forms(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 3; n <= bound; ++n) {
        c.expect_equal("F_" + std::to_string(n), bergman_greedy(fibonacci(n)), bergman_fibonacci(n));
    }
    for (std::int64_t n = 2; n <= bound; ++n) {
        c.expect_equal("L_" + std::to_string(n), bergman_greedy(lucas(n)), bergman_lucas(n));
    }
}

void suite_oracle_equivalence(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 1; n <= bound; ++n) {
        const DigitWord beta = bergman_greedy(n);
        const ExpansionSet raw = brute_force_expansions(n, beta.high() + 2, beta.low() - 6);
        const ExpansionSet brute_knott = knott_filter(raw);
        std::vector<DigitWord> brute_natural;
        std::copy_if(brute_knott.members.begin(), brute_knott.members.end(), std::back_inserter(brute_natural),
                     [&](const DigitWord& w) { return w.low() == beta.low(); });

        const ExpansionSet knott = enumerate_knott(n);
        const ExpansionSet natural = enumerate_natural(n);
        std::vector<SuiteFailure> problems;
        if (brute_knott.members != knott.members) {
            problems.push_back({"knott sets", words_to_string(brute_knott.members), words_to_string(knott.members)});
        }
        if (brute_natural != natural.members) {
            problems.push_back({"natural sets", words_to_string(brute_natural), words_to_string(natural.members)});
        }
        if (BigInt(knott.size()) != tot_kappa(n)) {
            problems.push_back({"|knott| vs TotKap", tot_kappa(n).str(), std::to_string(knott.size())});
        }
        if (BigInt(natural.size()) != tot_nu(n)) {
            problems.push_back({"|natural| vs TotNu", tot_nu(n).str(), std::to_string(natural.size())});
        }
        c.expect_all(idx("N", n), problems);
    }
}

void suite_reachability(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 1; n <= bound; ++n) {
        const DigitWord beta = bergman_greedy(n);
        const GoldenInteger value = GoldenInteger::from_integer(n);
        std::vector<SuiteFailure> problems;
        for (const DigitWord& w : enumerate_knott(n).members) {
            if (evaluate(w) != value) problems.push_back({render_word(w) + " value", value.to_string(), evaluate(w).to_string()});
            const DigitWord back = reduce_to_bergman(w);
            if (back != beta) problems.push_back({render_word(w) + " reduces to", render_word(beta), render_word(back)});
        }
        c.expect_all(idx("N", n), problems);
    }
}

void suite_interval_membership(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 1; n <= bound; ++n) {
        const LucasIntervalInfo even = classify_lucas_interval(fibonacci(2 * n + 2));
        const LucasIntervalInfo odd = classify_lucas_interval(fibonacci(2 * n + 3));
        std::vector<SuiteFailure> problems;
        if (even.index() != 2 * n) {
            problems.push_back({"F_2n+2", "Lambda_" + std::to_string(2 * n), "Lambda_" + std::to_string(even.index())});
        }
        if (odd.index() != 2 * n + 1) {
            problems.push_back({"F_2n+3", "Lambda_" + std::to_string(2 * n + 1), "Lambda_" + std::to_string(odd.index())});
        }
        c.expect_all(idx("n", n), problems);
    }
}

void suite_squares(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 1; n <= bound; ++n) {
        const BigInt f_even = fibonacci(2 * n);
        const BigInt f_odd = fibonacci(2 * n + 1);
        c.expect_equal("TotFIB(F_" + std::to_string(2 * n) + "^2)", fibonacci(2 * n - 1), tot_fib(f_even * f_even));
        c.expect_equal("TotFIB(F_" + std::to_string(2 * n + 1) + "^2-2)", fibonacci(2 * n), tot_fib(f_odd * f_odd - 2));
    }
}

void suite_klarner(Checker& c, std::int64_t bound) {
    for (std::int64_t m = 4; m <= bound; ++m) {
        const BigInt fm = fibonacci(m);
        const BigInt fm1 = fibonacci(m + 1);
        for (BigInt n = fm; n < fm1 - 1; ++n) {
            c.expect_equal("m=" + std::to_string(m) + " n=" + n.str(), tot_fib(n),
                           tot_fib(n - fm) + tot_fib(fm1 - n - 2));
        }
    }
}

void suite_lucas_products(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 1; n <= bound; ++n) {
        const BigInt f = fibonacci(2 * n + 2);
        std::vector<SuiteFailure> problems;
        const BigInt even = tot_fib(f * lucas(2 * n));
        const BigInt odd = tot_fib(f * lucas(2 * n + 1));
        if (even != 2 * n) problems.push_back({"TotFIB(F_2n+2 L_2n)", std::to_string(2 * n), even.str()});
        if (odd != 1) problems.push_back({"TotFIB(F_2n+2 L_2n+1)", "1", odd.str()});
        if (f * lucas(2 * n + 1) != fibonacci(4 * n + 3) - 1) {
            problems.push_back({"F_2n+2 L_2n+1", (fibonacci(4 * n + 3) - 1).str(), (f * lucas(2 * n + 1)).str()});
        }
        if (tot_nu(lucas(2 * n)) != 2 * n) problems.push_back({"TotNu(L_2n)", std::to_string(2 * n), tot_nu(lucas(2 * n)).str()});
        if (tot_nu(lucas(2 * n + 1)) != 1) problems.push_back({"TotNu(L_2n+1)", "1", tot_nu(lucas(2 * n + 1)).str()});
        c.expect_all(idx("n", n), problems);
    }
}

void suite_fib_minus_one(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 3; n <= bound; ++n) c.expect_equal(idx("n", n), BigInt(1), tot_fib(fibonacci(n) - 1));
}

void suite_fib_oracle(Checker& c, std::int64_t bound) {
    for (std::int64_t m = 0; m <= bound; ++m) c.expect_equal(idx("M", m), tot_fib_oracle(m), tot_fib(m));
}

void suite_constructors(Checker& c, std::int64_t bound) {
    for (std::int64_t n = 0; n <= bound; ++n) c.expect_equal(idx("N", n), bergman_greedy(n), bergman_recursive(n));
}

template <std::size_t K>
void check_listing(Checker& c, const char* name, const int (&listing)[K], std::int64_t offset, std::int64_t bound,
                   BigInt (*count)(const BigInt&)) {
    for (std::size_t i = static_cast<std::size_t>(offset); i < K; ++i) {
        const auto n = static_cast<std::int64_t>(i) - offset;
        if (n > bound) break;
        c.expect_equal(std::string(name) + "(" + std::to_string(n) + ")", BigInt(listing[i]), count(n));
    }
}

void suite_listings(Checker& c, std::int64_t bound) {
    check_listing(c, "TotKap", kKappaListing, 0, bound, tot_kappa);
    check_listing(c, "TotKap[offset 1]", kKappaOffsetListing, 1, bound, tot_kappa);
    check_listing(c, "TotNu", kNuListing, 0, bound, tot_nu);
    check_listing(c, "TotFIB", kFibListing, 0, bound, tot_fib);
    c.note("the A289749-style listing starts with an extra 0; its entry i is compared with TotKap(i-1)");
}

using SuiteFn = void (*)(Checker&, std::int64_t);

struct SuiteEntry {
    SuiteInfo info;
    SuiteFn run;
};

const std::vector<SuiteEntry>& entries() {
    static const std::vector<SuiteEntry> table{
        {{"fib-totkap", "TotKap(F_n) = F_n, n = 1..bound", 25}, suite_fib_totkap},
        {{"lucas-totkap", "TotKap(L_2n) = TotKap(L_2n+1) = 2n+1, n = 1..bound", 12}, suite_lucas_totkap},
        {{"totnu-fib", "TotNu(F_2n+2) = F_2n+1 and TotNu(F_2n+3) = F_2n+3, n = 0..bound", 10}, suite_totnu_fib},
        {{"count-bridge", "TotNu(N) = TotFIB(F_{2-R(N)} N), N = 4..bound", 500}, suite_count_bridge},
        {{"prop-s", "tail gap parity and -R(N) per Lucas interval, N = 2..bound", 10000}, suite_prop_s},
        {{"closed-forms", "closed Bergman forms of F_n and L_n against greedy, n <= bound", 30}, suite_closed_forms},
        {{"oracle-equivalence", "brute-force window search against flip closure and counts, N = 1..bound", 300},
         suite_oracle_equivalence},
        {{"reachability", "every Knott expansion reduces to beta(N), N = 1..bound", 2000}, suite_reachability},
        {{"interval-membership", "F_2n+2 in Lambda_2n and F_2n+3 in Lambda_2n+1, n = 1..bound", 15},
         suite_interval_membership},
        {{"squares", "TotFIB(F_2n^2) = F_2n-1 and TotFIB(F_2n+1^2 - 2) = F_2n, n = 1..bound", 8}, suite_squares},
        {{"klarner", "TotFIB(n) = TotFIB(n - F_m) + TotFIB(F_m+1 - n - 2), m = 4..bound", 18}, suite_klarner},
        {{"lucas-products", "TotFIB(F_2n+2 L_2n) = 2n and TotFIB(F_2n+2 L_2n+1) = 1, n = 1..bound", 8},
         suite_lucas_products},
        {{"fib-minus-one", "TotFIB(F_n - 1) = 1, n = 3..bound", 25}, suite_fib_minus_one},
        {{"fib-oracle", "TotFIB(M) by block recursion against subset-sum count, M = 0..bound", 3000}, suite_fib_oracle},
        {{"constructors", "recursive Bergman construction against greedy, N = 0..bound", 100000}, suite_constructors},
        {{"listings", "published TotKap, TotNu and TotFIB listings, index <= bound", 30}, suite_listings},
    };
    return table;
}

const SuiteEntry& find_entry(const std::string& name) {
    for (const auto& e : entries()) {
        if (e.info.name == name) return e;
    }
    throw UsageError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> catalog = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return catalog;
}

SuiteReport run_suite(const std::string& name, std::int64_t bound) {
    const SuiteEntry& entry = find_entry(name);
    if (bound < 1) throw UsageError("suite bound must be at least 1");
    SuiteReport report;
    report.suite = name;
    report.bound = bound;
    const auto start = std::chrono::steady_clock::now();
    Checker checker(report);
    entry.run(checker, bound);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, std::int64_t bound) {
    for (const auto& name : names) find_entry(name);
    std::vector<std::future<SuiteReport>> pending;
    pending.reserve(names.size());
    for (const auto& name : names) {
        const std::int64_t b = bound > 0 ? bound : find_entry(name).info.default_bound;
        pending.push_back(std::async(std::launch::async, run_suite, name, b));
    }
    std::vector<SuiteReport> out;
    out.reserve(names.size());
    for (auto& f : pending) out.push_back(f.get());
    return out;
}

nlohmann::ordered_json report_to_json(const SuiteReport& report) {
    nlohmann::ordered_json out;
    out["suite"] = report.suite;
    out["bound"] = report.bound;
    out["checks"] = report.checks;
    out["passed"] = report.passed();
    auto& failures = out["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    }
    out["notes"] = report.notes;
    out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

std::string report_to_text(const SuiteReport& report) {
    std::ostringstream os;
    os << (report.passed() ? "PASS" : "FAIL") << "  " << report.suite << "  bound=" << report.bound
       << "  checks=" << report.checks << "  failures=" << report.failures.size() << "  ("
       << static_cast<long long>(report.elapsed_ms) << " ms)\n";
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < report.failures.size() && i < kShown; ++i) {
        const auto& f = report.failures[i];
        os << "    " << f.input << ": expected " << f.expected << ", got " << f.actual << '\n';
    }
    if (report.failures.size() > kShown) os << "    ... " << report.failures.size() - kShown << " more\n";
    for (const auto& note : report.notes) os << "    note: " << note << '\n';
    return os.str();
}

}  // namespace basephi
