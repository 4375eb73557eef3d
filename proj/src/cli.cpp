#include "basephi/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "basephi/bergman.hpp"
#include "basephi/counting.hpp"
#include "basephi/enumeration.hpp"
#include "basephi/errors.hpp"
#include "basephi/render.hpp"
#include "basephi/verify.hpp"

namespace basephi::cli {

namespace {

BigInt parse_natural(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("expected a non-negative integer, got '" + text + "'");
    }
    return BigInt(text);
}

BigInt count_of(const std::string& what, const BigInt& n) {
    if (what == "kappa") return tot_kappa(n);
    if (what == "nu") return tot_nu(n);
    return tot_fib(n);
}

int cmd_expand(const std::string& arg, const std::string& method, std::ostream& out, std::ostream& err) {
    const BigInt n = parse_natural(arg);
    if (method == "greedy") {
        out << render_word(bergman_greedy(n)) << '\n';
        return kSuccess;
    }
    if (method == "recursive") {
        out << render_word(bergman_recursive(n)) << '\n';
        return kSuccess;
    }
    const DigitWord greedy = bergman_greedy(n);
    const DigitWord recursive = bergman_recursive(n);
    out << render_word(greedy) << '\n';
    if (greedy != recursive) {
        err << "mismatch: greedy " << render_word(greedy) << ", recursive " << render_word(recursive) << '\n';
        return kCheckFailed;
    }
    return kSuccess;
}

int cmd_enumerate(const std::string& arg, const std::string& mode, const std::string& format, std::ostream& out) {
    const BigInt n = parse_natural(arg);
    if (n < 1) throw UsageError("enumerate needs N >= 1");
    if (tot_kappa(n) > kEnumerateLimit) {
        throw GuardRefusal("N = " + n.str() + " has " + tot_kappa(n).str() + " Knott expansions, more than " +
                           std::to_string(kEnumerateLimit));
    }
    const ExpansionSet set = mode == "natural" ? enumerate_natural(n) : enumerate_knott(n);
    if (format == "json") {
        out << expansion_set_to_json(set).dump() << '\n';
    } else if (format == "csv") {
        out << expansion_set_to_csv(set);
    } else {
        for (const auto& w : set.members) out << render_word(w) << '\n';
    }
    return kSuccess;
}

int cmd_sequence(const std::string& what, const std::string& from, const std::string& to, const std::string& format,
                 std::ostream& out) {
    const BigInt lo = parse_natural(from);
    const BigInt hi = parse_natural(to);
    if (hi < lo) throw UsageError("--to must not be smaller than --from");
    if (format == "csv") out << "n,value\n";
    for (BigInt n = lo; n <= hi; ++n) {
        if (format == "csv") out << n << ',';
        out << count_of(what, n) << '\n';
    }
    return kSuccess;
}

int cmd_classify(const std::string& arg, std::ostream& out) {
    const BigInt n = parse_natural(arg);
    const LucasIntervalInfo info = classify_lucas_interval(n);
    const DigitWord beta = bergman_greedy(n);
    const int s1 = block_factorization(beta).s(1);
    out << "N: " << n << '\n';
    out << "interval: Lambda_" << info.index() << " [" << info.bounds.lo << ", " << info.bounds.hi << "] ("
        << to_string(info.parity) << ", n=" << info.n << ")\n";
    if (info.subinterval) {
        out << "subinterval: " << to_string(info.subinterval->which) << '_' << info.n << " ["
            << info.subinterval->bounds.lo << ", " << info.subinterval->bounds.hi << "]\n";
    } else {
        out << "subinterval: none\n";
    }
    out << "beta: " << render_word(beta) << '\n';
    out << "L: " << beta.high() << '\n';
    out << "R: " << beta.low() << '\n';
    out << "s1: " << s1 << " (" << (s1 % 2 == 0 ? "even" : "odd") << ")\n";
    return kSuccess;
}

int cmd_verify(const std::string& suite, std::int64_t bound, const std::string& format, std::ostream& out) {
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& info : suite_catalog()) names.push_back(info.name);
    } else {
        names.push_back(suite);
    }
    const auto reports = run_suites(names, bound);
    bool ok = true;
    if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        out << arr.dump(2) << '\n';
    }
    for (const auto& r : reports) {
        if (format != "json") out << report_to_text(r);
        ok = ok && r.passed();
    }
    return ok ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact base-phi expansions: Bergman form, Knott and natural expansions, representation counts"};
    app.require_subcommand(1);

    std::string n_arg;
    std::string method = "greedy";
    auto* expand = app.add_subcommand("expand", "Print the Bergman expansion of N");
    expand->add_option("N", n_arg, "non-negative integer")->required();
    expand->add_option("--method", method, "constructor")->check(CLI::IsMember({"greedy", "recursive", "both"}));

    std::string mode = "knott";
    std::string format = "text";
    auto* enumerate = app.add_subcommand("enumerate", "List every Knott or natural expansion of N");
    enumerate->add_option("N", n_arg, "positive integer")->required();
    enumerate->add_option("--mode", mode)->check(CLI::IsMember({"knott", "natural"}));
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    std::string what = "kappa";
    auto* count = app.add_subcommand("count", "Print TotKap, TotNu or TotFIB of N");
    count->add_option("N", n_arg, "non-negative integer")->required();
    count->add_option("--what", what)->check(CLI::IsMember({"kappa", "nu", "fib"}));

    std::string from;
    std::string to;
    auto* sequence = app.add_subcommand("sequence", "Print a(from..to), one value per line");
    sequence->add_option("--what", what)->required()->check(CLI::IsMember({"kappa", "nu", "fib"}));
    sequence->add_option("--from", from)->required();
    sequence->add_option("--to", to)->required();
    sequence->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    auto* classify = app.add_subcommand("classify", "Locate N among the Lucas intervals");
    classify->add_option("N", n_arg, "integer >= 2")->required();

    std::string suite = "all";
    std::int64_t bound = 0;
    auto* verify = app.add_subcommand("verify", "Run the theorem suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--bound", bound, "upper end of each suite's range (default: per suite)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*expand) return cmd_expand(n_arg, method, out, err);
        if (*enumerate) return cmd_enumerate(n_arg, mode, format, out);
        if (*count) {
            out << count_of(what, parse_natural(n_arg)) << '\n';
            return kSuccess;
        }
        if (*sequence) return cmd_sequence(what, from, to, format, out);
        if (*classify) return cmd_classify(n_arg, out);
        if (*verify) return cmd_verify(suite, bound, format, out);
    } catch (const GuardRefusal& e) {
        err << "refused: " << e.what() << '\n';
        return kGuardRefused;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsageError;
}

}  // namespace basephi::cli
