#include "basephi/render.hpp"

#include <limits>
#include <sstream>

#include "basephi/errors.hpp"

namespace basephi {

namespace {

void append_digit(std::string& out, Digit d) {
    if (d < 10) {
        out.push_back(static_cast<char>('0' + d));
    } else {
        out += '(' + std::to_string(d) + ')';
    }
}

void parse_digits(std::string_view text, std::vector<Digit>& out) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9') {
            out.push_back(static_cast<Digit>(c - '0'));
            continue;
        }
        if (c == '(') {
            const auto close = text.find(')', i);
            if (close == std::string_view::npos || close == i + 1) {
                throw MalformedWord("unterminated digit group in '" + std::string(text) + "'");
            }
            Digit d = 0;
            for (std::size_t j = i + 1; j < close; ++j) {
                if (text[j] < '0' || text[j] > '9') throw MalformedWord("bad digit group in '" + std::string(text) + "'");
                d = d * 10 + static_cast<Digit>(text[j] - '0');
            }
            out.push_back(d);
            i = close;
            continue;
        }
        throw MalformedWord("unexpected character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
    }
}

}  // namespace

std::string render_word(const DigitWord& w) {
    const DigitWord c = canonicalize(w);
    std::string out;
    const Position top = std::max(c.high(), 0);
    for (Position p = top; p >= 0; --p) append_digit(out, c.at(p));
    if (c.low() < 0) {
        out.push_back('.');
        for (Position p = -1; p >= c.low(); --p) append_digit(out, c.at(p));
    }
    return out;
}

RenderedExpansion render_expansion(const DigitWord& w) {
    const DigitWord c = canonicalize(w);
    return {render_word(c), c.high(), c.low(), evaluate(c)};
}

DigitWord parse_word(std::string_view text) {
    const auto dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() || (dot != std::string_view::npos && frac.empty())) {
        throw MalformedWord("cannot parse word '" + std::string(text) + "'");
    }
    if (frac.find('.') != std::string_view::npos) {
        throw MalformedWord("more than one radix point in '" + std::string(text) + "'");
    }
    std::vector<Digit> digits;
    parse_digits(whole, digits);
    const auto integer_digits = static_cast<Position>(digits.size());
    parse_digits(frac, digits);
    return {integer_digits - 1, std::move(digits)};
}

DigitWord parse_expansion(std::string_view text) { return canonicalize(parse_word(text)); }

nlohmann::ordered_json bigint_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

nlohmann::ordered_json expansion_set_to_json(const ExpansionSet& set) {
    nlohmann::ordered_json out;
    out["n"] = bigint_to_json(set.target);
    out["mode"] = to_string(set.mode);
    auto& rows = out["expansions"] = nlohmann::ordered_json::array();
    for (const auto& w : set.members) {
        rows.push_back({{"word", render_word(w)}, {"L", w.high()}, {"R", w.low()}});
    }
    return out;
}

std::string expansion_set_to_csv(const ExpansionSet& set) {
    std::ostringstream os;
    os << "word,L,R\n";
    for (const auto& w : set.members) os << render_word(w) << ',' << w.high() << ',' << w.low() << '\n';
    return os.str();
}

}  // namespace basephi
