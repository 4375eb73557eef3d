#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "basephi/enumeration.hpp"
#include "basephi/words.hpp"

namespace basephi {

/// Text form of an expansion: digits most significant first, '.' before
/// position -1 when the word has fractional digits, e.g. "1000.1001".
struct RenderedExpansion {
    std::string word;
    Position high = 0;
    Position low = 0;
    GoldenInteger value;
};

/// Renders the canonical form of w. Digits above 9 render as "(d)".
std::string render_word(const DigitWord& w);
RenderedExpansion render_expansion(const DigitWord& w);

/// Literal parse: leading and trailing zeros are kept, so "0101.0110" has
/// high 3 and low -4. Throws MalformedWord.
DigitWord parse_word(std::string_view text);

/// parse_word followed by canonicalize; inverse of render_word.
DigitWord parse_expansion(std::string_view text);

/// {"n": ..., "mode": ..., "expansions": [{"word": ..., "L": ..., "R": ...}]}
nlohmann::ordered_json expansion_set_to_json(const ExpansionSet& set);

/// Header "word,L,R" then one row per member.
std::string expansion_set_to_csv(const ExpansionSet& set);

/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json bigint_to_json(const BigInt& x);

}  // namespace basephi
