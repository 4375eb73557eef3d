#include <gtest/gtest.h>

#include "basephi/bergman.hpp"
#include "basephi/enumeration.hpp"
#include "basephi/errors.hpp"
#include "basephi/render.hpp"

using namespace basephi;

TEST(Render, Examples) {
    EXPECT_EQ(render_word(bergman_greedy(4)), "101.01");
    EXPECT_EQ(render_word(bergman_greedy(5)), "1000.1001");
    EXPECT_EQ(render_word(bergman_greedy(1)), "1");
    EXPECT_EQ(render_word(DigitWord()), "0");
    EXPECT_EQ(render_word(parse_expansion("0.11")), "0.11");
    // Integer part is padded down to position 0.
    EXPECT_EQ(render_word(DigitWord(3, {1, 1})), "1100");
}

TEST(Render, ExpansionFields) {
    const RenderedExpansion r = render_expansion(bergman_greedy(14));
    EXPECT_EQ(r.word, "100100.001001");
    EXPECT_EQ(r.high, 5);
    EXPECT_EQ(r.low, -6);
    EXPECT_EQ(r.value, GoldenInteger::from_integer(14));
}

TEST(Parse, LiteralKeepsZeros) {
    const DigitWord x = parse_word("0101.0110");
    EXPECT_EQ(x.high(), 3);
    EXPECT_EQ(x.low(), -4);
    EXPECT_FALSE(x.is_canonical());
    EXPECT_EQ(parse_word("(12)0").at(1), 12u);
}

TEST(Parse, Rejects) {
    for (const char* bad : {"", ".", "1.", ".1", "1..0", "1.0.1", "1a", "-1", "(", "()1"}) {
        EXPECT_THROW(parse_word(bad), MalformedWord) << bad;
    }
}

TEST(Render, RoundTripOverEnumeratedExpansions) {
    for (long n = 1; n <= 2000; ++n) {
        const DigitWord beta = bergman_greedy(n);
        ASSERT_EQ(parse_expansion(render_word(beta)), beta);
        if (n <= 400) {
            for (const auto& m : enumerate_knott(n).members) {
                const RenderedExpansion r = render_expansion(m);
                const DigitWord back = parse_expansion(r.word);
                ASSERT_EQ(back, m);
                ASSERT_EQ(back.high(), r.high);
                ASSERT_EQ(back.low(), r.low);
            }
        }
    }
}

TEST(Json, EnumerationSchema) {
    const auto j = expansion_set_to_json(enumerate_knott(4));
    EXPECT_EQ(j.dump(),
              R"({"n":4,"mode":"knott","expansions":[{"word":"100.1111","L":2,"R":-4},)"
              R"({"word":"11.1111","L":1,"R":-4},{"word":"101.01","L":2,"R":-2}]})");
}

TEST(Csv, EnumerationRows) {
    EXPECT_EQ(expansion_set_to_csv(enumerate_natural(3)), "word,L,R\n100.01,2,-2\n11.01,1,-2\n");
}

TEST(Json, BigValuesBecomeStrings) {
    EXPECT_EQ(bigint_to_json(BigInt(42)).dump(), "42");
    EXPECT_EQ(bigint_to_json(fibonacci(120)).dump(), "\"" + fibonacci(120).str() + "\"");
}
