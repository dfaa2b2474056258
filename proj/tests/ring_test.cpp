#include "tracech/parse.hpp"
#include "tracech/ring.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace tracech;

namespace {

RingElement p2(const char* text) { return parse_expr(text, 2); }

TEST(Ring, AdditiveIdentityAndInverse) {
    const RingElement x = p2("a + 3bc");
    EXPECT_EQ(RingElement(0) + x, x);
    EXPECT_EQ(RingElement(2) + RingElement(-2), RingElement(0));
    EXPECT_EQ(x + (-x), RingElement(0));
}

TEST(Ring, FreeSumOfDistinctMonomials) {
    EXPECT_EQ(p2("a") + p2("d"), p2("a + d"));
}

TEST(Ring, MultiplicativeIdentity) {
    const RingElement x = p2("ad - bc");
    EXPECT_EQ(RingElement(1) * x, x);
    EXPECT_EQ(x * RingElement(1), x);
}

TEST(Ring, BinomialExpansion) {
    EXPECT_EQ(p2("a+d") * p2("a+d"), p2("a^2 + 2ad + d^2"));
    EXPECT_EQ(pow(p2("a+d"), 2), p2("a^2 + 2ad + d^2"));
}

TEST(Ring, MonomialProduct) {
    EXPECT_EQ(p2("b") * p2("c"), p2("bc"));
}

TEST(Ring, Negation) {
    EXPECT_EQ(-RingElement(0), RingElement(0));
    EXPECT_EQ(-RingElement(5), RingElement(-5));
    EXPECT_EQ(-p2("ad - bc"), p2("bc - ad"));
}

TEST(Ring, IntegerPromotionOnMixedArithmetic) {
    EXPECT_EQ(RingElement(2) + p2("a"), p2("a + 2"));
    EXPECT_EQ(RingElement(3) * p2("a + d"), p2("3a + 3d"));
    EXPECT_EQ(p2("a") - p2("a"), RingElement(0));  // collapses back to an integer
    EXPECT_TRUE((p2("a") * RingElement(0)).is_integer());
}

TEST(Parse, TwoByTwoShorthandForms) {
    EXPECT_EQ(p2("ad - bc"),
              RingElement::variable({1, 1}) * RingElement::variable({2, 2}) -
                  RingElement::variable({1, 2}) * RingElement::variable({2, 1}));
    EXPECT_EQ(p2("0"), RingElement(0));
    EXPECT_TRUE(p2("0").is_integer());
    EXPECT_EQ(p2("(a+d)^2"), p2("a^2 + 2ad + d^2"));
}

TEST(Parse, FullVariableNamesAndUnicodeMinus) {
    EXPECT_EQ(parse_expr("a_1_1*a_2_2 - a_1_2*a_2_1", 2), p2("ad - bc"));
    EXPECT_EQ(parse_expr("ad \xE2\x88\x92 bc", 2), p2("ad - bc"));
    EXPECT_EQ(parse_expr("-(a+d)", 2), -p2("a+d"));
}

TEST(Parse, AliasGridForOrderThree) {
    // Row-major letters: e is the (2,2) entry of a 3x3 matrix.
    EXPECT_EQ(parse_expr("e", 3), RingElement::variable({2, 2}));
    EXPECT_EQ(parse_expr("aei", 3), RingElement::variable({1, 1}) *
                                        RingElement::variable({2, 2}) *
                                        RingElement::variable({3, 3}));
}

TEST(Parse, ErrorsCarryPositions) {
    EXPECT_THROW(parse_expr("a +", 2), ParseError);
    EXPECT_THROW(parse_expr("(a + d", 2), ParseError);
    EXPECT_THROW(parse_expr("a_3_1", 2), ParseError);  // index out of range for n=2
    EXPECT_THROW(parse_expr("e", 2), ParseError);      // alias beyond the 2x2 grid
    EXPECT_THROW(parse_expr("x", 4), ParseError);      // aliases undefined for n > 3
    EXPECT_THROW(parse_expr("a^-1", 2), ParseError);
    try {
        parse_expr("a + $", 2);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(Format, CanonicalDescendingOrder) {
    EXPECT_EQ(to_string(p2("d^2 + 2ad + a^2"), FormatOptions{2}), "a^2 + 2ad + d^2");
    EXPECT_EQ(to_string(p2("ad - bc"), FormatOptions{2}), "ad - bc");
    EXPECT_EQ(to_string(-p2("a + d"), FormatOptions{2}), "-a - d");
    EXPECT_EQ(to_string(RingElement(-7)), "-7");
    EXPECT_EQ(to_string(p2("a_1_1^2*a_2_1")), "a_1_1^2*a_2_1");
}

// --- property tests over randomly generated elements ---------------------

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    RingElement element() {
        if (rng_() % 4 == 0) return RingElement(static_cast<long long>(rng_() % 41) - 20);
        RingElement acc;
        const int terms = 1 + static_cast<int>(rng_() % 4);
        for (int t = 0; t < terms; ++t) {
            RingElement mono(static_cast<long long>(rng_() % 41) - 20);
            const int vars = static_cast<int>(rng_() % 3);
            for (int v = 0; v < vars; ++v) {
                const int i = 1 + static_cast<int>(rng_() % 3);
                const int j = 1 + static_cast<int>(rng_() % 3);
                mono *= pow(RingElement::variable({i, j}), 1 + static_cast<unsigned>(rng_() % 3));
            }
            acc += mono;
        }
        return acc;
    }

private:
    std::mt19937_64 rng_;
};

TEST(RingProperties, RingLaws) {
    Gen gen(20240101);
    for (int round = 0; round < 200; ++round) {
        const RingElement x = gen.element(), y = gen.element(), z = gen.element();
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + RingElement(0), x);
        EXPECT_EQ(x * RingElement(1), x);
        EXPECT_EQ(x + (-x), RingElement(0));
    }
}

TEST(RingProperties, CanonicalFormNeverStoresZeroTerms) {
    Gen gen(7);
    for (int round = 0; round < 200; ++round) {
        const RingElement x = gen.element(), y = gen.element();
        for (const RingElement& v : {x + y, x * y, x - y}) {
            if (v.is_integer()) continue;
            for (const auto& [m, c] : v.terms()) {
                EXPECT_NE(c, 0);
                (void)m;
            }
            // constant-only polynomials must have collapsed to integers
            EXPECT_TRUE(v.terms().size() > 1 || !v.terms().begin()->first.is_constant());
        }
    }
}

TEST(RingProperties, FormatParseRoundTrip) {
    Gen gen(99);
    for (int round = 0; round < 200; ++round) {
        const RingElement x = gen.element();
        EXPECT_EQ(parse_expr(to_string(x), 3), x);
        EXPECT_EQ(parse_expr(to_string(x, FormatOptions{3}), 3), x);
    }
}

}  // namespace
