#include <gtest/gtest.h>

#include <map>

#include "rigidity/catalog.hpp"
#include "rigidity/presentation.hpp"
#include "test_support.hpp"

using namespace rigidity;
using namespace rigidity::testing;

namespace {

constexpr const char* kF4C3File = R"(# F4/C3.S^1
presentation "F4_C3"
var y1 deg 1
var y4 deg 4
rel g8 deg 8 = 24*y4^2 + y1^8 - 12*y1^4*y4
rel g12 deg 12 = y1^12 - 24*y1^8*y4 + 144*y1^4*y4^2 - 64*y4^3
)";

ParseError parse_error_of(const std::string& src) {
    try {
        parse_presentation(src);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for:\n" << src;
    return ParseError("none", 0, 0);
}

}  // namespace

TEST(Builtin, Shapes) {
    auto f4 = builtin("F4_C3");
    EXPECT_EQ(f4.ctx().names(), (std::vector<std::string>{"y1", "y4"}));
    EXPECT_EQ(f4.ctx().weights(), (std::vector<unsigned>{1, 4}));
    ASSERT_EQ(f4.relations.size(), 2u);
    EXPECT_EQ(f4.relations[0].label, "g8");
    EXPECT_EQ(f4.relations[1].label, "g12");

    auto e6 = builtin("E6_A6");
    EXPECT_EQ(e6.ctx().weights(), (std::vector<unsigned>{1, 3, 4}));
    EXPECT_EQ(e6.relations.size(), 3u);

    auto e7 = builtin("E7_A7");
    EXPECT_EQ(e7.ctx().names(), (std::vector<std::string>{"y1", "y3", "y4", "y5", "y7"}));
    EXPECT_EQ(e7.relations.size(), 5u);
    EXPECT_EQ(e7.kaehler, 0u);
}

TEST(Builtin, RepeatedCallsAgreeAndUnknownThrows) {
    for (const auto& n : builtin_names()) EXPECT_EQ(builtin(n), builtin(n)) << n;
    EXPECT_THROW(builtin("G2_A1"), InvalidArgument);
}

TEST(Builtin, EveryRelationHomogeneousOfItsLabel) {
    for (const auto& n : builtin_names()) {
        auto p = builtin(n);
        for (const auto& r : p.relations) {
            EXPECT_EQ("g" + std::to_string(r.weight), r.label) << n;
            EXPECT_EQ(weighted_degree(r.poly), (WeightedDegree{WeightedDegree::Kind::homogeneous, r.weight}))
                << n << " " << r.label;
        }
    }
}

TEST(Builtin, ChecksumsPinned) {
    // Pins the coefficient lists; a change here means the catalog text was edited.
    const std::map<std::string, std::string> pins = {
        {"F4_C3", "0390098b9bace7a0"}, {"F4_B3", "3b809fd76e500bd1"}, {"E6_A6", "40cfa4880e348b66"}, {"E6_D5", "47f1f8b5e8fb4211"},
        {"E7_E6", "543986d6e970a3a3"}, {"E7_D6", "709325e2028d0f55"}, {"E8_E7", "7f46c64e1b4081e5"}, {"E7_A7", "b123e01c5a22f787"},
    };
    for (const auto& n : builtin_names()) EXPECT_EQ(presentation_hash(builtin(n)), pins.at(n)) << n;
}

TEST(Parse, FileEqualsBuiltin) {
    EXPECT_EQ(parse_presentation(kF4C3File), builtin("F4_C3"));
    std::string crlf;
    for (char c : std::string(kF4C3File)) {
        if (c == '\n') crlf += '\r';
        crlf += c;
    }
    EXPECT_EQ(parse_presentation(crlf), builtin("F4_C3"));
}

TEST(Parse, HomogeneityError) {
    auto e = parse_error_of("presentation \"x\"\nvar y1 deg 1\nvar y4 deg 4\nrel g8 deg 8 = y1 + y4\n");
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("homogeneous"), std::string::npos);
}

TEST(Parse, UnknownVariablePositioned) {
    auto e = parse_error_of("presentation \"x\"\nvar y1 deg 1\nrel g9 deg 9 = y9\n");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 16u);
}

TEST(Parse, DuplicatesRejected) {
    auto e1 = parse_error_of("presentation \"x\"\nvar y1 deg 1\nvar y1 deg 1\n");
    EXPECT_EQ(e1.line(), 3u);
    EXPECT_EQ(e1.column(), 5u);
    auto e2 = parse_error_of("presentation \"x\"\nvar y1 deg 1\nrel g2 deg 2 = y1^2\nrel g2 deg 2 = y1^2\n");
    EXPECT_EQ(e2.line(), 4u);
}

TEST(Parse, SyntaxErrors) {
    EXPECT_EQ(parse_error_of("var y1 deg 1\n").line(), 1u);  // missing presentation line
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 degree 1\n").line(), 2u);
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 deg 1\nrel g2 deg 2 = 3 y1^2\n").line(), 3u);
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 deg 1\nfoo bar\n").line(), 3u);
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 deg 1\nvar y2 deg 1\n").line(), 1u);
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 deg 1\nrel g2 deg 2 = 1/0*y1^2\n").line(), 3u);
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 deg 1\n= y1\n").line(), 3u);
}

TEST(Parse, OrderDirective) {
    auto p = parse_presentation(
        "presentation \"x\"\nvar y1 deg 1\nvar y4 deg 4\norder wgrevlex y4 > y1\nrel g8 deg 8 = y1^8 + y4^2\n");
    EXPECT_EQ(p.ring->order.kind, OrderKind::wgrevlex);
    EXPECT_EQ(p.ctx().precedence(), (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 deg 1\norder lex y1 >\n").line(), 3u);
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 deg 1\norder lex y2\n").column(), 11u);
    // Precedence must name every variable exactly once.
    EXPECT_EQ(parse_error_of("presentation \"x\"\nvar y1 deg 1\nvar y4 deg 4\norder lex y1\n").line(), 4u);
}

TEST(Format, CanonicalRelationText) {
    auto text = format_canonical(builtin("F4_C3"));
    EXPECT_NE(text.find("rel g8 deg 8 = y1^8 - 12*y1^4*y4 + 24*y4^2\n"), std::string::npos);
}

TEST(Format, RoundTripBuiltins) {
    for (const auto& n : builtin_names()) {
        auto p = builtin(n);
        auto text = format_canonical(p);
        EXPECT_EQ(parse_presentation(text), p) << n;
        EXPECT_EQ(format_canonical(parse_presentation(text)), text) << n;
    }
}

TEST(Format, EmptyRelationPresentation) {
    auto p = parse_presentation("presentation \"Q[y1]\"\nvar y1 deg 1\n");
    EXPECT_TRUE(p.relations.empty());
    auto text = format_canonical(p);
    EXPECT_EQ(text, "presentation \"Q[y1]\"\nvar y1 deg 1\norder lex y1\n");
    EXPECT_EQ(parse_presentation(text), p);
}
