#include "orbi/dsl.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace orbi;
using namespace orbi::dsl;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool has_message(const ParseResult& r, const std::string& needle) {
    for (const auto& d : r.diagnostics)
        if (d.message.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

TEST(Dsl, ParsesCurve) {
    auto r = parse("curve c { genus 0; point P mult 2; point Q mult 3; point R mult 7; }");
    ASSERT_TRUE(r.ok());
    const auto& c = r.document.curve("c").curve;
    EXPECT_EQ(c.genus, 0);
    EXPECT_EQ(c.marks.multiplicity("R"), Multiplicity(7L));
    EXPECT_EQ(canonical_degree(c), make_rational(1, 42));
}

TEST(Dsl, ParsesPlaneAndFano) {
    auto r = parse(R"(
        plane f {
          component L1 degree 1 mult 3;
          component L2 degree 1 mult 3;
          component L3 degree 1 mult 5;
          component L4 degree 1 mult 7;
        })");
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(anticanonical_degree(r.document.plane("f").pair()), make_rational(1, 105));
    EXPECT_THROW(r.document.plane("f").arrangement(), DomainError);
}

TEST(Dsl, MultiplicityLiterals) {
    auto r = parse("curve c { genus 1; point A mult inf; point B mult 5/2; point C mult 1.5; point D mult 1; }");
    ASSERT_TRUE(r.ok());
    const auto& m = r.document.curve("c").curve.marks;
    EXPECT_TRUE(m.multiplicity("A").is_infinite());
    EXPECT_EQ(m.multiplicity("B"), Multiplicity(make_rational(5, 2)));
    EXPECT_EQ(m.multiplicity("C"), Multiplicity(make_rational(3, 2)));
    EXPECT_FALSE(m.contains("D"));
}

TEST(Dsl, MultiplicityBelowOneIsDiagnosed) {
    auto r = parse("curve c { genus 0; point P mult 0.5; }");
    EXPECT_FALSE(r.ok());
    ASSERT_EQ(r.diagnostics.size(), 1u);
    EXPECT_NE(r.diagnostics[0].message.find("multiplicity below 1"), std::string::npos);
    EXPECT_EQ(r.diagnostics[0].line, 1);
    EXPECT_EQ(r.diagnostics[0].column, 33);
    EXPECT_TRUE(r.document.order.empty());
}

TEST(Dsl, RecoversAfterErrors) {
    auto r = parse(R"(curve a { genus 0; point P mult 0; }
curve b { genus 0 point P mult 2; }
curve c { genus 2; }
mordell m { p 2; q 3; r 7; }
)");
    EXPECT_EQ(r.diagnostics.size(), 2u);
    EXPECT_EQ(r.diagnostics[0].line, 1);
    EXPECT_EQ(r.diagnostics[1].line, 2);
    EXPECT_EQ(r.document.order.size(), 2u);
    EXPECT_EQ(r.document.curve("c").curve.genus, 2);
    EXPECT_EQ(r.document.mordell("m").triple, (OrbifoldP1Triple{2, 3, 7}));
}

TEST(Dsl, SemanticErrors) {
    EXPECT_TRUE(has_message(parse("curve a { genus 0; } curve a { genus 1; }"), "duplicate declaration name"));
    EXPECT_TRUE(has_message(parse("curve a { genus -1; }"), "genus must be nonnegative"));
    EXPECT_TRUE(has_message(parse("curve a { point P mult 2; }"), "has no genus"));
    EXPECT_TRUE(has_message(parse("curve a { genus 0; point P mult 2; point P mult 3; }"), "duplicate point label"));
    EXPECT_TRUE(has_message(parse("plane p { component L degree 2 mult 2 form x0; }"), "has degree 1, declared 2"));
    EXPECT_TRUE(has_message(parse("plane p { component L degree 2 mult 2 form x0 + x1^2; }"), "not homogeneous"));
    EXPECT_TRUE(has_message(parse("fibration f { over a { part t 0 mult 2; } }"), "positive integer"));
    EXPECT_TRUE(has_message(parse("twostage t { lower z { s 1 -> y; } upper = nope; }"), "not a declared fibration"));
    EXPECT_TRUE(has_message(parse("fibration f { over a { part t 1 mult 2; } } twostage t { lower z { s 1 -> y; } upper = f; }"),
                            "has no fibre data"));
    EXPECT_TRUE(has_message(parse("paramcurve c { x0 = s; x1 = s; }"), "has no coordinate x2"));
    EXPECT_TRUE(has_message(parse("paramcurve c { x0 = s; x1 = s*u; x2 = u; }"), "invalid parametrization"));
    EXPECT_TRUE(has_message(parse("paramcurve c { x0 = s; x1 = v; x2 = u; }"), "unknown variable 'v'"));
    EXPECT_TRUE(has_message(parse("mordell m { p 2; q 3; }"), "has no r"));
    EXPECT_TRUE(has_message(parse("widget w { }"), "unknown declaration keyword"));
    EXPECT_TRUE(has_message(parse("curve a { genus 0; } $"), "unexpected character"));
}

TEST(Dsl, Lookups) {
    auto r = parse("curve a { genus 0; } mordell m { p 2; q 3; r 7; }");
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.document.kind_of("m"), DeclKind::Mordell);
    EXPECT_FALSE(r.document.kind_of("zz").has_value());
    EXPECT_THROW(r.document.plane("a"), DomainError);
    EXPECT_THROW(r.document.curve("zz"), DomainError);
}

TEST(Dsl, Polynomials) {
    std::vector<std::string> su{"s", "u"};
    EXPECT_EQ(parse_polynomial("(s + u)^2", su).to_string(), "s^2 + 2*s*u + u^2");
    EXPECT_EQ(parse_polynomial("-s*-u", su).to_string(), "s*u");
    EXPECT_EQ(parse_polynomial("s/2 - 3/4*u", su).to_string(), "1/2*s - 3/4*u");
    EXPECT_EQ(parse_polynomial("2 - 2", su).homogeneous_degree(), -1);
    EXPECT_THROW(parse_polynomial("s/u", su), DomainError);
    EXPECT_THROW(parse_polynomial("s +", su), DomainError);
    EXPECT_THROW(parse_polynomial("s u", su), DomainError);
    EXPECT_THROW(parse_polynomial("s/0", su), DomainError);
}

TEST(Dsl, TwoStageResolution) {
    auto r = parse(R"(
        fibration f { over a { part t 2 mult 3; } over b { part t 1 mult inf; } }
        twostage t { lower z { s 2 -> a; s 5 -> b; } upper = f; })");
    ASSERT_TRUE(r.ok());
    auto bases = compose_base(r.document.two_stage_data("t"));
    EXPECT_EQ(bases.direct, (OrbifoldDivisor{{"z", Multiplicity(12L)}}));
}

// Every corpus file parses cleanly and survives parse -> print -> parse.
TEST(Dsl, RoundTripCorpus) {
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(ORBI_GOLDEN_DIR)) {
        if (entry.path().extension() != ".orb" || entry.path().stem() == "broken") continue;
        ++files;
        auto first = parse(read_file(entry.path()));
        ASSERT_TRUE(first.ok()) << entry.path();
        std::string printed = print(first.document);
        auto second = parse(printed);
        ASSERT_TRUE(second.ok()) << printed;
        EXPECT_EQ(first.document, second.document) << entry.path();
        EXPECT_EQ(print(second.document), printed);
    }
    EXPECT_GE(files, 5);
}

TEST(Dsl, BrokenCorpusReportsEveryDeclaration) {
    auto r = parse(read_file(std::filesystem::path(ORBI_GOLDEN_DIR) / "broken.orb"));
    EXPECT_EQ(r.diagnostics.size(), 7u);
    for (std::size_t i = 1; i < r.diagnostics.size(); ++i) EXPECT_LT(r.diagnostics[i - 1].line, r.diagnostics[i].line);
    ASSERT_EQ(r.document.order.size(), 1u);
    EXPECT_EQ(r.document.order[0].first, "fine");
}
