#include <gtest/gtest.h>

#include "data.hpp"
#include "gen.hpp"
#include "print.hpp"
#include "hsx/textio.hpp"

using namespace hsx;

namespace {

NumberExpr P(const char* s) { return parse_number(s); }

std::string parse_error(const char* s) {
  try {
    parse_number(s);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Parser, Atoms) {
  NumberExpr l = P("L[w+1](w)");
  ASSERT_EQ(l.size(), 1u);
  const Monomial& m = l.leading().mono;
  EXPECT_TRUE(m.is_atom());
  EXPECT_EQ(m.kind(), TailKind::Omega);
  EXPECT_EQ(m.beta(), parse_ordinal("w+1"));
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_EQ(P("w^(1/2)"), P("exp(1/2*log(w))"));
  EXPECT_EQ(P("w^-1"), P("w^(-1)"));
  EXPECT_EQ(P("-(w - 1)"), P("1 - w"));
}

TEST(Parser, Errors) {
  EXPECT_NE(parse_error("w^2").find("powers are limited"), std::string::npos);
  EXPECT_NE(parse_error("L[w+1](w"), "");
  EXPECT_NE(parse_error("2*"), "");
  EXPECT_NE(parse_error("3/0"), "");
  EXPECT_NE(parse_error("w)"), "");
  try {
    parse_number("w + + 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span.start, 4u);
  }
  EXPECT_THROW(parse_ordinal("w^(2"), ParseError);
  EXPECT_THROW(parse_ordinal("-1"), ParseError);
}

TEST(Parser, Ordinals) {
  Ordinal o = parse_ordinal("w^(2)*3+w+5");
  EXPECT_EQ(o, ord_sum(ord_sum(Ordinal::omega_pow(Ordinal::nat(2), 3), Ordinal::omega()), Ordinal::nat(5)));
  EXPECT_TRUE(parse_ordinal("0").is_zero());
  EXPECT_EQ(parse_ordinal("w^(w)").to_string(), "w^(w)");
}

TEST(Printer, CanonicalForms) {
  EXPECT_EQ(print_number(P("2/4*w - 3")), "1/2*w - 3");
  EXPECT_EQ(print_number(P("-w")), "-w");
  EXPECT_EQ(print_number(P("L[3](w)^-1")), "L[3](w)^-1");
  EXPECT_EQ(print_number(NumberExpr{}), "0");
}

TEST(CodingFile, FieldErrors) {
  try {
    parse_coding(R"({"name":"x","levels":[{"phi":"w","eps":1,"psi":"0","iota":1,"alpha":"1"}],"period":3})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("period"), std::string::npos);
  }
  try {
    parse_coding(R"({"levels":[{"phi":"w","alpha":"w*2"}]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("levels[0].alpha"), std::string::npos);
  }
  EXPECT_THROW(parse_coding("{"), ParseError);
}

TEST(CodingFile, RoundTrip) {
  CodingSequence s = load_coding("sqrt.json");
  CodingSequence t = parse_coding(print_coding(s));
  EXPECT_EQ(print_coding(t), print_coding(s));
  EXPECT_EQ(t.name(), "sqrt");
  EXPECT_EQ(t.period(), std::optional<std::size_t>(0));
  EXPECT_EQ(t.shift(), Ordinal::nat(2));
}

TEST(ParserProperty, MutatedInputsFailCleanly) {
  gen::Rng r(92);
  gen::ExprGen g(r);
  const std::string alphabet = "w()[]+-*/^0123LE,.{}N;@ ";
  for (int i = 0; i < 1000; ++i) {
    std::string s = g.number(2);
    int edits = r.range(1, 3);
    for (int k = 0; k < edits && !s.empty(); ++k) {
      std::size_t pos = static_cast<std::size_t>(r.range(0, static_cast<int>(s.size()) - 1));
      char c = alphabet[static_cast<std::size_t>(r.range(0, static_cast<int>(alphabet.size()) - 1))];
      if (r.coin()) s[pos] = c;
      else s.erase(pos, 1);
    }
    try {
      NumberExpr e = parse_number(s);
      ASSERT_EQ(parse_number(print_number(e)), e) << s;
    } catch (const ParseError&) {
    } catch (const StuckError&) {
    } catch (const NormalizationUndecided&) {
    }
  }
}
