#include <gtest/gtest.h>

#include "print.hpp"
#include "hsx/expansion.hpp"
#include "hsx/textio.hpp"

using namespace hsx;

namespace {

NumberExpr P(const char* s) { return parse_number(s); }
Monomial M(const char* s) { return parse_number(s).leading().mono; }
Ordinal O(const char* s) { return parse_ordinal(s); }

ExpansionTuple tuple(const char* psi, int iota, const char* alpha, const char* beta, const char* u) {
  ExpansionTuple t;
  t.psi = P(psi);
  t.iota = iota;
  t.alpha = O(alpha);
  t.beta = O(beta);
  t.u = P(u);
  return t;
}

std::string assemble_error(const ExpansionTuple& t) {
  try {
    assemble(t);
  } catch (const ExpansionError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Expand, Unit) {
  ExpansionTuple t = expand(Monomial::one());
  EXPECT_EQ(t.type(), ExpansionType::Unit);
  EXPECT_EQ(t.iota, 0);
  EXPECT_TRUE(t.psi.is_zero());
  EXPECT_TRUE(t.u.is_zero());
  EXPECT_TRUE(assemble(t).is_one());
}

TEST(Expand, ExampleMonomialIsTypeII) {
  ExpansionTuple t = expand(M("exp(2*E[w](w) - exp(1/2*log(w)) + L[w+1](w))"));
  EXPECT_EQ(t.type(), ExpansionType::II);
  EXPECT_EQ(t.psi, P("2*E[w](w) - w^(1/2)"));
  EXPECT_EQ(t.iota, 1);
  EXPECT_EQ(t.beta, O("w"));
  EXPECT_EQ(t.u, NumberExpr::omega());
}

TEST(Expand, SquareRootIsTypeI) {
  ExpansionTuple t = expand(M("w^(1/2)"));
  EXPECT_EQ(t.type(), ExpansionType::I);
  EXPECT_TRUE(t.psi.is_zero());
  EXPECT_EQ(t.iota, 1);
  EXPECT_EQ(t.alpha, O("1"));
  EXPECT_TRUE(t.beta.is_zero());
  EXPECT_EQ(t.u, P("1/2*L[1](w)"));
}

TEST(Expand, Hyperexponential) {
  ExpansionTuple t = expand(M("L[w*2](E[w^(2)](3*w))"));
  EXPECT_EQ(t.type(), ExpansionType::I);
  EXPECT_EQ(t.alpha, O("w^(2)"));
  EXPECT_EQ(t.u, P("3*w - 2"));
  ExpansionTuple e = expand(M("exp(-w)*L[w](w)^-1"));
  EXPECT_EQ(e.type(), ExpansionType::II);
  EXPECT_EQ(e.psi, P("-w"));
  EXPECT_EQ(e.iota, -1);
}

TEST(Expand, Json) {
  EXPECT_EQ(expansion_json(expand(M("L[3](w)^-1"))),
            R"({"psi":"0","iota":-1,"type":"II","alpha":"0","beta":"3","u":"w"})");
}

TEST(Assemble, TypeII) {
  EXPECT_EQ(assemble(tuple("0", 1, "0", "3", "w")), M("L[3](w)"));
  EXPECT_EQ(assemble(tuple("w", -1, "0", "w", "w")), M("exp(w)*L[w](w)^-1"));
}

TEST(Assemble, TypeI) {
  EXPECT_EQ(assemble(tuple("0", 1, "w", "0", "2*w")), M("E[w](2*w)"));
  EXPECT_EQ(assemble(tuple("0", -1, "1", "0", "1/2*L[1](w)")), M("w^(-1/2)"));
}

TEST(Assemble, RejectsBrokenTuples) {
  EXPECT_NE(assemble_error(tuple("0", 2, "0", "3", "w")), "");
  EXPECT_NE(assemble_error(tuple("0", 1, "w*2", "0", "w")), "");
  EXPECT_NE(assemble_error(tuple("0", 1, "w", "w", "2*w")), "");
  EXPECT_NE(assemble_error(tuple("0", 1, "w", "0", "-w")), "");
  EXPECT_NE(assemble_error(tuple("0", 1, "w", "0", "w + w^-1")), "");
  EXPECT_NE(assemble_error(tuple("w", 1, "1", "0", "1/2*L[1](w)")), "");
  EXPECT_NE(assemble_error(tuple("L[2](w)", 1, "0", "0", "w")), "");
  EXPECT_NE(assemble_error(tuple("0", 1, "w", "0", "L[w](w)")), "");
  EXPECT_NE(assemble_error(tuple("0", 1, "0", "3", "2*w")), "");
}

TEST(Assemble, RoundTrip) {
  for (const char* s : {"w", "L[w+1](w)^-1", "E[w](2*w - L[1](w))", "exp(w - L[2](w))*L[3](w)",
                        "exp(2*E[w](w) - exp(1/2*log(w)) + L[w+1](w))", "L[w*2](E[w^(2)](3*w))"}) {
    Monomial m = M(s);
    ExpansionTuple t = expand(m);
    EXPECT_EQ(assemble(t), m) << s;
    EXPECT_EQ(expand(assemble(t)), t) << s;
  }
}

TEST(DominantAtomic, SplitsBeta) {
  // (w + 3) w = w^2, so this atom is raw rather than an expansion.
  Monomial raw = Monomial::raw_hyper(NumberExpr{}, 1, O("w+3"), O("w^(2)"), NumberExpr::omega());
  Monomial cut = Monomial::raw_hyper(NumberExpr{}, 1, O("w"), O("w^(2)"), NumberExpr::omega());
  EXPECT_EQ(dominant_atomic(raw, O("w^(2)")), cut);
  // Strength w has mu_- = 0, so nothing is dropped.
  EXPECT_EQ(dominant_atomic(raw, O("w")), raw);
  Monomial a = M("L[w](E[w^(2)](2*w))");
  EXPECT_EQ(dominant_atomic(a, O("w^(2)")), a);
  Monomial b = M("E[w^(2)](2*w)");
  EXPECT_EQ(dominant_atomic(b, O("w^(2)")), b);
  EXPECT_EQ(dominant_atomic(M("L[w+3](E[w^(3)](2*w))"), O("w^(2)")), M("L[w](E[w^(3)](2*w))"));
  EXPECT_EQ(dominant_atomic(M("L[w^(2)+w+3](E[w^(3)](2*w))"), O("w^(3)")), M("L[w^(2)](E[w^(3)](2*w))"));
  EXPECT_THROW(dominant_atomic(b, O("w^(3)")), ExpansionError);
}

TEST(TailAtomic, Decomposition) {
  auto t = tail_atomic(P("2*E[w](w) - w^(1/2) + L[w+1](w)"));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->psi, P("2*E[w](w) - w^(1/2)"));
  EXPECT_EQ(t->iota, 1);
  EXPECT_EQ(t->atom, M("L[w+1](w)"));
  auto l = tail_atomic(P("L[1](w)"));
  ASSERT_TRUE(l.has_value());
  EXPECT_TRUE(l->psi.is_zero());
  EXPECT_EQ(l->iota, 1);
  EXPECT_EQ(l->atom, M("L[1](w)"));
  EXPECT_FALSE(tail_atomic(P("w + 2*L[1](w)")).has_value());
  auto n = tail_atomic(P("w - L[2](w)"));
  ASSERT_TRUE(n.has_value());
  EXPECT_EQ(n->iota, -1);
}

TEST(Sharp, LongestTruncatedPrefix) {
  Sharp a = sharp(P("w + L[1](w)"), O("1"));
  EXPECT_EQ(a.status, Truth::Yes);
  EXPECT_EQ(a.value, P("w + L[1](w)"));
  Sharp b = sharp(P("w + w^-1"), O("1"));
  EXPECT_EQ(b.status, Truth::Yes);
  EXPECT_EQ(b.value, P("w"));
}
