#include <gtest/gtest.h>

#include <map>

#include "print.hpp"
#include "hsx/paths.hpp"
#include "hsx/textio.hpp"

using namespace hsx;

namespace {

NumberExpr P(const char* s) { return parse_number(s); }
Monomial M(const char* s) { return parse_number(s).leading().mono; }
const char* kExample = "exp(2*E[w](w) - exp(1/2*log(w)) + L[w+1](w))";

PathEntry entry(const char* coeff, const char* mono) {
  Rational c(coeff);
  c.canonicalize();
  return PathEntry{c, mono[0] == '1' && mono[1] == 0 ? Monomial::one() : M(mono)};
}

std::string classes(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.length(); ++i) {
    IndexClass c = classify_index(p, i);
    s += c.good ? "g" : std::to_string(c.rule);
  }
  return s;
}

}  // namespace

TEST(Paths, ExampleHasNinePaths) {
  NumberExpr m = P(kExample);
  std::vector<Path> ps = enumerate_paths(m);
  ASSERT_EQ(ps.size(), 9u);
  std::map<std::size_t, int> lengths;
  for (const auto& p : ps) ++lengths[p.length()];
  EXPECT_EQ(lengths, (std::map<std::size_t, int>{{1, 1}, {2, 3}, {3, 3}, {4, 2}}));

  const Monomial top = m.leading().mono;
  const PathEntry t0{Rational(1), top};
  const PathEntry big = entry("2", "E[w](w)");
  const PathEntry root = entry("-1", "w^(1/2)");
  std::vector<std::vector<PathEntry>> expected{
      {t0},
      {t0, big},
      {t0, root},
      {t0, entry("1", "w")},
      {t0, big, entry("1", "L[w^(2)](w)")},
      {t0, big, entry("1", "1")},
      {t0, root, entry("1/2", "L[1](w)")},
      {t0, big, entry("1", "L[w^(2)](w)"), entry("1", "w")},
      {t0, root, entry("1/2", "L[1](w)"), entry("1", "w")},
  };
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& p : ps) found = found || p.entries() == e;
    EXPECT_TRUE(found) << print_path(Path::in(m, e));
  }
}

TEST(Paths, MaximalPathsEndAtRealsOrOmega) {
  std::vector<Path> ps = maximal_paths(P(kExample));
  EXPECT_EQ(ps.size(), 4u);
  for (const auto& p : ps) EXPECT_TRUE(p.terminal());
}

TEST(Paths, SmallCases) {
  std::vector<Path> five = enumerate_paths(P("5"));
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].length(), 1u);
  EXPECT_TRUE(five[0].terminal());
  for (const auto& p : enumerate_paths(P("L[w](w)"))) EXPECT_LE(p.length(), 2u);
  EXPECT_TRUE(enumerate_paths(NumberExpr{}).empty());
}

TEST(Paths, SignsAndValues) {
  NumberExpr m = P(kExample);
  Path p = Path::in(m, {PathEntry{Rational(1), m.leading().mono}, entry("-1", "w^(1/2)"), entry("1/2", "L[1](w)")});
  EXPECT_EQ(p.s(1), -1);
  EXPECT_EQ(p.a(1), P("2*E[w](w) - w^(1/2)"));
  EXPECT_EQ(p.s(2), 1);
  EXPECT_EQ(p.a(2), P("1/2*L[1](w)"));
  EXPECT_EQ(p.a(0), m);
  EXPECT_THROW(p.s(0), PathError);
}

TEST(Paths, AxiomViolations) {
  NumberExpr m = P(kExample);
  PathEntry t0{Rational(1), m.leading().mono};
  EXPECT_THROW(Path::in(m, {}), PathError);
  EXPECT_THROW(Path::in(m, {entry("1", "w")}), PathError);
  EXPECT_THROW(Path::in(m, {t0, entry("3", "E[w](w)")}), PathError);
  EXPECT_THROW(Path::in(m, {t0, entry("1", "w"), entry("1", "w")}), PathError);
}

TEST(Paths, ShiftAndConcat) {
  NumberExpr m = P(kExample);
  for (const auto& p : enumerate_paths(m)) {
    for (std::size_t k = 0; k < p.length(); ++k) {
      Path q = shift(p, k);
      ASSERT_EQ(q.length(), p.length() - k);
      EXPECT_EQ(q.root(), p.a(k));
      for (std::size_t i = 0; i < q.length(); ++i) EXPECT_EQ(q.entries()[i], p.entries()[k + i]);
      if (k > 0) {
        std::vector<PathEntry> head(p.entries().begin(), p.entries().begin() + static_cast<std::ptrdiff_t>(k));
        EXPECT_EQ(concat(Path::in(m, head), q), p);
      }
    }
  }
  Path two = Path::in(m, {PathEntry{Rational(1), m.leading().mono}, entry("2", "E[w](w)")});
  Path one = Path::from_entries({entry("1", "1")});
  Path three = concat(two, one);
  EXPECT_EQ(three.length(), 3u);
  EXPECT_TRUE(three.terminal());
  EXPECT_THROW(concat(three, one), PathError);
  EXPECT_THROW(shift(two, 2), PathError);
}

TEST(Classify, ExampleIndices) {
  std::map<std::string, std::string> got;
  for (const auto& p : enumerate_paths(P(kExample))) got[print_path(p)] = classes(p);
  // The root monomial carries beta = w and the psi entries are not in u.
  for (const auto& [path, c] : got) EXPECT_EQ(c[0], '2') << path;
  std::multiset<std::string> cs;
  for (const auto& [path, c] : got) cs.insert(c);
  EXPECT_EQ(cs, (std::multiset<std::string>{"2", "21", "21", "2g", "211", "21g", "212", "211g", "212g"}));
}

TEST(Classify, ConstructedRules) {
  std::vector<Path> twice = enumerate_paths(P("2*E[w](2*w)"));
  ASSERT_FALSE(twice.empty());
  EXPECT_EQ(classify_index(twice[0], 0).rule, 3);
  std::vector<Path> l3 = enumerate_paths(P("L[3](w)"));
  EXPECT_EQ(classify_index(l3[0], 0).rule, 2);
  std::vector<Path> plain = enumerate_paths(P("E[w](2*w - L[1](w))"));
  EXPECT_TRUE(classify_index(plain[0], 0).good);
  EXPECT_EQ(classify_index(plain[1], 1).rule, 1);
  EXPECT_EQ(classify_index(plain.back(), 1).rule, 2);
}

TEST(NestedTrunc, LevelZero) {
  TruncResult a = nested_trunc(P("w"), P("w + 1"), 2);
  EXPECT_EQ(a.kind, TruncResult::Kind::Holds);
  EXPECT_EQ(a.n, 0u);
  TruncResult b = nested_trunc(P("w + L[1](w)"), P("w + 3*L[1](w) + 1"), 2);
  EXPECT_EQ(b.kind, TruncResult::Kind::Holds);
  EXPECT_EQ(b.n, 0u);
  TruncResult neg = nested_trunc(P("w - L[1](w)"), P("w - 3*L[1](w) + 1"), 0);
  EXPECT_EQ(neg.kind, TruncResult::Kind::Holds);
  EXPECT_EQ(nested_trunc(P("w + L[1](w)"), P("w - 3*L[1](w)"), 0).kind, TruncResult::Kind::Fails);
}

TEST(NestedTrunc, HigherLevels) {
  // Same hyperexponential shell with truncated arguments.
  TruncResult c = nested_trunc(P("E[w](2*w)"), P("E[w](2*w + L[1](w))"), 3);
  EXPECT_EQ(c.kind, TruncResult::Kind::Holds);
  EXPECT_EQ(c.n, 1u);
  EXPECT_EQ(nested_trunc(P("w"), P("L[1](w)"), 2).kind, TruncResult::Kind::Fails);
}
