#include <gtest/gtest.h>

#include "print.hpp"
#include "hsx/expr.hpp"
#include "hsx/textio.hpp"

using namespace hsx;

namespace {

NumberExpr P(const char* s) { return parse_number(s); }
Monomial M(const char* s) { return parse_number(s).leading().mono; }
Ordinal O(const char* s) { return parse_ordinal(s); }
const NumberExpr w = NumberExpr::omega();

}  // namespace

TEST(Compare, Atoms) {
  EXPECT_EQ(compare_monomials(M("L[2](w)"), M("L[1](w)")), Cmp::Less);
  EXPECT_EQ(compare_monomials(M("E[w](w)"), M("w^(1/2)")), Cmp::Greater);
  EXPECT_EQ(compare_monomials(Monomial::one(), Monomial::one()), Cmp::Equal);
  EXPECT_EQ(compare_monomials(M("L[w+1](w)"), M("E[w](w)")), Cmp::Less);
  EXPECT_EQ(compare_monomials(M("L[w+1](w)"), M("w^(1/2)")), Cmp::Less);
  EXPECT_EQ(compare_monomials(M("E[w](2*w)"), M("E[w](3*w)")), Cmp::Less);
  EXPECT_EQ(compare_to_one(M("L[3](w)^-1")), Cmp::Less);
}

TEST(Compare, Numbers) {
  EXPECT_EQ(compare_numbers(P("w"), P("w + 1")), Cmp::Less);
  EXPECT_EQ(compare_numbers(P("0"), P("0")), Cmp::Equal);
  EXPECT_EQ(compare_numbers(P("-w"), P("L[1](w)")), Cmp::Less);
  EXPECT_EQ(sign(P("1/2 - w^-1")), 1);
  EXPECT_TRUE(is_positive_infinite(P("w - L[1](w)")));
  EXPECT_FALSE(is_purely_large(P("w + 1")));
}

TEST(Arithmetic, RingIdentities) {
  EXPECT_EQ(mul(P("w + 1"), P("w - 1")), P("w^(2) - 1"));
  NumberExpr f = P("3*L[w](w) - w^-1");
  EXPECT_EQ(add(f, NumberExpr{}), f);
  EXPECT_EQ(mul(P("w + w^-1"), P("w + w^-1")), P("w^(2) + 2 + w^(-2)"));
  EXPECT_EQ(sub(f, f), NumberExpr{});
  EXPECT_EQ(number_pow(P("2*w"), -1), P("1/2*w^-1"));
}

TEST(Hyperlog, FunctionalEquation) {
  EXPECT_EQ(hyperlog(O("w"), P("L[3](w)")), P("L[w](w) - 3"));
  EXPECT_EQ(hyperlog(O("w"), P("E[w](w + L[1](w))")), P("w + L[1](w)"));
  EXPECT_EQ(hyperlog(O("1"), P("L[w](w)")), P("L[w+1](w)"));
  EXPECT_EQ(hyperlog(O("w"), P("L[w](w)")), P("L[w*2](w)"));
  for (int eta = 0; eta <= 2; ++eta)
    for (int n = 1; n <= 3; ++n) {
      Ordinal base = Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(eta)), static_cast<std::uint64_t>(n));
      Ordinal top = Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(eta + 1)));
      NumberExpr got = hyperlog(top, hyperlog(base, w));
      EXPECT_EQ(got, sub(hyperlog(top, w), NumberExpr::constant(n))) << eta << " " << n;
    }
}

TEST(Hyperexp, InversePairs) {
  EXPECT_EQ(NumberExpr::of(hyperexp(O("w"), P("L[w](w)"))), w);
  NumberExpr phi = P("w - 2*L[1](w)");
  Monomial e = hyperexp(O("1"), phi);
  EXPECT_EQ(mono_log(e), phi);
  EXPECT_THROW(hyperexp(O("w"), P("w + w^-1")), StuckError);
  EXPECT_EQ(P("exp(w)"), P("E[1](w)"));
}

TEST(Hyperexp, NonPositiveArgumentIsStuck) {
  EXPECT_THROW(hyperexp(O("w"), P("-w")), StuckError);
}

TEST(Logarithm, MonomialCase) {
  EXPECT_EQ(mono_log(M("w")), P("L[1](w)"));
  EXPECT_EQ(mono_log(M("L[w](w)")), P("L[w+1](w)"));
  EXPECT_EQ(mono_log(M("exp(w - L[1](w))*L[2](w)^-1")), P("w - L[1](w) - L[3](w)"));
  EXPECT_EQ(number_log(P("w")), P("L[1](w)"));
}

TEST(Truncated, ArgumentChecks) {
  EXPECT_EQ(is_truncated(P("w"), O("w")), Truth::Yes);
  EXPECT_EQ(is_truncated(P("L[w](w) + 1"), O("w")), Truth::Yes);
  EXPECT_EQ(is_truncated(P("w + w^-1"), O("w")), Truth::No);
  EXPECT_EQ(is_truncated(P("E[w](2*w) + L[1](E[w](2*w))^-1"), O("w")), Truth::No);
}

TEST(Atomic, Criteria) {
  EXPECT_TRUE(is_atomic(M("L[w](w)"), O("w")));
  EXPECT_TRUE(is_log_atomic(M("L[w+1](w)")));
  EXPECT_TRUE(is_atomic(M("E[w](w)"), O("w^(2)")));
  EXPECT_FALSE(is_atomic(M("w^(1/2)"), O("w")));
  EXPECT_TRUE(is_log_atomic(M("exp(w)")));
  EXPECT_FALSE(is_log_atomic(M("exp(w^(1/2))")));
  EXPECT_TRUE(is_log_atomic(M("w")));
}

TEST(Normalize, ExampleMonomial) {
  NumberExpr m = P("exp(2*E[w](w) - exp(1/2*log(w)) + L[w+1](w))");
  EXPECT_EQ(print_number(m), "exp(2*E[w^(2)](L[w^(2)](w) + 1) - E[1](1/2*L[1](w)))*L[w](w)");
  EXPECT_EQ(normalize(m), m);
}

TEST(Normalize, MonomialIdentities) {
  Monomial m = M("exp(w)*L[1](w)^-1");
  EXPECT_EQ(mono_mul(m, mono_inv(m)), Monomial::one());
  EXPECT_EQ(mono_pow(m, -1), mono_inv(m));
  EXPECT_EQ(compose_L(P("w + 1"), O("1")), P("L[1](w) + 1"));
  EXPECT_EQ(compose_L(P("L[w](w)"), O("1")), P("L[w](w) - 1"));
}
