#pragma once

// Seeded generators for the property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hsx/loghyp.hpp"
#include "hsx/ordinal.hpp"
#include "hsx/rational.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// CNF ordinal with exponents below max_exp (finite exponents only).
inline hsx::Ordinal ordinal(Rng& r, int max_exp, int max_terms = 3, int max_coeff = 4) {
  std::vector<hsx::OrdTerm> ts;
  int n = r.range(0, max_terms);
  int e = max_exp;
  for (int i = 0; i < n && e > 0; ++i) {
    e = r.range(0, e - 1);
    ts.push_back(hsx::OrdTerm{hsx::Ordinal::nat(static_cast<std::uint64_t>(e)),
                              static_cast<std::uint64_t>(r.range(1, max_coeff))});
  }
  return hsx::Ordinal::from_terms(std::move(ts));
}

// Ordinal below w^w with exponents that are themselves small ordinals.
inline hsx::Ordinal ordinal_below_ww(Rng& r) { return ordinal(r, 5, 4, 5); }

inline hsx::Rational rational(Rng& r, int num = 5, int den = 3) {
  int p = r.range(-num, num);
  if (p == 0) p = 1;
  hsx::Rational q(p, static_cast<unsigned long>(r.range(1, den)));
  q.canonicalize();
  return q;
}

inline hsx::LogMonomial log_monomial(Rng& r, int max_terms = 3) {
  hsx::LogMonomial m;
  int n = r.range(0, max_terms);
  for (int i = 0; i < n; ++i) {
    hsx::Ordinal g = ordinal(r, 2, 2, 2);
    m = m * hsx::LogMonomial::ell(g, rational(r, 3, 2));
  }
  return m;
}

inline hsx::LogSeries log_series(Rng& r, int max_terms = 3) {
  hsx::LogSeries s;
  int n = r.range(0, max_terms);
  for (int i = 0; i < n; ++i) s = s + hsx::LogSeries::term(rational(r), log_monomial(r));
  return s;
}

inline std::string ord_text(const hsx::Ordinal& o) { return o.to_string(); }

// Purely large or general number expressions in the parser's language,
// built from shapes that stay inside the exact fragment. Each generated
// expression fixes one hyperexponential constructor per nesting depth, so
// sibling terms never need a comparison across strengths.
class ExprGen {
 public:
  explicit ExprGen(Rng& r) : r_(r) {}

  // Monomials of nesting depth at most d.
  std::string monomial(int d) {
    replan(d);
    return mono(d);
  }

  // Positive purely large sums of infinite monomials.
  std::string large(int d) {
    replan(d);
    return large_at(d);
  }

  // General numbers: sums of monomial terms and a constant.
  std::string number(int d) {
    replan(d);
    int n = r_.range(1, 3);
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (i)
        s += signed_term(rational(r_, 4, 3), mono(d));
      else
        s += rational(r_, 4, 3).get_str() + "*" + mono(d);
    }
    if (r_.coin(0.4)) {
      hsx::Rational c = rational(r_, 4, 2);
      s += (c < 0 ? " - " : " + ") + hsx::Rational(abs(c)).get_str();
    }
    return s;
  }

 private:
  // plan_[d] is empty for exp, otherwise the strength used at depth d.
  void replan(int d) {
    plan_.assign(static_cast<std::size_t>(std::max(d, 0) + 1), "");
    for (auto& p : plan_) p = r_.coin(0.35) ? std::string() : alpha();
  }

  std::string hyper(int d, const std::string& arg) {
    const std::string& a = plan_[static_cast<std::size_t>(d)];
    return (a.empty() ? "exp(" : "E[" + a + "](") + arg + ")";
  }

  std::string mono(int d) {
    int k = d > 0 && r_.coin(0.7) ? r_.range(3, 4) : r_.range(0, d <= 0 ? 2 : 5);
    switch (k) {
      case 0: return "w";
      case 1: return "L[" + small_beta() + "](w)";
      case 2: return "L[" + small_beta() + "](w)^-1";
      case 3: return hyper(d, large_at(d - 1));
      case 4:
        if (plan_[static_cast<std::size_t>(d)].empty()) return "exp(-(" + large_at(d - 1) + "))";
        return hyper(d, large_at(d - 1));
      default: return "w^(" + rational(r_, 3, 3).get_str() + ")";
    }
  }

  std::string large_at(int d) {
    int n = r_.range(1, 2);
    if (d <= 0 || r_.coin(0.4)) {
      std::string s = coeff_above_one() + "*w";
      for (int i = 1; i < n; ++i) s += signed_term(rational(r_, 3, 2), "L[" + small_beta() + "](w)");
      return s;
    }
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (i) s += " + ";
      s += (i ? positive_coeff() : coeff_above_one()) + "*" + hyper(d, large_at(d - 1));
    }
    return s;
  }

  std::string coeff_above_one() {
    hsx::Rational q(r_.range(2, 7), static_cast<unsigned long>(r_.range(1, 1)));
    q.canonicalize();
    return q.get_str();
  }

  static std::string signed_term(const hsx::Rational& c, const std::string& m) {
    return (c < 0 ? " - " : " + ") + hsx::Rational(abs(c)).get_str() + "*" + m;
  }
  std::string positive_coeff() {
    hsx::Rational q(r_.range(1, 4), static_cast<unsigned long>(r_.range(1, 3)));
    q.canonicalize();
    return q.get_str();
  }
  std::string small_beta() {
    hsx::Ordinal b = ordinal(r_, 3, 2, 3);
    if (b.is_zero()) b = hsx::Ordinal::nat(1);
    return b.to_string();
  }
  std::string alpha() {
    static const std::vector<std::string> as{"w", "w", "w^(2)"};
    return r_.pick(as);
  }
  Rng& r_;
  std::vector<std::string> plan_;
};

}  // namespace gen
