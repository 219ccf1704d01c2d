#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "hsx/ordinal.hpp"
#include "hsx/rational.hpp"

namespace hsx {

class LogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A power product of logarithmic hypermonomials l_gamma. Besides finitely
// many explicit exponents it may carry powers of inv_prefix(P) for limit P,
// the formal product of l_i^-1 over all i < P.
class LogMonomial {
 public:
  LogMonomial() = default;
  static LogMonomial ell(const Ordinal& gamma, const Rational& e = Rational(1));
  // prod_{i < gamma} l_i^-1 for any ordinal gamma.
  static LogMonomial inv_prefix(const Ordinal& gamma);

  const std::map<Ordinal, Rational>& powers() const { return powers_; }
  const std::map<Ordinal, long>& prefixes() const { return prefixes_; }
  bool is_one() const { return powers_.empty() && prefixes_.empty(); }
  bool has_prefix() const { return !prefixes_.empty(); }
  // Exponent of l_gamma, counting prefix factors.
  Rational exponent(const Ordinal& gamma) const;

  friend LogMonomial operator*(const LogMonomial& a, const LogMonomial& b);
  LogMonomial inverse() const;
  LogMonomial pow(long k) const;
  friend bool operator==(const LogMonomial& a, const LogMonomial& b) = default;

  // -1, 0, 1 according to l < 1, l = 1, l > 1.
  int sign_vs_one() const;

 private:
  void insert_power(const Ordinal& g, const Rational& e);
  void insert_prefix(const Ordinal& p, long k);
  std::map<Ordinal, Rational> powers_;
  std::map<Ordinal, long> prefixes_;
};

std::strong_ordering compare(const LogMonomial& a, const LogMonomial& b);

struct LogTerm {
  Rational coeff;
  LogMonomial mono;
  friend bool operator==(const LogTerm&, const LogTerm&) = default;
};

// Finite logarithmic hyperseries, terms strictly decreasing.
class LogSeries {
 public:
  LogSeries() = default;
  static LogSeries constant(const Rational& q);
  static LogSeries term(const Rational& c, LogMonomial m);
  static LogSeries from_terms(std::vector<LogTerm> terms);

  const std::vector<LogTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_prefix() const;

  friend LogSeries operator+(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator-(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
  LogSeries scaled(const Rational& q) const;
  friend bool operator==(const LogSeries& a, const LogSeries& b) = default;

 private:
  std::vector<LogTerm> terms_;
};

// l_gamma^dagger = prod_{i <= gamma} l_i^-1.
LogMonomial log_derivative(const Ordinal& gamma);
// Derivation; inputs carrying inverse-prefix factors are rejected.
LogSeries derive(const LogSeries& f);
// g o l_gamma.
LogSeries compose_ell(const LogSeries& g, const Ordinal& gamma);
LogMonomial compose_ell(const LogMonomial& m, const Ordinal& gamma);
// The series h with h o l_gamma = g.
LogSeries upshift(const LogSeries& g, const Ordinal& gamma);

}  // namespace hsx
