#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hsx {

struct OrdTerm;

// Ordinal in Cantor normal form: sum of w^e * c with strictly decreasing
// exponents and positive coefficients. The empty sum is 0.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coeff = 1);
  // Caller guarantees decreasing exponents and nonzero coefficients.
  static Ordinal from_terms(std::vector<OrdTerm> terms);

  const std::vector<OrdTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  std::uint64_t finite_part() const;
  bool is_successor() const;
  bool is_limit() const;
  bool is_power_of_omega() const;
  // Exponent mu of a power w^mu; throws otherwise.
  Ordinal log_omega() const;
  // Exponent of the leading / last CNF term; throws on 0.
  const Ordinal& leading_exponent() const;
  const Ordinal& last_exponent() const;
  // Value with the finite part removed / decremented by one.
  Ordinal without_finite_part() const;
  Ordinal predecessor() const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdTerm> terms_;
};

struct OrdTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

enum class Dominance { Below, Equivalent, Above };

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

Ordinal ord_sum(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
Ordinal hess_sum(const Ordinal& a, const Ordinal& b);
Ordinal hess_prod(const Ordinal& a, const Ordinal& b);

// a < b in the sense a*n < b for every natural n.
bool precedes(const Ordinal& a, const Ordinal& b);
// a <= b*n for some natural n.
bool preceq(const Ordinal& a, const Ordinal& b);
Dominance dominance(const Ordinal& a, const Ordinal& b);

bool mll(const Ordinal& a, const Ordinal& b);
bool lleq(const Ordinal& a, const Ordinal& b);

// b = b1 + b2 where b1 keeps the terms w^e with w^e dominating-or-equal the
// threshold and b2 the rest.
std::pair<Ordinal, Ordinal> split_at(const Ordinal& b, const Ordinal& threshold);

Ordinal mu_minus(const Ordinal& mu);
Ordinal alpha_over_omega(const Ordinal& alpha);

// The unique rho with ord_sum(gamma, rho) == iota, when gamma <= iota.
std::optional<Ordinal> left_subtract(const Ordinal& gamma, const Ordinal& iota);

class OrdinalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hsx
