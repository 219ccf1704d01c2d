#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsx/ordinal.hpp"
#include "hsx/rational.hpp"

namespace hsx {

enum class Cmp { Less, Equal, Greater, Undecided };
enum class Truth { Yes, No, Unknown };
enum class TailKind { Omega, Hyper, Nested };

inline Cmp reverse(Cmp c) {
  switch (c) {
    case Cmp::Less: return Cmp::Greater;
    case Cmp::Greater: return Cmp::Less;
    default: return c;
  }
}

const char* to_string(Cmp c);
const char* to_string(Truth t);

struct MonoNode;
class NumberExpr;

// A monomial in hyperserial normal form: either 1 or a shell
// e^psi * (tail)^iota with tail one of L_beta w, L_beta E_alpha^u, or a
// registered nested atom. Values are immutable and shared.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial{}; }

  // Raw constructors: no normalization is performed.
  static Monomial raw_omega(NumberExpr psi, int iota, Ordinal beta);
  static Monomial raw_hyper(NumberExpr psi, int iota, Ordinal beta, Ordinal alpha, NumberExpr u);
  static Monomial raw_nested(std::string seq, std::uint64_t level, NumberExpr rank);

  bool is_one() const { return !node_; }
  TailKind kind() const;
  const NumberExpr& psi() const;
  int iota() const;
  const Ordinal& beta() const;
  const Ordinal& alpha() const;  // 0 for L_beta w
  const NumberExpr& u() const;
  const std::string& seq() const;
  std::uint64_t level() const;
  const NumberExpr& rank() const;

  // psi = 0, iota = 1 and a hyperlog/omega tail.
  bool is_atom() const;
  bool is_nested() const { return node_ && kind() == TailKind::Nested; }
  bool has_nested() const;

  std::size_t hash() const;
  const MonoNode* node() const { return node_.get(); }

  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  explicit Monomial(std::shared_ptr<const MonoNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const MonoNode> node_;
};

struct Term {
  Rational coeff;
  Monomial mono;
};

// Finite series: terms with nonzero coefficients, strictly decreasing in
// their monomials. The empty series is 0.
class NumberExpr {
 public:
  NumberExpr() = default;
  static NumberExpr constant(const Rational& q);
  static NumberExpr term(const Rational& c, Monomial m);
  static NumberExpr of(Monomial m) { return term(Rational(1), std::move(m)); }
  static NumberExpr omega();
  // Trusted: terms already sorted with nonzero coefficients.
  static NumberExpr from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const;
  const Term& last() const;
  // Single term 1*m.
  bool is_monomial() const;
  bool has_nested() const;

  std::size_t hash() const;
  friend bool operator==(const NumberExpr& a, const NumberExpr& b);

 private:
  std::vector<Term> terms_;
  std::size_t hash_ = 0;
};

struct MonoNode {
  NumberExpr psi;
  int iota = 1;
  TailKind kind = TailKind::Omega;
  Ordinal beta;
  Ordinal alpha;
  NumberExpr u;
  std::string seq;
  std::uint64_t level = 0;
  NumberExpr rank;
  bool nested_inside = false;
  std::size_t hash = 0;
};

class StuckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NormalizationUndecided : public std::runtime_error {
 public:
  NormalizationUndecided(Monomial a, Monomial b);
  Monomial first, second;
};

template <class T>
struct Exact {
  std::optional<T> value;
  std::string stuck;
  bool ok() const { return value.has_value(); }
};

// Configuration. The rewrite budget bounds the depth of cross-strength
// reductions; the nested depth bounds lazy unfolding in comparisons.
std::size_t rewrite_budget();
void set_rewrite_budget(std::size_t n);
std::size_t nested_depth();
void set_nested_depth(std::size_t n);

// Comparison.
Cmp compare_monomials(const Monomial& m, const Monomial& n);
Cmp compare_numbers(const NumberExpr& a, const NumberExpr& b);
Cmp compare_to_one(const Monomial& m);
int sign(const NumberExpr& a);
bool is_purely_large(const NumberExpr& a);
bool is_positive_infinite(const NumberExpr& a);

// Arithmetic; throws NormalizationUndecided on undecided merges.
NumberExpr add(const NumberExpr& a, const NumberExpr& b);
NumberExpr sub(const NumberExpr& a, const NumberExpr& b);
NumberExpr neg(const NumberExpr& a);
NumberExpr scale(const NumberExpr& a, const Rational& q);
NumberExpr mul(const NumberExpr& a, const NumberExpr& b);
NumberExpr sort_terms(std::vector<Term> terms);

Monomial mono_mul(const Monomial& m, const Monomial& n);
Monomial mono_inv(const Monomial& m);
Monomial mono_pow(const Monomial& m, int iota);
// Exact power of a number: iota = 1 or iota = -1 on a single term.
NumberExpr number_pow(const NumberExpr& a, int iota);

// log of a monomial; exact for every non-nested normal form.
NumberExpr mono_log(const Monomial& m);
// e^phi for purely large phi.
Monomial exp_purely_large(const NumberExpr& phi);
// Exact exponential of a number; purely large argument only.
NumberExpr number_exp(const NumberExpr& a);
NumberExpr number_log(const NumberExpr& a);

// Hyperlogarithm L_gamma and hyperexponential E_gamma for any ordinal
// gamma; throw StuckError when no exact rule applies.
NumberExpr hyperlog(const Ordinal& gamma, const NumberExpr& a);
Monomial hyperexp(const Ordinal& gamma, const NumberExpr& a);

Exact<NumberExpr> rewrite_L(const Ordinal& gamma, const NumberExpr& a);
Exact<Monomial> apply_E(const Ordinal& alpha, const NumberExpr& a);

// Three-valued alpha-truncatedness for alpha a power of w.
Truth is_truncated(const NumberExpr& f, const Ordinal& beta);

// Atomicity: m in Mo_strength for strength a power of w; log-atomic is
// strength w.
bool is_atomic(const Monomial& m, const Ordinal& strength);
bool is_log_atomic(const Monomial& m);

// One level of a nested handle: phi_k ++ eps_k e^psi_k (E_alpha_k N')^iota_k.
NumberExpr unfold_once(const Monomial& handle);

// Rebuild every monomial through the smart constructors.
NumberExpr normalize(const NumberExpr& e);
Monomial normalize(const Monomial& m);

// e o L_s: substitute L_s w for w.
NumberExpr compose_L(const NumberExpr& e, const Ordinal& s);

}  // namespace hsx
