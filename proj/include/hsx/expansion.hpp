#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hsx/expr.hpp"

namespace hsx {

enum class ExpansionType { Unit, I, II, Nested };
const char* to_string(ExpansionType t);

// (psi, iota, alpha, beta, u). Type II has alpha = 0 and u = w; the unit
// tuple is all zero. Nested atoms are kept as leaves.
struct ExpansionTuple {
  NumberExpr psi;
  int iota = 0;
  Ordinal alpha;
  Ordinal beta;
  NumberExpr u;
  Monomial nested;

  ExpansionType type() const;
  friend bool operator==(const ExpansionTuple& a, const ExpansionTuple& b);
};

class ExpansionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ExpansionTuple expand(const Monomial& m);
// Builds the shell after checking the expansion conditions.
Monomial assemble(const ExpansionTuple& t);
std::string expansion_json(const ExpansionTuple& t);

// d_{w^mu} of an atom L_beta E_alpha^u with alpha >= strength.
Monomial dominant_atomic(const Monomial& m, const Ordinal& strength);

struct TailAtomic {
  NumberExpr psi;
  int iota;
  Monomial atom;
};
std::optional<TailAtomic> tail_atomic(const NumberExpr& phi);

struct Sharp {
  Truth status;
  NumberExpr value;
};
// The longest truncation of f that is beta-truncated.
Sharp sharp(const NumberExpr& f, const Ordinal& beta);

}  // namespace hsx
