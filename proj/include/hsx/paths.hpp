#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsx/expansion.hpp"

namespace hsx {

struct PathEntry {
  Rational coeff;
  Monomial mono;
  friend bool operator==(const PathEntry& a, const PathEntry& b) {
    return a.coeff == b.coeff && a.mono == b.mono;
  }
};

class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite path tau_0, tau_1, ... together with u_{P,i}, psi_{P,i} for
// i <= |P| and the expansions of the m_{P,i}.
class Path {
 public:
  // Checks the path axioms with u_{P,0} = tau_0 and psi_{P,0} = 0.
  static Path from_entries(std::vector<PathEntry> entries);
  // Same, rooted at a_{P,0} = root with tau_0 a term of root.
  static Path in(const NumberExpr& root, std::vector<PathEntry> entries);

  const std::vector<PathEntry>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  const NumberExpr& u(std::size_t i) const { return u_.at(i); }
  const NumberExpr& psi(std::size_t i) const { return psi_.at(i); }
  const ExpansionTuple& expansion(std::size_t i) const { return exp_.at(i); }
  const NumberExpr& root() const { return root_; }
  // s_{P,i} for 0 < i < |P|: -1 when tau_i comes from psi, +1 from u.
  int s(std::size_t i) const;
  // a_{P,i}.
  NumberExpr a(std::size_t i) const;
  // The last value is a rational or w.
  bool terminal() const;
  // The last monomial is a nested atom.
  bool ends_nested() const;

  friend bool operator==(const Path& a, const Path& b) { return a.entries_ == b.entries_ && a.root_ == b.root_; }

 private:
  NumberExpr root_;
  std::vector<PathEntry> entries_;
  std::vector<NumberExpr> u_, psi_;
  std::vector<ExpansionTuple> exp_;
};

// All paths in a, every prefix included, in depth-first order.
std::vector<Path> enumerate_paths(const NumberExpr& a);
std::vector<Path> maximal_paths(const NumberExpr& a);

// P shifted by k, a path in a_{P,k}.
Path shift(const Path& p, std::size_t k);
Path concat(const Path& p, const Path& q);

struct IndexClass {
  bool good = true;
  int rule = 0;
};
IndexClass classify_index(const Path& p, std::size_t i);

struct TruncResult {
  enum class Kind { Holds, Fails, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t n = 0;
};
// Least n <= depth with a <~_n b.
TruncResult nested_trunc(const NumberExpr& a, const NumberExpr& b, std::size_t depth);

std::string paths_json(const std::vector<Path>& ps);
std::string print_path(const Path& p);

}  // namespace hsx
