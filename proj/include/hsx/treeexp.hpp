#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsx/expr.hpp"

namespace hsx {

enum class LabelKind { Real, Omega, Sum, Times, Pow, L, E, Placeholder, Stub };

struct Label {
  LabelKind kind = LabelKind::Real;
  Rational real;
  int iota = 1;
  Ordinal ord;
  // Placeholder value; sigma is the sign accumulated along the path.
  std::shared_ptr<const NumberExpr> value;
  int sigma = 1;
  Monomial stub;

  std::string to_string() const;
  friend bool operator==(const Label& a, const Label& b);
};

struct Node {
  Label label;
  std::vector<std::string> children;
};

class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Nodes are keyed by their path from the root: "r", "r.0", "r.0.1", ...
class ExpTree {
 public:
  static ExpTree leaf(Label l);

  const std::string& root() const { return root_; }
  const std::map<std::string, Node>& nodes() const { return nodes_; }
  const Node& node(const std::string& id) const;
  bool contains(const std::string& id) const { return nodes_.count(id) != 0; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t height() const;
  std::vector<std::string> placeholders() const;
  std::vector<std::string> stubs() const;
  void put(const std::string& id, Node n) { nodes_[id] = std::move(n); }
  // Replace the node at id by t, re-rooted there.
  void graft(const std::string& id, const ExpTree& t);

  friend bool operator==(const ExpTree& a, const ExpTree& b);

 private:
  std::string root_ = "r";
  std::map<std::string, Node> nodes_;
};

std::size_t node_height(const std::string& id);

NumberExpr evaluate(const ExpTree& t);
std::map<std::string, NumberExpr> evaluate_all(const ExpTree& t);

ExpTree standard_monomial_expansion(const Monomial& m, int sigma = 1);
ExpTree standard_expansion(const NumberExpr& a, int sigma = 1);

bool refines(const ExpTree& t2, const ExpTree& t1);
// Every sum node's subtree refines the standard expansion of its value.
bool is_tree_expansion(const ExpTree& t);

ExpTree settle(const NumberExpr& a, std::size_t n);

struct Description {
  ExpTree tree;
  std::map<std::string, NumberExpr> xi;
  friend bool operator==(const Description& a, const Description& b) { return a.tree == b.tree && a.xi == b.xi; }
};

// Iterates settling to the fixpoint. With a seed, placeholders are taken
// from a shuffled work queue instead of level by level.
Description tree_expansion(const NumberExpr& a, std::optional<std::uint64_t> seed = std::nullopt);

std::string tree_json(const Description& d);
std::string tree_json(const ExpTree& t);
std::string tree_dot(const ExpTree& t);

}  // namespace hsx
