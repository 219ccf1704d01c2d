#include "hsx/treeexp.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include <json.hpp>

#include "hsx/textio.hpp"

namespace hsx {

namespace {

const Ordinal& ord_one() {
  static const Ordinal o = Ordinal::nat(1);
  return o;
}

Label mk(LabelKind k) {
  Label l;
  l.kind = k;
  return l;
}

Label real_label(const Rational& q) {
  Label l = mk(LabelKind::Real);
  l.real = q;
  return l;
}

Label placeholder(const NumberExpr& v, int sigma) {
  Label l = mk(LabelKind::Placeholder);
  l.value = std::make_shared<const NumberExpr>(v);
  l.sigma = sigma;
  return l;
}

std::string child_id(const std::string& id, std::size_t k) { return id + "." + std::to_string(k); }

void add(ExpTree& t, const std::string& id, Label l, std::size_t arity) {
  Node n;
  n.label = std::move(l);
  for (std::size_t k = 0; k < arity; ++k) n.children.push_back(child_id(id, k));
  t.put(id, std::move(n));
}

void build_monomial(ExpTree& t, const std::string& id, const Monomial& m, int sigma) {
  if (m.is_one()) {
    add(t, id, real_label(Rational(1)), 0);
    return;
  }
  if (m.is_nested()) {
    Label l = mk(LabelKind::Stub);
    l.stub = m;
    l.sigma = sigma;
    add(t, id, std::move(l), 0);
    return;
  }
  int inner = sigma * m.iota();
  add(t, id, mk(LabelKind::Times), 2);
  Label e1 = mk(LabelKind::E);
  e1.ord = ord_one();
  add(t, child_id(id, 0), e1, 1);
  add(t, child_id(child_id(id, 0), 0), placeholder(m.psi(), inner), 0);
  Label p = mk(LabelKind::Pow);
  p.iota = m.iota();
  std::string pid = child_id(id, 1);
  add(t, pid, p, 1);
  std::string gid = child_id(pid, 0);
  if (!m.beta().is_zero()) {
    Label l = mk(LabelKind::L);
    l.ord = m.beta();
    add(t, gid, l, 1);
    gid = child_id(gid, 0);
  }
  if (m.kind() == TailKind::Omega) {
    add(t, gid, mk(LabelKind::Omega), 0);
    return;
  }
  Label e = mk(LabelKind::E);
  e.ord = m.alpha();
  add(t, gid, e, 1);
  add(t, child_id(gid, 0), placeholder(m.u(), inner), 0);
}

void build_number(ExpTree& t, const std::string& id, const NumberExpr& a, int sigma) {
  add(t, id, mk(LabelKind::Sum), a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Term& term = a.terms()[k];
    std::string x = child_id(id, k);
    add(t, x, mk(LabelKind::Times), 2);
    add(t, child_id(x, 0), real_label(term.coeff), 0);
    build_monomial(t, child_id(x, 1), term.mono, sigma * sgn(term.coeff));
  }
}

NumberExpr eval_node(const ExpTree& t, const std::string& id, std::map<std::string, NumberExpr>* out) {
  const Node& n = t.node(id);
  const Label& l = n.label;
  auto arity = [&](std::size_t k) {
    if (n.children.size() != k)
      throw TreeError("node " + id + " labeled " + l.to_string() + " has arity " + std::to_string(n.children.size()));
  };
  auto child = [&](std::size_t k) { return eval_node(t, n.children[k], out); };
  NumberExpr v;
  switch (l.kind) {
    case LabelKind::Real:
      arity(0);
      v = NumberExpr::constant(l.real);
      break;
    case LabelKind::Omega:
      arity(0);
      v = NumberExpr::omega();
      break;
    case LabelKind::Sum:
      for (std::size_t k = 0; k < n.children.size(); ++k) v = add(v, child(k));
      break;
    case LabelKind::Times:
      arity(2);
      v = mul(child(0), child(1));
      break;
    case LabelKind::Pow:
      arity(1);
      v = number_pow(child(0), l.iota);
      break;
    case LabelKind::L:
      arity(1);
      v = hyperlog(l.ord, child(0));
      break;
    case LabelKind::E:
      arity(1);
      if (l.ord == ord_one())
        v = number_exp(child(0));
      else
        v = NumberExpr::of(hyperexp(l.ord, child(0)));
      break;
    case LabelKind::Placeholder:
      arity(0);
      v = *l.value;
      break;
    case LabelKind::Stub:
      arity(0);
      v = NumberExpr::of(l.stub);
      break;
  }
  if (out) (*out)[id] = v;
  return v;
}

}  // namespace

std::string Label::to_string() const {
  switch (kind) {
    case LabelKind::Real: return real.get_str();
    case LabelKind::Omega: return "w";
    case LabelKind::Sum: return "sum";
    case LabelKind::Times: return "*";
    case LabelKind::Pow: return iota > 0 ? "pow[1]" : "pow[-1]";
    case LabelKind::L: return "L[" + ord.to_string() + "]";
    case LabelKind::E: return "E[" + ord.to_string() + "]";
    case LabelKind::Placeholder: return "?{" + print_number(*value) + "}";
    case LabelKind::Stub: return print_monomial(stub);
  }
  return "?";
}

bool operator==(const Label& a, const Label& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case LabelKind::Real: return a.real == b.real;
    case LabelKind::Pow: return a.iota == b.iota;
    case LabelKind::L:
    case LabelKind::E: return a.ord == b.ord;
    case LabelKind::Placeholder: return a.sigma == b.sigma && *a.value == *b.value;
    case LabelKind::Stub: return a.sigma == b.sigma && a.stub == b.stub;
    default: return true;
  }
}

bool operator==(const ExpTree& a, const ExpTree& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  auto i = a.nodes_.begin();
  auto j = b.nodes_.begin();
  for (; i != a.nodes_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second.label == j->second.label) || i->second.children != j->second.children)
      return false;
  return true;
}

ExpTree ExpTree::leaf(Label l) {
  ExpTree t;
  t.nodes_[t.root_] = Node{std::move(l), {}};
  return t;
}

const Node& ExpTree::node(const std::string& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw TreeError("no node " + id);
  return it->second;
}

std::size_t node_height(const std::string& id) {
  return static_cast<std::size_t>(std::count(id.begin(), id.end(), '.'));
}

std::size_t ExpTree::height() const {
  std::size_t h = 0;
  for (const auto& [id, n] : nodes_) h = std::max(h, node_height(id));
  return h;
}

std::vector<std::string> ExpTree::placeholders() const {
  std::vector<std::string> out;
  for (const auto& [id, n] : nodes_)
    if (n.label.kind == LabelKind::Placeholder) out.push_back(id);
  return out;
}

std::vector<std::string> ExpTree::stubs() const {
  std::vector<std::string> out;
  for (const auto& [id, n] : nodes_)
    if (n.label.kind == LabelKind::Stub) out.push_back(id);
  return out;
}

void ExpTree::graft(const std::string& id, const ExpTree& t) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw TreeError("no node " + id);
  if (!it->second.children.empty()) throw TreeError("graft target " + id + " is not a leaf");
  auto rename = [&](const std::string& s) { return id + s.substr(t.root_.size()); };
  for (const auto& [sid, n] : t.nodes_) {
    Node copy = n;
    for (auto& c : copy.children) c = rename(c);
    nodes_[rename(sid)] = std::move(copy);
  }
}

NumberExpr evaluate(const ExpTree& t) { return eval_node(t, t.root(), nullptr); }

std::map<std::string, NumberExpr> evaluate_all(const ExpTree& t) {
  std::map<std::string, NumberExpr> out;
  eval_node(t, t.root(), &out);
  return out;
}

ExpTree standard_monomial_expansion(const Monomial& m, int sigma) {
  ExpTree t;
  build_monomial(t, t.root(), m, sigma);
  return t;
}

ExpTree standard_expansion(const NumberExpr& a, int sigma) {
  ExpTree t;
  build_number(t, t.root(), a, sigma);
  return t;
}

bool refines(const ExpTree& t2, const ExpTree& t1) {
  for (const auto& [id, n] : t1.nodes())
    if (!t2.contains(id)) return false;
  auto v1 = evaluate_all(t1);
  auto v2 = evaluate_all(t2);
  for (const auto& [id, n] : t1.nodes()) {
    if (!(v1.at(id) == v2.at(id))) return false;
    if (n.label.kind != LabelKind::Placeholder && !(n.label == t2.node(id).label)) return false;
  }
  return true;
}

bool is_tree_expansion(const ExpTree& t) {
  auto v = evaluate_all(t);
  for (const auto& [id, n] : t.nodes()) {
    if (n.label.kind != LabelKind::Sum) continue;
    ExpTree sub;
    std::vector<std::string> todo{id};
    while (!todo.empty()) {
      std::string x = todo.back();
      todo.pop_back();
      const Node& xn = t.node(x);
      Node copy = xn;
      for (auto& c : copy.children) {
        todo.push_back(c);
        c = "r" + c.substr(id.size());
      }
      sub.put("r" + x.substr(id.size()), std::move(copy));
    }
    if (!refines(sub, standard_expansion(v.at(id)))) return false;
  }
  return true;
}

ExpTree settle(const NumberExpr& a, std::size_t n) {
  ExpTree t = ExpTree::leaf(placeholder(a, 1));
  for (std::size_t level = 0; level < n; ++level) {
    for (const auto& id : t.placeholders()) {
      if (node_height(id) != level) continue;
      const Label& l = t.node(id).label;
      t.graft(id, standard_expansion(*l.value, l.sigma));
    }
  }
  return t;
}

Description tree_expansion(const NumberExpr& a, std::optional<std::uint64_t> seed) {
  Description d;
  ExpTree& t = d.tree;
  t = ExpTree::leaf(placeholder(a, 1));
  if (!seed) {
    for (std::size_t level = 0;; ++level) {
      auto ph = t.placeholders();
      if (ph.empty()) break;
      for (const auto& id : ph) {
        if (node_height(id) != level) continue;
        const Label& l = t.node(id).label;
        t.graft(id, standard_expansion(*l.value, l.sigma));
      }
    }
  } else {
    std::mt19937_64 rng(*seed);
    std::deque<std::string> queue;
    for (const auto& id : t.placeholders()) queue.push_back(id);
    while (!queue.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, queue.size() - 1);
      std::size_t k = pick(rng);
      std::string id = queue[k];
      queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(k));
      const Label l = t.node(id).label;
      ExpTree sub = standard_expansion(*l.value, l.sigma);
      t.graft(id, sub);
      for (const auto& [sid, n] : sub.nodes())
        if (n.label.kind == LabelKind::Placeholder) queue.push_back(id + sid.substr(1));
    }
  }
  for (const auto& id : t.stubs()) {
    const Label& l = t.node(id).label;
    d.xi[id] = scale(l.stub.rank(), Rational(l.sigma));
  }
  return d;
}

namespace {

nlohmann::ordered_json tree_object(const ExpTree& t) {
  nlohmann::ordered_json j;
  j["root"] = t.root();
  nlohmann::ordered_json nodes = nlohmann::ordered_json::object();
  // Depth-first order keeps child lists readable.
  std::vector<std::string> todo{t.root()};
  while (!todo.empty()) {
    std::string id = todo.back();
    todo.pop_back();
    const Node& n = t.node(id);
    nodes[id] = {{"label", n.label.to_string()}, {"children", n.children}};
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) todo.push_back(*it);
  }
  j["nodes"] = std::move(nodes);
  return j;
}

}  // namespace

std::string tree_json(const Description& d) {
  nlohmann::ordered_json j = tree_object(d.tree);
  nlohmann::ordered_json xi = nlohmann::ordered_json::object();
  for (const auto& [id, r] : d.xi) xi[id] = print_number(r);
  j["xi"] = std::move(xi);
  return j.dump();
}

std::string tree_json(const ExpTree& t) { return tree_object(t).dump(); }

std::string tree_dot(const ExpTree& t) {
  std::string s = "digraph T {\n  node [shape=plaintext];\n";
  std::vector<std::string> todo{t.root()};
  while (!todo.empty()) {
    std::string id = todo.back();
    todo.pop_back();
    const Node& n = t.node(id);
    s += "  \"" + id + "\" [label=" + nlohmann::json(n.label.to_string()).dump() + "];\n";
    for (const auto& c : n.children) s += "  \"" + id + "\" -> \"" + c + "\";\n";
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) todo.push_back(*it);
  }
  return s + "}\n";
}

}  // namespace hsx
