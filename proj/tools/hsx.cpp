#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hsx/expansion.hpp"
#include "hsx/loghyp.hpp"
#include "hsx/nested.hpp"
#include "hsx/paths.hpp"
#include "hsx/textio.hpp"
#include "hsx/treeexp.hpp"

using namespace hsx;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUndecided = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CodingSequence load_coding(const std::string& path) { return parse_coding(read_file(path)); }

std::vector<Rational> parse_samples(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational q(item);
    q.canonicalize();
    if (q <= 0) throw std::runtime_error("samples must be positive: " + item);
    out.push_back(q);
  }
  if (out.empty()) throw std::runtime_error("no samples given");
  return out;
}

void print_tree_text(const ExpTree& t, const std::string& id, int depth, std::ostream& os) {
  const Node& n = t.node(id);
  os << std::string(2 * depth, ' ') << n.label.to_string() << "\n";
  for (const auto& c : n.children) print_tree_text(t, c, depth + 1, os);
}

int cmd_normalize(const std::string& expr, bool json) {
  NumberExpr e = normalize(parse_number(expr));
  if (json)
    std::cout << nlohmann::json{{"value", print_number(e)}}.dump() << "\n";
  else
    std::cout << print_number(e) << "\n";
  return kOk;
}

int cmd_expand(const std::string& expr) {
  NumberExpr e = parse_number(expr);
  Monomial m;
  if (!e.is_zero()) {
    if (e.size() != 1) throw std::runtime_error("expand expects a monomial, got " + print_number(e));
    m = e.leading().mono;
  }
  std::cout << expansion_json(expand(m)) << "\n";
  return kOk;
}

int cmd_paths(const std::string& expr, bool all, bool json) {
  NumberExpr e = parse_number(expr);
  std::vector<Path> ps = all ? enumerate_paths(e) : maximal_paths(e);
  if (json) {
    std::cout << paths_json(ps) << "\n";
    return kOk;
  }
  for (const auto& p : ps) {
    std::cout << print_path(p) << " :";
    for (std::size_t i = 0; i < p.length(); ++i) {
      IndexClass c = classify_index(p, i);
      std::cout << (c.good ? " good" : " bad" + std::to_string(c.rule));
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_tree(const std::string& expr, std::optional<std::size_t> settle_n, bool dot, bool json,
             const std::string& coding) {
  if (!coding.empty()) register_sequence(load_coding(coding));
  NumberExpr e = parse_number(expr);
  Description d;
  if (settle_n)
    d.tree = settle(e, *settle_n);
  else
    d = tree_expansion(e);
  if (dot)
    std::cout << tree_dot(d.tree);
  else if (json)
    std::cout << tree_json(d) << "\n";
  else {
    print_tree_text(d.tree, d.tree.root(), 0, std::cout);
    for (const auto& [id, r] : d.xi) std::cout << "xi " << id << " = " << print_number(r) << "\n";
  }
  return kOk;
}

int cmd_cmp(const std::string& a, const std::string& b) {
  Cmp c = compare_numbers(parse_number(a), parse_number(b));
  switch (c) {
    case Cmp::Less: std::cout << "<\n"; return kOk;
    case Cmp::Equal: std::cout << "=\n"; return kOk;
    case Cmp::Greater: std::cout << ">\n"; return kOk;
    default: std::cout << "undecided\n"; return kUndecided;
  }
}

int cmd_deriv(const std::string& f) {
  std::cout << print_log_series(derive(parse_log_series(f))) << "\n";
  return kOk;
}

int cmd_check_coding(const std::string& file, std::optional<std::size_t> depth, bool json) {
  CodingSequence s = load_coding(file);
  ValidationReport r = validate(s, depth);
  if (json) {
    nlohmann::ordered_json j;
    j["ok"] = r.ok();
    j["decided"] = r.decided();
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& c : r.results)
      j["results"].push_back({{"level", c.level},
                              {"condition", std::string(1, c.condition)},
                              {"verdict", to_string(c.verdict)},
                              {"detail", c.detail}});
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : r.results)
      if (c.verdict != Verdict::Pass)
        std::cout << "level " << c.level << " (" << c.condition << ") " << to_string(c.verdict) << ": " << c.detail
                  << "\n";
    if (!r.ok())
      std::cout << "fail (" << r.first_failure() << ")\n";
    else
      std::cout << (r.decided() ? "pass\n" : "unknown\n");
  }
  if (!r.ok()) return kError;
  return r.decided() ? kOk : kUndecided;
}

int cmd_probe(const std::string& file, std::size_t depth, const std::string& samples) {
  CodingSequence s = load_coding(file);
  ProbeResult p = probe_admissible(s, depth, parse_samples(samples));
  std::cout << to_string(p.status);
  if (!p.witness.empty()) std::cout << ": " << p.witness;
  std::cout << "\n";
  for (const auto& n : p.notes) std::cout << "  " << n << "\n";
  if (p.status == ProbeStatus::Violated) return kError;
  return p.status == ProbeStatus::Consistent ? kOk : kUndecided;
}

int cmd_unfold(const std::string& handle, std::size_t k, const std::string& coding) {
  if (!coding.empty()) register_sequence(load_coding(coding));
  std::string text = handle.rfind("N{", 0) == 0 ? handle : "N{" + handle + "}";
  NumberExpr h = parse_number(text);
  if (h.size() != 1 || !h.leading().mono.is_nested() || h.leading().coeff != 1)
    throw std::runtime_error("not a nested handle: " + handle);
  const Monomial& m = h.leading().mono;
  std::cout << print_number(unfold(NestedAtomHandle{m.seq(), m.level(), m.rank()}, k)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsx: exact hyperserial normal forms in w"};
  app.require_subcommand(1);
  int status = kOk;
  bool json = false;
  bool all = false;
  bool dot = false;
  std::string expr, expr2, file, samples = "1/2,1,2", coding;
  std::size_t depth = 4, k = 1, settle_n = 0;
  std::size_t check_depth = 0;

  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form");
  normalize_cmd->add_option("expr", expr)->required();
  normalize_cmd->add_flag("--json", json);

  auto* expand_cmd = app.add_subcommand("expand", "hyperserial expansion of a monomial as JSON");
  expand_cmd->add_option("expr", expr)->required();

  auto* paths_cmd = app.add_subcommand("paths", "paths with index classification");
  paths_cmd->add_option("expr", expr)->required();
  paths_cmd->add_flag("--all", all, "include non-maximal paths");
  paths_cmd->add_flag("--json", json);

  auto* tree_cmd = app.add_subcommand("tree", "tree expansion");
  tree_cmd->add_option("expr", expr)->required();
  auto* settle_opt = tree_cmd->add_option("--settle", settle_n, "stop after n settling steps");
  auto* dot_flag = tree_cmd->add_flag("--dot", dot);
  auto* json_flag = tree_cmd->add_flag("--json", json);
  dot_flag->excludes(json_flag);
  tree_cmd->add_option("--coding", coding, "coding sequence file to register first");

  auto* cmp_cmd = app.add_subcommand("cmp", "compare two numbers");
  cmp_cmd->add_option("a", expr)->required();
  cmp_cmd->add_option("b", expr2)->required();

  auto* deriv_cmd = app.add_subcommand("deriv", "derivative of a logarithmic hyperseries");
  deriv_cmd->add_option("series", expr)->required();

  auto* check_cmd = app.add_subcommand("check-coding", "validate a coding sequence file");
  check_cmd->add_option("file", file)->required();
  auto* check_depth_opt = check_cmd->add_option("--depth", check_depth, "number of levels checked");
  check_cmd->add_flag("--json", json);

  auto* probe_cmd = app.add_subcommand("probe-admissible", "finite-depth admissibility probe");
  probe_cmd->add_option("file", file)->required();
  probe_cmd->add_option("--depth", depth)->required();
  probe_cmd->add_option("--samples", samples, "comma-separated positive rationals");

  auto* unfold_cmd = app.add_subcommand("unfold", "unfold a nested handle");
  unfold_cmd->add_option("handle", expr, "N{name[@level][;rank]} or a sequence name")->required();
  unfold_cmd->add_option("--k", k)->required();
  unfold_cmd->add_option("--coding", coding, "coding sequence file to register first");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize_cmd) status = cmd_normalize(expr, json);
    if (*expand_cmd) status = cmd_expand(expr);
    if (*paths_cmd) status = cmd_paths(expr, all, json);
    if (*tree_cmd)
      status = cmd_tree(expr, *settle_opt ? std::optional<std::size_t>(settle_n) : std::nullopt, dot, json, coding);
    if (*cmp_cmd) status = cmd_cmp(expr, expr2);
    if (*deriv_cmd) status = cmd_deriv(expr);
    if (*check_cmd)
      status = cmd_check_coding(file, *check_depth_opt ? std::optional<std::size_t>(check_depth) : std::nullopt,
                                json);
    if (*probe_cmd) status = cmd_probe(file, depth, samples);
    if (*unfold_cmd) status = cmd_unfold(expr, k, coding);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const NormalizationUndecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const StuckError& e) {
    std::cerr << "stuck: " << e.what() << "\n";
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return status;
}
