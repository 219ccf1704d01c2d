#pragma once

// Corpus checks shared by the property tests and the acceptance runner.
// Each returns a summary; `failure` is empty when the check holds.

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "gen.hpp"
#include "hsx/expansion.hpp"
#include "hsx/textio.hpp"
#include "hsx/treeexp.hpp"

namespace corpus {

struct Summary {
  std::size_t checked = 0;
  std::size_t stuck = 0;
  std::size_t undecided = 0;
  std::string failure;
  bool ok() const { return failure.empty() && undecided == 0; }
};

// Distinct normal-form monomials until `want` have been checked.
inline Summary expansion_roundtrip(std::uint64_t seed, std::size_t want) {
  using namespace hsx;
  Summary s;
  gen::Rng r(seed);
  gen::ExprGen g(r);
  std::map<std::string, std::string> by_mono;
  std::map<std::string, std::string> by_tuple;
  for (std::size_t attempt = 0; s.checked < want && attempt < 20 * want; ++attempt) {
    std::string text = g.monomial(4);
    try {
      NumberExpr e = parse_number(text);
      if (e.size() != 1) continue;
      Monomial m = e.leading().mono;
      std::string key = print_monomial(m);
      if (by_mono.count(key)) continue;
      ExpansionTuple t = expand(m);
      Monomial back = assemble(t);
      if (!(back == m)) return s.failure = "assemble(expand(m)) != m for " + key, s;
      if (!(expand(back) == t)) return s.failure = "expand(assemble(t)) != t for " + key, s;
      std::string tj = expansion_json(t);
      by_mono.emplace(key, tj);
      auto [it, fresh] = by_tuple.emplace(tj, key);
      if (!fresh) return s.failure = "tuples " + tj + " shared by " + it->second + " and " + key, s;
      ++s.checked;
    } catch (const NormalizationUndecided& e) {
      ++s.undecided;
      if (s.failure.empty()) s.failure = std::string("undecided: ") + e.what();
    } catch (const StuckError&) {
      ++s.stuck;
    } catch (const std::exception& e) {
      return s.failure = text + ": " + e.what(), s;
    }
  }
  if (s.checked < want && s.failure.empty()) s.failure = "corpus too small: " + std::to_string(s.checked);
  return s;
}

inline std::string dotted(const std::string& what, const std::string& text) { return what + " for " + text; }

struct TreeSummary {
  std::size_t checked = 0;
  std::size_t max_height = 0;
  std::string failure;
  bool ok() const { return failure.empty(); }
};

// Standard expansion height, evaluation round trip, settling refinement
// and order-independent fixpoints on generated numbers.
inline TreeSummary tree_laws(std::uint64_t seed, std::size_t want, std::size_t settle_upto = 4) {
  using namespace hsx;
  TreeSummary s;
  gen::Rng r(seed);
  gen::ExprGen g(r);
  for (std::size_t attempt = 0; s.checked < want && attempt < 20 * want; ++attempt) {
    std::string text = g.number(3);
    NumberExpr a;
    try {
      a = parse_number(text);
    } catch (const StuckError&) {
      continue;
    } catch (const NormalizationUndecided&) {
      continue;
    }
    try {
      ExpTree st = standard_expansion(a);
      s.max_height = std::max(s.max_height, st.height());
      if (st.height() > 6) return s.failure = dotted("standard expansion height " + std::to_string(st.height()), text), s;
      for (const auto& t : a.terms()) {
        ExpTree sm = standard_monomial_expansion(t.mono);
        if (sm.height() > 6) return s.failure = dotted("monomial expansion height", text), s;
      }
      Description d = tree_expansion(a);
      if (!d.tree.stubs().empty()) continue;
      if (!(evaluate(d.tree) == a)) return s.failure = dotted("evaluate(tree_expansion(a)) != a", text), s;
      if (!is_tree_expansion(d.tree)) return s.failure = dotted("not a tree expansion", text), s;
      ExpTree prev = settle(a, 0);
      for (std::size_t n = 0; n <= settle_upto; ++n) {
        ExpTree next = settle(a, n + 1);
        if (!refines(next, prev)) return s.failure = dotted("settle " + std::to_string(n + 1) + " does not refine", text), s;
        prev = std::move(next);
      }
      if (!(tree_expansion(a, seed + attempt) == d)) return s.failure = dotted("shuffled settling differs", text), s;
      ++s.checked;
    } catch (const std::exception& e) {
      return s.failure = text + ": " + e.what(), s;
    }
  }
  if (s.checked < want && s.failure.empty()) s.failure = "corpus too small: " + std::to_string(s.checked);
  return s;
}

// print(parse(s)) is a fixpoint of print . parse.
inline Summary print_parse(std::uint64_t seed, std::size_t want) {
  using namespace hsx;
  Summary s;
  gen::Rng r(seed);
  gen::ExprGen g(r);
  while (s.checked < want) {
    std::string text = g.number(3);
    try {
      NumberExpr e = parse_number(text);
      std::string p = print_number(e);
      NumberExpr again = parse_number(p);
      if (!(again == e) || print_number(again) != p) return s.failure = "not a fixpoint: " + text, s;
    } catch (const NormalizationUndecided& e) {
      ++s.undecided;
    } catch (const std::exception& e) {
      return s.failure = text + ": " + e.what(), s;
    }
    ++s.checked;
  }
  return s;
}

}  // namespace corpus
