#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hsx/expr.hpp"

namespace hsx {

struct CodingLevel {
  NumberExpr phi;
  int eps = 1;
  NumberExpr psi;
  int iota = 1;
  Ordinal alpha = Ordinal::nat(1);
};

// Finitely presented coding sequence: an explicit list of levels, and
// optionally a repeating block starting at `period`. Each pass through the
// block composes phi and psi with L_shift.
class CodingSequence {
 public:
  CodingSequence() = default;
  CodingSequence(std::string name, std::vector<CodingLevel> levels,
                 std::optional<std::size_t> period = std::nullopt, Ordinal shift = Ordinal{});
  CodingSequence(const CodingSequence& o);
  CodingSequence& operator=(const CodingSequence& o);

  const std::string& name() const { return name_; }
  const std::vector<CodingLevel>& listed() const { return levels_; }
  std::optional<std::size_t> period() const { return period_; }
  const Ordinal& shift() const { return shift_; }
  bool infinite() const { return period_.has_value(); }
  // Number of defined levels, or SIZE_MAX when periodic.
  std::size_t horizon() const;
  const CodingLevel& level(std::size_t i) const;

 private:
  std::string name_;
  std::vector<CodingLevel> levels_;
  std::optional<std::size_t> period_;
  Ordinal shift_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, std::shared_ptr<const CodingLevel>> cache_;
};

enum class Verdict { Pass, Fail, Unknown };
const char* to_string(Verdict v);

struct ConditionResult {
  std::size_t level;
  char condition;  // 'a'..'e'
  Verdict verdict;
  std::string detail;
};

struct ValidationReport {
  std::vector<ConditionResult> results;
  bool ok() const;           // no failures
  bool decided() const;      // no unknowns
  // First failing condition letter, or 0.
  char first_failure() const;
};

// Levels 0..depth-1 are checked; periodic sequences default to two full
// passes through the block.
ValidationReport validate(const CodingSequence& s, std::optional<std::size_t> depth = std::nullopt);

// Phi_i(a) = phi_i + eps_i e^psi_i (E_alpha_i a)^iota_i and
// Phi_{j;i} = Phi_i o ... o Phi_{j-1}.
NumberExpr phi_step(const CodingSequence& s, std::size_t i, const NumberExpr& a);
NumberExpr phi_map(const CodingSequence& s, std::size_t i, std::size_t j, const NumberExpr& x);
// prod_{i <= k < j} eps_k iota_k.
int sigma(const CodingSequence& s, std::size_t i, std::size_t j);

struct Generator {
  char side;       // 'L' or 'R'
  int clause;      // 1, 2 or 3
  Rational sample;
  std::string source;  // monomial of supp phi_i / supp psi_i, or phi_{i+1}
  std::optional<NumberExpr> value;
  std::string stuck;
  // Preimage under Phi_{coord;}; value = Phi_{coord;}(local).
  std::size_t coord = 0;
  std::optional<NumberExpr> local;
};

std::vector<Generator> cut_generators(const CodingSequence& s, std::size_t i,
                                      const std::vector<Rational>& samples);

enum class ProbeStatus { Consistent, Violated, Unknown };
const char* to_string(ProbeStatus p);

struct ProbeResult {
  ProbeStatus status = ProbeStatus::Consistent;
  std::string witness;
  std::vector<std::string> notes;
};

ProbeResult probe_admissible(const CodingSequence& s, std::size_t depth,
                             const std::vector<Rational>& samples = {Rational(1, 2), Rational(1),
                                                                     Rational(2)});

struct NestedAtomHandle {
  std::string seq;
  std::uint64_t level = 0;
  NumberExpr rank;
  Monomial monomial() const;
  NestedAtomHandle shifted() const;  // level + 1 with rank scaled by eps*iota
};

// Append-only registry of named sequences.
NestedAtomHandle register_sequence(const CodingSequence& s);
std::shared_ptr<const CodingSequence> find_sequence(const std::string& name);
void clear_registry();

// k levels of lazy unfolding.
NumberExpr unfold(const NestedAtomHandle& h, std::size_t k);
// Structural replacement of every occurrence of the handle atom.
NumberExpr substitute_handle(const NumberExpr& e, const Monomial& handle, const NumberExpr& value);

}  // namespace hsx
