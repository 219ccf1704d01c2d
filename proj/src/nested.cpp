#include "hsx/nested.hpp"

#include <limits>

#include "hsx/textio.hpp"

namespace hsx {

CodingSequence::CodingSequence(std::string name, std::vector<CodingLevel> levels,
                               std::optional<std::size_t> period, Ordinal shift)
    : name_(std::move(name)), levels_(std::move(levels)), period_(period), shift_(std::move(shift)) {
  if (levels_.empty()) throw std::invalid_argument("coding sequence without levels");
  if (period_ && *period_ >= levels_.size())
    throw std::invalid_argument("period index outside the listed levels");
}

CodingSequence::CodingSequence(const CodingSequence& o)
    : name_(o.name_), levels_(o.levels_), period_(o.period_), shift_(o.shift_) {}

CodingSequence& CodingSequence::operator=(const CodingSequence& o) {
  if (this != &o) {
    name_ = o.name_;
    levels_ = o.levels_;
    period_ = o.period_;
    shift_ = o.shift_;
    std::lock_guard<std::mutex> lock(mu_);
    cache_.clear();
  }
  return *this;
}

std::size_t CodingSequence::horizon() const {
  return period_ ? std::numeric_limits<std::size_t>::max() : levels_.size();
}

const CodingLevel& CodingSequence::level(std::size_t i) const {
  if (i < levels_.size()) return levels_[i];
  if (!period_) throw std::out_of_range("level " + std::to_string(i) + " beyond the listed levels");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(i);
  if (it != cache_.end()) return *it->second;
  std::size_t p = *period_;
  std::size_t block = levels_.size() - p;
  std::size_t cycles = (i - p) / block;
  const CodingLevel& base = levels_[p + (i - p) % block];
  Ordinal s;
  for (std::size_t c = 0; c < cycles; ++c) s = ord_sum(s, shift_);
  auto lv = std::make_shared<CodingLevel>(base);
  lv->phi = compose_L(base.phi, s);
  lv->psi = compose_L(base.psi, s);
  auto [pos, ok] = cache_.emplace(i, std::move(lv));
  (void)ok;
  return *pos->second;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "unknown";
  }
}

const char* to_string(ProbeStatus p) {
  switch (p) {
    case ProbeStatus::Consistent: return "consistent";
    case ProbeStatus::Violated: return "violated";
    default: return "unknown";
  }
}

bool ValidationReport::ok() const {
  for (const auto& r : results)
    if (r.verdict == Verdict::Fail) return false;
  return true;
}

bool ValidationReport::decided() const {
  for (const auto& r : results)
    if (r.verdict == Verdict::Unknown) return false;
  return true;
}

char ValidationReport::first_failure() const {
  for (const auto& r : results)
    if (r.verdict == Verdict::Fail) return r.condition;
  return 0;
}

namespace {

Verdict of_bool(bool b) { return b ? Verdict::Pass : Verdict::Fail; }

bool purely_large_decided(const NumberExpr& a, bool& decided) {
  decided = true;
  for (const auto& t : a.terms()) {
    Cmp c = compare_to_one(t.mono);
    if (c == Cmp::Undecided) decided = false;
    else if (c != Cmp::Greater) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const CodingSequence& s, std::optional<std::size_t> depth) {
  ValidationReport rep;
  std::size_t listed = s.listed().size();
  std::size_t block = s.period() ? listed - *s.period() : 0;
  std::size_t n = depth ? *depth : (s.period() ? listed + 2 * block : listed);
  auto has = [&](std::size_t i) { return i < s.horizon(); };
  for (std::size_t i = 0; i < n && has(i); ++i) {
    const CodingLevel& L = s.level(i);
    bool decided = true;
    bool pl = purely_large_decided(L.psi, decided);
    rep.results.push_back({i, 'a', decided || !pl ? of_bool(pl) : Verdict::Unknown,
                           pl ? "" : "psi is not purely large"});
    if (!has(i + 1)) {
      for (char c : {'b', 'c', 'd', 'e'})
        rep.results.push_back({i, c, Verdict::Unknown, "next level is not listed"});
      continue;
    }
    const CodingLevel& N = s.level(i + 1);
    // (b)
    if (N.phi.is_zero()) {
      rep.results.push_back({i, 'b', Verdict::Pass, ""});
    } else {
      Truth t = is_truncated(N.phi, L.alpha);
      Verdict v = t == Truth::Yes ? Verdict::Pass : t == Truth::No ? Verdict::Fail : Verdict::Unknown;
      rep.results.push_back({i, 'b', v, v == Verdict::Pass ? "" : "phi of the next level is not truncated"});
    }
    // (c)
    bool one = L.alpha == Ordinal::nat(1);
    bool c_ok = !one || (L.psi.is_zero() && (!N.psi.is_zero() || N.alpha == Ordinal::nat(1)));
    rep.results.push_back({i, 'c', of_bool(c_ok), c_ok ? "" : "alpha = 1 constraint violated"});
    // (d)
    bool d_ok = !(N.phi.is_zero() && N.psi.is_zero()) ||
                (L.alpha >= N.alpha && N.eps == 1 && N.iota == 1);
    rep.results.push_back({i, 'd', of_bool(d_ok), d_ok ? "" : "empty next level constraint violated"});
    // (e)
    std::size_t limit = s.period() ? i + 1 + listed + block : listed;
    Verdict e = s.period() ? Verdict::Fail : Verdict::Unknown;
    for (std::size_t j = i + 1; j < limit; ++j) {
      const CodingLevel& J = s.level(j);
      if (!J.phi.is_zero() || !J.psi.is_zero()) {
        e = Verdict::Pass;
        break;
      }
    }
    rep.results.push_back({i, 'e', e, e == Verdict::Pass ? "" : "no later level with phi or psi nonzero"});
  }
  return rep;
}

NumberExpr phi_step(const CodingSequence& s, std::size_t i, const NumberExpr& a) {
  const CodingLevel& L = s.level(i);
  Monomial e = L.alpha == Ordinal::nat(1) ? exp_purely_large(a) : hyperexp(L.alpha, a);
  Monomial m = mono_mul(exp_purely_large(L.psi), mono_pow(e, L.iota));
  return add(L.phi, NumberExpr::term(Rational(L.eps), m));
}

NumberExpr phi_map(const CodingSequence& s, std::size_t i, std::size_t j, const NumberExpr& x) {
  if (i > j) throw std::invalid_argument("phi_map requires i <= j");
  NumberExpr cur = x;
  for (std::size_t k = j; k > i; --k) cur = phi_step(s, k - 1, cur);
  return cur;
}

int sigma(const CodingSequence& s, std::size_t i, std::size_t j) {
  int r = 1;
  for (std::size_t k = i; k < j; ++k) r *= s.level(k).eps * s.level(k).iota;
  return r;
}

std::vector<Generator> cut_generators(const CodingSequence& s, std::size_t i,
                                      const std::vector<Rational>& samples) {
  std::vector<Generator> out;
  const CodingLevel& L = s.level(i);
  int sg = sigma(s, 0, i);
  auto push = [&](char side, int clause, const Rational& r, std::string src, std::size_t coord, auto make) {
    Generator g{side, clause, r, std::move(src), std::nullopt, "", coord, std::nullopt};
    try {
      g.local = make();
      g.value = phi_map(s, 0, coord, *g.local);
    } catch (const StuckError& e) {
      g.stuck = e.what();
    } catch (const NormalizationUndecided& e) {
      g.stuck = e.what();
    }
    out.push_back(std::move(g));
  };
  for (const Rational& r : samples) {
    for (const auto& t : L.phi.terms()) {
      for (int side : {-1, 1}) {
        push(side < 0 ? 'L' : 'R', 1, r, print_monomial(t.mono), i,
             [&] { return add(L.phi, NumberExpr::term(Rational(side * sg) * r, t.mono)); });
      }
    }
    for (const auto& t : L.psi.terms()) {
      for (int side : {-1, 1}) {
        push(side < 0 ? 'L' : 'R', 2, r, print_monomial(t.mono), i, [&] {
          NumberExpr p = add(L.psi, NumberExpr::term(Rational(side * L.eps * sg) * r, t.mono));
          return add(L.phi, NumberExpr::term(Rational(L.eps), exp_purely_large(p)));
        });
      }
    }
  }
  if (i + 1 < s.horizon()) {
    const CodingLevel& N = s.level(i + 1);
    if (!N.phi.is_zero()) {
      char side = sigma(s, 0, i + 1) * N.eps == 1 ? 'L' : 'R';
      push(side, 3, Rational(1), print_number(N.phi), i + 1, [&] { return N.phi; });
    }
  }
  return out;
}

ProbeResult probe_admissible(const CodingSequence& s, std::size_t depth,
                             const std::vector<Rational>& samples) {
  ProbeResult res;
  if (depth == 0 || depth >= s.horizon()) {
    res.status = ProbeStatus::Unknown;
    res.notes.push_back("depth outside the available levels");
    return res;
  }
  const CodingLevel& D = s.level(depth);
  if (D.phi.is_zero()) {
    res.status = ProbeStatus::Unknown;
    res.notes.push_back("phi at the probe depth is zero; no witness tower");
    return res;
  }
  // w[j] = Phi_{j;d}(phi_d); Phi_{0;j} is strictly monotone with sign
  // sigma_{;j}, so each generator is compared in its own coordinates.
  std::vector<NumberExpr> w(depth + 1);
  w[depth] = D.phi;
  try {
    for (std::size_t j = depth; j-- > 0;) w[j] = phi_step(s, j, w[j + 1]);
  } catch (const std::exception& e) {
    res.status = ProbeStatus::Unknown;
    res.notes.push_back(std::string("witness not computable: ") + e.what());
    return res;
  }
  res.notes.push_back("witness " + print_number(w[0]));
  for (std::size_t j = 0; j < depth; ++j) {
    for (const auto& g : cut_generators(s, j, samples)) {
      // The third clause of the last level coincides with the witness itself.
      if (g.clause == 3 && j + 1 >= depth) continue;
      std::string tag = std::string(1, g.side) + std::to_string(j) + "[" + std::to_string(g.clause) +
                        "] r=" + g.sample.get_str() + " at " + g.source;
      if (!g.local) {
        res.status = ProbeStatus::Unknown;
        res.notes.push_back(tag + ": " + g.stuck);
        continue;
      }
      Cmp c = compare_numbers(*g.local, w[g.coord]);
      if (sigma(s, 0, g.coord) < 0) c = reverse(c);
      Cmp want = g.side == 'L' ? Cmp::Less : Cmp::Greater;
      if (c == want) continue;
      if (c == Cmp::Undecided) {
        if (res.status == ProbeStatus::Consistent) res.status = ProbeStatus::Unknown;
        res.notes.push_back(tag + ": undecided");
        continue;
      }
      res.status = ProbeStatus::Violated;
      res.witness = tag + ": " + print_number(*g.local) + (g.side == 'L' ? " >= " : " <= ") + print_number(w[g.coord]) +
                    " at level " + std::to_string(g.coord);
      return res;
    }
  }
  return res;
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::shared_ptr<const CodingSequence>>& registry() {
  static std::map<std::string, std::shared_ptr<const CodingSequence>> r;
  return r;
}

}  // namespace

NestedAtomHandle register_sequence(const CodingSequence& s) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& r = registry();
  auto it = r.find(s.name());
  if (it != r.end()) {
    if (print_coding(*it->second) != print_coding(s))
      throw std::invalid_argument("sequence '" + s.name() + "' is already registered differently");
  } else {
    r.emplace(s.name(), std::make_shared<const CodingSequence>(s));
  }
  return NestedAtomHandle{s.name(), 0, NumberExpr{}};
}

std::shared_ptr<const CodingSequence> find_sequence(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(name);
  return it == registry().end() ? nullptr : it->second;
}

void clear_registry() {
  std::lock_guard<std::mutex> lock(registry_mutex());
  registry().clear();
}

Monomial NestedAtomHandle::monomial() const { return Monomial::raw_nested(seq, level, rank); }

NestedAtomHandle NestedAtomHandle::shifted() const {
  auto s = find_sequence(seq);
  if (!s) throw StuckError("unknown nested sequence '" + seq + "'");
  const CodingLevel& L = s->level(level);
  return NestedAtomHandle{seq, level + 1, scale(rank, Rational(L.eps * L.iota))};
}

NumberExpr unfold_once(const Monomial& handle) {
  if (!handle.is_nested()) throw std::invalid_argument("unfold of a non-nested monomial");
  auto s = find_sequence(handle.seq());
  if (!s) throw StuckError("unknown nested sequence '" + handle.seq() + "'");
  const CodingLevel& L = s->level(handle.level());
  Monomial inner =
      Monomial::raw_nested(handle.seq(), handle.level() + 1, scale(handle.rank(), Rational(L.eps * L.iota)));
  Monomial tail = Monomial::raw_hyper(L.psi, L.iota, Ordinal{}, L.alpha, NumberExpr::of(inner));
  std::vector<Term> ts = L.phi.terms();
  ts.push_back(Term{Rational(L.eps), tail});
  return NumberExpr::from_sorted(std::move(ts));
}

NumberExpr substitute_handle(const NumberExpr& e, const Monomial& handle, const NumberExpr& value) {
  if (!e.has_nested()) return e;
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    const Monomial& m = t.mono;
    if (m == handle) {
      for (const auto& v : value.terms()) out.push_back(Term{t.coeff * v.coeff, v.mono});
      continue;
    }
    if (m.is_one() || !m.has_nested() || m.is_nested()) {
      out.push_back(t);
      continue;
    }
    NumberExpr psi = substitute_handle(m.psi(), handle, value);
    Monomial r = m.kind() == TailKind::Omega
                     ? Monomial::raw_omega(psi, m.iota(), m.beta())
                     : Monomial::raw_hyper(psi, m.iota(), m.beta(), m.alpha(),
                                           substitute_handle(m.u(), handle, value));
    out.push_back(Term{t.coeff, r});
  }
  return NumberExpr::from_sorted(std::move(out));
}

NumberExpr unfold(const NestedAtomHandle& h, std::size_t k) {
  NumberExpr e = NumberExpr::of(h.monomial());
  NestedAtomHandle cur = h;
  for (std::size_t i = 0; i < k; ++i) {
    e = substitute_handle(e, cur.monomial(), unfold_once(cur.monomial()));
    cur = cur.shifted();
  }
  return e;
}

}  // namespace hsx
