#include "hsx/paths.hpp"

#include <json.hpp>

#include "hsx/series.hpp"
#include "hsx/textio.hpp"

namespace hsx {

namespace {

bool has_term(const NumberExpr& e, const PathEntry& t) {
  for (const auto& x : e.terms())
    if (x.coeff == t.coeff && x.mono == t.mono) return true;
  return false;
}

bool in_support(const NumberExpr& e, const Monomial& m) {
  for (const auto& x : e.terms())
    if (x.mono == m) return true;
  return false;
}

bool ends_path(const Monomial& m) {
  return m.is_one() || m.is_nested() || NumberExpr::of(m) == NumberExpr::omega();
}

std::string entry_string(const PathEntry& e) { return print_number(NumberExpr::term(e.coeff, e.mono)); }

}  // namespace

Path Path::in(const NumberExpr& root, std::vector<PathEntry> entries) {
  if (entries.empty()) throw PathError("a path has at least one entry");
  if (!has_term(root, entries[0])) throw PathError("first entry " + entry_string(entries[0]) + " is not a term of the root");
  Path p;
  p.root_ = root;
  p.u_.push_back(NumberExpr::term(entries[0].coeff, entries[0].mono));
  p.psi_.push_back(NumberExpr{});
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const PathEntry& e = entries[i];
    if (e.coeff == 0) throw PathError("zero coefficient at index " + std::to_string(i));
    if (i > 0 && !has_term(p.psi_[i], e) && !has_term(p.u_[i], e))
      throw PathError("entry " + std::to_string(i) + " (" + entry_string(e) + ") is not a term of psi or u");
    if (ends_path(e.mono) && i + 1 != entries.size())
      throw PathError("entry " + std::to_string(i) + " is terminal but the path continues");
    ExpansionTuple t = expand(e.mono);
    p.u_.push_back(t.type() == ExpansionType::Nested ? NumberExpr{} : t.u);
    p.psi_.push_back(t.psi);
    p.exp_.push_back(std::move(t));
  }
  p.entries_ = std::move(entries);
  return p;
}

Path Path::from_entries(std::vector<PathEntry> entries) {
  if (entries.empty()) throw PathError("a path has at least one entry");
  NumberExpr root = NumberExpr::term(entries[0].coeff, entries[0].mono);
  return in(root, std::move(entries));
}

int Path::s(std::size_t i) const {
  if (i == 0 || i >= length()) throw PathError("s is defined for 0 < i < |P|");
  return in_support(psi_[i], entries_[i].mono) ? -1 : 1;
}

NumberExpr Path::a(std::size_t i) const {
  if (i == 0) return root_;
  return s(i) < 0 ? psi_[i] : u_[i];
}

bool Path::terminal() const {
  const Monomial& m = entries_.back().mono;
  return m.is_one() || NumberExpr::of(m) == NumberExpr::omega();
}

bool Path::ends_nested() const { return entries_.back().mono.is_nested(); }

namespace {

void dfs(const NumberExpr& root, std::vector<PathEntry>& cur, const NumberExpr& psi, const NumberExpr& u,
         std::vector<Path>& out) {
  auto visit = [&](const Term& t) {
    cur.push_back(PathEntry{t.coeff, t.mono});
    out.push_back(Path::in(root, cur));
    if (!ends_path(t.mono)) {
      ExpansionTuple e = expand(t.mono);
      dfs(root, cur, e.psi, e.u, out);
    }
    cur.pop_back();
  };
  for (const auto& t : psi.terms()) visit(t);
  for (const auto& t : u.terms()) visit(t);
}

}  // namespace

std::vector<Path> enumerate_paths(const NumberExpr& a) {
  std::vector<Path> out;
  std::vector<PathEntry> cur;
  dfs(a, cur, NumberExpr{}, a, out);
  return out;
}

std::vector<Path> maximal_paths(const NumberExpr& a) {
  std::vector<Path> out;
  for (auto& p : enumerate_paths(a))
    if (p.terminal() || p.ends_nested()) out.push_back(std::move(p));
  return out;
}

Path shift(const Path& p, std::size_t k) {
  if (k >= p.length()) throw PathError("shift index " + std::to_string(k) + " is not below the length");
  if (k == 0) return p;
  std::vector<PathEntry> rest(p.entries().begin() + static_cast<std::ptrdiff_t>(k), p.entries().end());
  return Path::in(p.a(k), std::move(rest));
}

Path concat(const Path& p, const Path& q) {
  if (p.terminal()) throw PathError("cannot extend a terminal path");
  const PathEntry& q0 = q.entries().front();
  std::size_t n = p.length();
  if (!has_term(p.u(n), q0) && !has_term(p.psi(n), q0))
    throw PathError("first entry of the second path is not a term of psi or u at the end of the first");
  std::vector<PathEntry> e = p.entries();
  e.insert(e.end(), q.entries().begin(), q.entries().end());
  return Path::in(p.root(), std::move(e));
}

IndexClass classify_index(const Path& p, std::size_t i) {
  if (i >= p.length()) throw PathError("index " + std::to_string(i) + " is not below the length");
  const PathEntry& e = p.entries()[i];
  const NumberExpr& u = p.u(i);
  if (u.is_zero() || !(u.last().mono == e.mono)) return {false, 1};
  const ExpansionTuple& t = p.expansion(i);
  if (!t.beta.is_zero()) return {false, 2};
  if (e.coeff != 1 && e.coeff != -1) return {false, 3};
  if (in_support(p.psi(i), e.mono)) return {false, 4};
  return {true, 0};
}

namespace {

enum class Tri { Yes, No, Unknown };

// a = phi ++ c m with b = phi ++ r m' ++ delta; returns the index of m in b.
bool same_prefix(const NumberExpr& a, const NumberExpr& b) {
  if (a.is_zero() || b.size() < a.size()) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a.terms()[i].coeff != b.terms()[i].coeff || !(a.terms()[i].mono == b.terms()[i].mono)) return false;
  return true;
}

Tri rel(const NumberExpr& a, const NumberExpr& b, std::size_t n);

Tri rel0(const NumberExpr& a, const NumberExpr& b) {
  if (is_truncation(a, b)) return Tri::Yes;
  if (!same_prefix(a, b)) return Tri::No;
  const Term& x = a.last();
  const Term& y = b.terms()[a.size() - 1];
  if (x.mono == y.mono && x.coeff == sgn(y.coeff)) return Tri::Yes;
  return Tri::No;
}

Tri config1(const NumberExpr& a, const NumberExpr& b, std::size_t n) {
  const Term& x = a.last();
  const Term& y = b.terms()[a.size() - 1];
  const Monomial& m = x.mono;
  const Monomial& q = y.mono;
  if (m.is_one() || q.is_one() || m.kind() != TailKind::Hyper || q.kind() != TailKind::Hyper) return Tri::No;
  if (!m.beta().is_zero() || !(m.alpha() == q.alpha()) || m.iota() != q.iota() || !(m.psi() == q.psi()))
    return Tri::No;
  if (!(ord_mul(q.beta(), Ordinal::omega()) < q.alpha())) return Tri::No;
  return rel(m.u(), q.u(), n - 1);
}

Tri config2(const NumberExpr& a, const NumberExpr& b, std::size_t n) {
  const Term& y = b.terms()[a.size() - 1];
  const Monomial& m = a.last().mono;
  const Monomial& q = y.mono;
  if (q.is_one() || q.is_nested() || m.is_nested()) return q.is_one() ? Tri::No : Tri::Unknown;
  Monomial atom = q.kind() == TailKind::Hyper ? Monomial::raw_hyper(NumberExpr{}, 1, q.beta(), q.alpha(), q.u())
                                              : Monomial::raw_omega(NumberExpr{}, 1, q.beta());
  if (!is_log_atomic(atom)) return Tri::No;
  NumberExpr psi = mono_log(m);
  return rel(psi, q.psi(), n - 1);
}

Tri rel(const NumberExpr& a, const NumberExpr& b, std::size_t n) {
  if (n == 0) return rel0(a, b);
  if (!same_prefix(a, b)) return Tri::No;
  if (a.last().coeff != sgn(b.terms()[a.size() - 1].coeff)) return Tri::No;
  Tri r1 = config1(a, b, n);
  if (r1 == Tri::Yes) return r1;
  Tri r2 = Tri::Unknown;
  try {
    r2 = config2(a, b, n);
  } catch (const std::exception&) {
    r2 = Tri::Unknown;
  }
  if (r2 == Tri::Yes) return r2;
  return (r1 == Tri::Unknown || r2 == Tri::Unknown) ? Tri::Unknown : Tri::No;
}

}  // namespace

TruncResult nested_trunc(const NumberExpr& a, const NumberExpr& b, std::size_t depth) {
  bool unknown = false;
  for (std::size_t n = 0; n <= depth; ++n) {
    Tri r = rel(a, b, n);
    if (r == Tri::Yes) return {TruncResult::Kind::Holds, n};
    if (r == Tri::Unknown) unknown = true;
  }
  return {unknown ? TruncResult::Kind::Unknown : TruncResult::Kind::Fails, 0};
}

std::string print_path(const Path& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ", ";
    s += entry_string(p.entries()[i]);
  }
  return s + ")";
}

std::string paths_json(const std::vector<Path>& ps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : ps) {
    nlohmann::ordered_json j;
    j["entries"] = nlohmann::ordered_json::array();
    j["classification"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.length(); ++i) {
      const auto& e = p.entries()[i];
      j["entries"].push_back({{"coeff", e.coeff.get_str()}, {"mono", print_monomial(e.mono)}});
      IndexClass c = classify_index(p, i);
      j["classification"].push_back(c.good ? std::string("good") : "bad" + std::to_string(c.rule));
    }
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

}  // namespace hsx
