#include <utility>

#include "hsx/expr.hpp"
#include "hsx/textio.hpp"

namespace hsx {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const MonoNode& checked(const MonoNode* n) {
  if (!n) throw std::logic_error("monomial 1 has no shell data");
  return *n;
}

std::shared_ptr<const MonoNode> seal(MonoNode n) {
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(n.kind));
  h = mix(h, n.psi.hash());
  h = mix(h, static_cast<std::size_t>(n.iota + 3));
  h = mix(h, n.beta.hash());
  h = mix(h, n.alpha.hash());
  h = mix(h, n.u.hash());
  h = mix(h, std::hash<std::string>{}(n.seq));
  h = mix(h, std::hash<std::uint64_t>{}(n.level));
  h = mix(h, n.rank.hash());
  n.hash = h;
  n.nested_inside = n.kind == TailKind::Nested || n.psi.has_nested() || n.u.has_nested();
  return std::make_shared<const MonoNode>(std::move(n));
}

}  // namespace

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "<";
    case Cmp::Equal: return "=";
    case Cmp::Greater: return ">";
    default: return "undecided";
  }
}

const char* to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "yes";
    case Truth::No: return "no";
    default: return "unknown";
  }
}

Monomial Monomial::raw_omega(NumberExpr psi, int iota, Ordinal beta) {
  MonoNode n;
  n.psi = std::move(psi);
  n.iota = iota;
  n.kind = TailKind::Omega;
  n.beta = std::move(beta);
  return Monomial(seal(std::move(n)));
}

Monomial Monomial::raw_hyper(NumberExpr psi, int iota, Ordinal beta, Ordinal alpha, NumberExpr u) {
  MonoNode n;
  n.psi = std::move(psi);
  n.iota = iota;
  n.kind = TailKind::Hyper;
  n.beta = std::move(beta);
  n.alpha = std::move(alpha);
  n.u = std::move(u);
  return Monomial(seal(std::move(n)));
}

Monomial Monomial::raw_nested(std::string seq, std::uint64_t level, NumberExpr rank) {
  MonoNode n;
  n.kind = TailKind::Nested;
  n.seq = std::move(seq);
  n.level = level;
  n.rank = std::move(rank);
  return Monomial(seal(std::move(n)));
}

TailKind Monomial::kind() const { return checked(node_.get()).kind; }
const NumberExpr& Monomial::psi() const { return checked(node_.get()).psi; }
int Monomial::iota() const { return node_ ? node_->iota : 0; }
const Ordinal& Monomial::beta() const { return checked(node_.get()).beta; }
const Ordinal& Monomial::alpha() const { return checked(node_.get()).alpha; }
const NumberExpr& Monomial::u() const { return checked(node_.get()).u; }
const std::string& Monomial::seq() const { return checked(node_.get()).seq; }
std::uint64_t Monomial::level() const { return checked(node_.get()).level; }
const NumberExpr& Monomial::rank() const { return checked(node_.get()).rank; }

bool Monomial::is_atom() const {
  return node_ && node_->kind != TailKind::Nested && node_->psi.is_zero() && node_->iota == 1;
}

bool Monomial::has_nested() const { return node_ && node_->nested_inside; }

std::size_t Monomial::hash() const { return node_ ? node_->hash : 0x1234567; }

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const MonoNode& x = *a.node_;
  const MonoNode& y = *b.node_;
  if (x.hash != y.hash) return false;
  return x.kind == y.kind && x.iota == y.iota && x.level == y.level && x.seq == y.seq &&
         x.beta == y.beta && x.alpha == y.alpha && x.psi == y.psi && x.u == y.u && x.rank == y.rank;
}

NumberExpr NumberExpr::constant(const Rational& q) {
  if (q == 0) return NumberExpr{};
  return from_sorted({Term{q, Monomial::one()}});
}

NumberExpr NumberExpr::term(const Rational& c, Monomial m) {
  if (c == 0) return NumberExpr{};
  return from_sorted({Term{c, std::move(m)}});
}

NumberExpr NumberExpr::omega() { return of(Monomial::raw_omega(NumberExpr{}, 1, Ordinal{})); }

NumberExpr NumberExpr::from_sorted(std::vector<Term> terms) {
  NumberExpr e;
  e.terms_ = std::move(terms);
  std::size_t h = 0xabcdef;
  for (const auto& t : e.terms_) {
    h = mix(h, hash_rational(t.coeff));
    h = mix(h, t.mono.hash());
  }
  e.hash_ = h;
  return e;
}

const Term& NumberExpr::leading() const {
  if (terms_.empty()) throw std::logic_error("zero has no leading term");
  return terms_.front();
}

const Term& NumberExpr::last() const {
  if (terms_.empty()) throw std::logic_error("zero has no last term");
  return terms_.back();
}

bool NumberExpr::is_monomial() const { return terms_.size() == 1 && terms_[0].coeff == 1; }

bool NumberExpr::has_nested() const {
  for (const auto& t : terms_)
    if (t.mono.has_nested()) return true;
  return false;
}

std::size_t NumberExpr::hash() const { return terms_.empty() ? 0 : hash_; }

bool operator==(const NumberExpr& a, const NumberExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.hash() != b.hash()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

NormalizationUndecided::NormalizationUndecided(Monomial a, Monomial b)
    : std::runtime_error("undecided comparison between " + print_monomial(a) + " and " +
                         print_monomial(b)),
      first(std::move(a)),
      second(std::move(b)) {}

}  // namespace hsx
