#include "hsx/ordinal.hpp"

#include <algorithm>
#include <limits>

namespace hsx {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw OrdinalError("ordinal coefficient overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw OrdinalError("ordinal coefficient overflow");
  return a * b;
}

}  // namespace

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back(OrdTerm{Ordinal{}, n});
  return r;
}

Ordinal Ordinal::omega() { return omega_pow(nat(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coeff) {
  Ordinal r;
  if (coeff > 0) r.terms_.push_back(OrdTerm{exponent, coeff});
  return r;
}

Ordinal Ordinal::from_terms(std::vector<OrdTerm> terms) {
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_part() const {
  if (terms_.empty() || !terms_.back().exponent.is_zero()) return 0;
  return terms_.back().coefficient;
}

bool Ordinal::is_successor() const { return finite_part() > 0; }

bool Ordinal::is_limit() const { return !is_zero() && finite_part() == 0; }

bool Ordinal::is_power_of_omega() const {
  return terms_.size() == 1 && terms_[0].coefficient == 1;
}

Ordinal Ordinal::log_omega() const {
  if (!is_power_of_omega()) throw OrdinalError("not a power of w: " + to_string());
  return terms_[0].exponent;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (is_zero()) throw OrdinalError("zero has no leading exponent");
  return terms_.front().exponent;
}

const Ordinal& Ordinal::last_exponent() const {
  if (is_zero()) throw OrdinalError("zero has no last exponent");
  return terms_.back().exponent;
}

Ordinal Ordinal::without_finite_part() const {
  Ordinal r = *this;
  if (finite_part() > 0) r.terms_.pop_back();
  return r;
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw OrdinalError("no predecessor: " + to_string());
  Ordinal r = *this;
  if (--r.terms_.back().coefficient == 0) r.terms_.pop_back();
  return r;
}

std::size_t Ordinal::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& t : terms_) {
    h ^= t.exponent.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(t.coefficient) + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (!(t.exponent == nat(1))) out += "^(" + t.exponent.to_string() + ")";
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.terms_[i].exponent <=> b.terms_[i].exponent;
    if (c != 0) return c;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient)
      return a.terms_[i].coefficient <=> b.terms_[i].coefficient;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal ord_sum(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.leading_exponent();
  std::vector<OrdTerm> out;
  std::uint64_t carry = 0;
  for (const auto& t : a.terms()) {
    auto c = t.exponent <=> lead;
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) carry = t.coefficient;
      break;
    }
  }
  bool first = true;
  for (const auto& t : b.terms()) {
    OrdTerm nt = t;
    if (first) nt.coefficient = checked_add(nt.coefficient, carry);
    first = false;
    out.push_back(nt);
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal hess_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<OrdTerm> out;
  std::size_t i = 0, j = 0;
  const auto& x = a.terms();
  const auto& y = b.terms();
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exponent > y[j].exponent)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].exponent > x[i].exponent) {
      out.push_back(y[j++]);
    } else {
      out.push_back(OrdTerm{x[i].exponent, checked_add(x[i].coefficient, y[j].coefficient)});
      ++i;
      ++j;
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal hess_prod(const Ordinal& a, const Ordinal& b) {
  Ordinal acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      acc = hess_sum(acc, Ordinal::omega_pow(hess_sum(s.exponent, t.exponent),
                                             checked_mul(s.coefficient, t.coefficient)));
  return acc;
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  Ordinal acc;
  const OrdTerm& lead = a.terms().front();
  for (const auto& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      std::vector<OrdTerm> ts = a.terms();
      ts.front().coefficient = checked_mul(lead.coefficient, t.coefficient);
      piece = Ordinal::from_terms(std::move(ts));
    } else {
      piece = Ordinal::omega_pow(ord_sum(lead.exponent, t.exponent), t.coefficient);
    }
    acc = ord_sum(acc, piece);
  }
  return acc;
}

bool precedes(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return false;
  if (a.is_zero()) return true;
  return a.leading_exponent() < b.leading_exponent();
}

bool preceq(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return a.leading_exponent() <= b.leading_exponent();
}

Dominance dominance(const Ordinal& a, const Ordinal& b) {
  if (precedes(a, b)) return Dominance::Below;
  if (precedes(b, a)) return Dominance::Above;
  return Dominance::Equivalent;
}

bool mll(const Ordinal& a, const Ordinal& b) {
  for (const auto& t : b.terms())
    if (!precedes(a, Ordinal::omega_pow(t.exponent))) return false;
  return true;
}

bool lleq(const Ordinal& a, const Ordinal& b) {
  for (const auto& t : b.terms())
    if (!preceq(a, Ordinal::omega_pow(t.exponent))) return false;
  return true;
}

std::pair<Ordinal, Ordinal> split_at(const Ordinal& b, const Ordinal& threshold) {
  if (!threshold.is_power_of_omega())
    throw OrdinalError("split threshold is not a power of w: " + threshold.to_string());
  const Ordinal& tau = threshold.log_omega();
  std::vector<OrdTerm> hi, lo;
  for (const auto& t : b.terms()) (t.exponent >= tau ? hi : lo).push_back(t);
  return {Ordinal::from_terms(std::move(hi)), Ordinal::from_terms(std::move(lo))};
}

Ordinal mu_minus(const Ordinal& mu) { return mu.is_successor() ? mu.predecessor() : mu; }

Ordinal alpha_over_omega(const Ordinal& alpha) {
  if (!alpha.is_power_of_omega())
    throw OrdinalError("not a power of w: " + alpha.to_string());
  return Ordinal::omega_pow(mu_minus(alpha.log_omega()));
}

std::optional<Ordinal> left_subtract(const Ordinal& gamma, const Ordinal& iota) {
  const auto& g = gamma.terms();
  const auto& t = iota.terms();
  std::size_t i = 0;
  while (i < g.size() && i < t.size() && g[i].exponent == t[i].exponent &&
         g[i].coefficient == t[i].coefficient)
    ++i;
  if (i == g.size()) return Ordinal::from_terms({t.begin() + static_cast<long>(i), t.end()});
  if (i == t.size()) return std::nullopt;
  auto c = g[i].exponent <=> t[i].exponent;
  if (c > 0) return std::nullopt;
  std::vector<OrdTerm> rest(t.begin() + static_cast<long>(i), t.end());
  if (c == 0) {
    if (g[i].coefficient > t[i].coefficient) return std::nullopt;
    rest.front().coefficient -= g[i].coefficient;
  }
  return Ordinal::from_terms(std::move(rest));
}

}  // namespace hsx
