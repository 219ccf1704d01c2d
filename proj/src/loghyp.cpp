#include "hsx/loghyp.hpp"

#include <algorithm>

namespace hsx {

namespace {

const Ordinal& one_ord() {
  static const Ordinal o = Ordinal::nat(1);
  return o;
}

}  // namespace

void LogMonomial::insert_power(const Ordinal& g, const Rational& e) {
  if (e == 0) return;
  auto it = powers_.find(g);
  if (it == powers_.end()) {
    powers_.emplace(g, e);
    return;
  }
  it->second += e;
  if (it->second == 0) powers_.erase(it);
}

void LogMonomial::insert_prefix(const Ordinal& p, long k) {
  if (k == 0) return;
  auto it = prefixes_.find(p);
  if (it == prefixes_.end()) {
    prefixes_.emplace(p, k);
    return;
  }
  it->second += k;
  if (it->second == 0) prefixes_.erase(it);
}

LogMonomial LogMonomial::ell(const Ordinal& gamma, const Rational& e) {
  LogMonomial m;
  m.insert_power(gamma, e);
  return m;
}

LogMonomial LogMonomial::inv_prefix(const Ordinal& gamma) {
  LogMonomial m;
  Ordinal lim = gamma.without_finite_part();
  std::uint64_t n = gamma.finite_part();
  if (lim.is_zero()) {
    for (std::uint64_t i = 0; i < n; ++i) m.insert_power(Ordinal::nat(i), Rational(-1));
    return m;
  }
  m.insert_prefix(lim, 1);
  Ordinal g = lim;
  for (std::uint64_t i = 0; i < n; ++i) {
    m.insert_power(g, Rational(-1));
    g = ord_sum(g, one_ord());
  }
  return m;
}

Rational LogMonomial::exponent(const Ordinal& gamma) const {
  Rational e(0);
  auto it = powers_.find(gamma);
  if (it != powers_.end()) e = it->second;
  for (const auto& [p, k] : prefixes_)
    if (gamma < p) e -= k;
  return e;
}

LogMonomial operator*(const LogMonomial& a, const LogMonomial& b) {
  LogMonomial r = a;
  for (const auto& [g, e] : b.powers_) r.insert_power(g, e);
  for (const auto& [p, k] : b.prefixes_) r.insert_prefix(p, k);
  return r;
}

LogMonomial LogMonomial::inverse() const { return pow(-1); }

LogMonomial LogMonomial::pow(long k) const {
  LogMonomial r;
  if (k == 0) return r;
  for (const auto& [g, e] : powers_) r.insert_power(g, e * k);
  for (const auto& [p, n] : prefixes_) r.insert_prefix(p, n * k);
  return r;
}

int LogMonomial::sign_vs_one() const {
  // The exponent is piecewise constant between the points below; past a
  // point c it equals the background contribution of the prefixes above c.
  std::vector<Ordinal> pts{Ordinal{}};
  for (const auto& [g, e] : powers_) pts.push_back(g);
  for (const auto& [p, k] : prefixes_) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational at = exponent(pts[i]);
    if (at != 0) return sgn(at);
    Rational bg(0);
    for (const auto& [p, k] : prefixes_)
      if (pts[i] < p) bg -= k;
    Ordinal next = ord_sum(pts[i], one_ord());
    bool gap = i + 1 == pts.size() || !(pts[i + 1] == next);
    if (gap && bg != 0) return sgn(bg);
  }
  return 0;
}

std::strong_ordering compare(const LogMonomial& a, const LogMonomial& b) {
  int s = (a * b.inverse()).sign_vs_one();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

LogSeries LogSeries::constant(const Rational& q) { return term(q, LogMonomial{}); }

LogSeries LogSeries::term(const Rational& c, LogMonomial m) {
  LogSeries s;
  if (c != 0) s.terms_.push_back(LogTerm{c, std::move(m)});
  return s;
}

LogSeries LogSeries::from_terms(std::vector<LogTerm> terms) {
  LogSeries acc;
  for (auto& t : terms) acc = acc + term(t.coeff, std::move(t.mono));
  return acc;
}

bool LogSeries::has_prefix() const {
  for (const auto& t : terms_)
    if (t.mono.has_prefix()) return true;
  return false;
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
  LogSeries r;
  std::size_t i = 0, j = 0;
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  while (i < x.size() && j < y.size()) {
    auto c = compare(x[i].mono, y[j].mono);
    if (c > 0) {
      r.terms_.push_back(x[i++]);
    } else if (c < 0) {
      r.terms_.push_back(y[j++]);
    } else {
      Rational s = x[i].coeff + y[j].coeff;
      if (s != 0) r.terms_.push_back(LogTerm{s, x[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) r.terms_.push_back(x[i]);
  for (; j < y.size(); ++j) r.terms_.push_back(y[j]);
  return r;
}

LogSeries LogSeries::scaled(const Rational& q) const {
  LogSeries r;
  if (q == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= q;
  return r;
}

LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + b.scaled(Rational(-1)); }

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  LogSeries acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc = acc + LogSeries::term(s.coeff * t.coeff, s.mono * t.mono);
  return acc;
}

LogMonomial log_derivative(const Ordinal& gamma) {
  return LogMonomial::inv_prefix(ord_sum(gamma, one_ord()));
}

LogSeries derive(const LogSeries& f) {
  LogSeries acc;
  for (const auto& t : f.terms()) {
    if (t.mono.has_prefix())
      throw LogError("derivative of an inverse-prefix factor is an infinite sum");
    for (const auto& [g, e] : t.mono.powers())
      acc = acc + LogSeries::term(t.coeff * e, log_derivative(g) * t.mono);
  }
  return acc;
}

LogMonomial compose_ell(const LogMonomial& m, const Ordinal& gamma) {
  LogMonomial r;
  for (const auto& [g, e] : m.powers()) r = r * LogMonomial::ell(ord_sum(gamma, g), e);
  // prod_{i<P} l_{gamma+i}^-1 = inv_prefix(gamma+P) / inv_prefix(gamma)
  for (const auto& [p, k] : m.prefixes()) {
    LogMonomial block = LogMonomial::inv_prefix(ord_sum(gamma, p)) *
                        LogMonomial::inv_prefix(gamma).inverse();
    r = r * block.pow(k);
  }
  return r;
}

LogSeries compose_ell(const LogSeries& g, const Ordinal& gamma) {
  LogSeries acc;
  for (const auto& t : g.terms()) acc = acc + LogSeries::term(t.coeff, compose_ell(t.mono, gamma));
  return acc;
}

namespace {

LogMonomial upshift_mono(const LogMonomial& m, const Ordinal& gamma) {
  LogMonomial pre;
  for (const auto& [q, k] : m.prefixes()) {
    if (!(gamma < q)) throw LogError("inverse prefix " + q.to_string() + " is not above " + gamma.to_string());
    auto p = left_subtract(gamma, q);
    if (!p || p->is_zero()) throw LogError("index " + q.to_string() + " has no predecessor under shift");
    pre = pre * LogMonomial::inv_prefix(*p).pow(k);
  }
  LogMonomial rest = m * compose_ell(pre, gamma).inverse();
  if (rest.has_prefix()) throw LogError("monomial is not in the image of the shift");
  LogMonomial out = pre;
  for (const auto& [g, e] : rest.powers()) {
    auto rho = left_subtract(gamma, g);
    if (!rho) throw LogError("index " + g.to_string() + " is not of the form " + gamma.to_string() + "+r");
    out = out * LogMonomial::ell(*rho, e);
  }
  return out;
}

}  // namespace

LogSeries upshift(const LogSeries& g, const Ordinal& gamma) {
  LogSeries acc;
  for (const auto& t : g.terms()) acc = acc + LogSeries::term(t.coeff, upshift_mono(t.mono, gamma));
  return acc;
}

}  // namespace hsx
