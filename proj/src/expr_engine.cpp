#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <unordered_map>

#include "hsx/expr.hpp"
#include "hsx/textio.hpp"

namespace hsx {

namespace {

std::atomic<std::size_t> g_budget{0};
std::atomic<std::size_t> g_nested_depth{6};

thread_local std::size_t t_cross_depth = 0;
thread_local std::size_t t_engine_depth = 0;
thread_local std::size_t t_nested_depth = 0;

struct DepthGuard {
  std::size_t& depth;
  explicit DepthGuard(std::size_t& d) : depth(d) { ++depth; }
  ~DepthGuard() { --depth; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
};

struct EngineGuard {
  DepthGuard g{t_engine_depth};
  EngineGuard() {
    if (t_engine_depth > 16 * rewrite_budget()) throw StuckError("rewrite budget exhausted");
  }
};

const Ordinal& ord_one() {
  static const Ordinal o = Ordinal::nat(1);
  return o;
}

const Ordinal& ord_omega() {
  static const Ordinal o = Ordinal::omega();
  return o;
}

struct MonoHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

thread_local std::unordered_map<Monomial, NumberExpr, MonoHash> t_log_cache;

bool is_e1(const Monomial& m) {
  return !m.is_one() && m.kind() == TailKind::Hyper && m.alpha() == ord_one();
}

Monomial with_beta(const Monomial& a, Ordinal beta) {
  if (a.kind() == TailKind::Omega) return Monomial::raw_omega(NumberExpr{}, 1, std::move(beta));
  return Monomial::raw_hyper(NumberExpr{}, 1, std::move(beta), a.alpha(), a.u());
}

Monomial with_psi_iota(const Monomial& atom, NumberExpr psi, int iota) {
  if (atom.kind() == TailKind::Omega) return Monomial::raw_omega(std::move(psi), iota, atom.beta());
  return Monomial::raw_hyper(std::move(psi), iota, atom.beta(), atom.alpha(), atom.u());
}

Ordinal strength_of(const Monomial& a) {
  return a.kind() == TailKind::Hyper ? a.alpha() : Ordinal{};
}

bool top_nested(const NumberExpr& x) {
  for (const auto& t : x.terms())
    if (t.mono.is_nested()) return true;
  return false;
}

NumberExpr unfold_top(const NumberExpr& x) {
  if (!top_nested(x)) return x;
  if (x.size() != 1) throw StuckError("nested atom inside a sum");
  return scale(unfold_once(x.leading().mono), x.leading().coeff);
}

NumberExpr concat(const NumberExpr& a, const NumberExpr& b) {
  std::vector<Term> ts = a.terms();
  ts.insert(ts.end(), b.terms().begin(), b.terms().end());
  return NumberExpr::from_sorted(std::move(ts));
}

// Unfolded nested numbers have the shape phi ++ c N' with the nested part
// confined to the last term; such arguments are kept as given once the
// terms are decided infinite.
bool nested_tail_ok(const NumberExpr& u) {
  if (u.is_zero() || !u.terms().back().mono.has_nested()) return false;
  for (std::size_t i = 0; i + 1 < u.size(); ++i)
    if (u.terms()[i].mono.has_nested()) return false;
  for (const auto& t : u.terms())
    if (compare_to_one(t.mono) != Cmp::Greater) return false;
  return true;
}

Monomial mk_e(const Ordinal& alpha, const NumberExpr& u);
NumberExpr l_step(const Ordinal& eta, const NumberExpr& a);
Cmp cmp_mono_impl(const Monomial& m, const Monomial& n);

Cmp cmp_atoms(const Monomial& a, const Monomial& b) {
  DepthGuard g(t_cross_depth);
  if (t_cross_depth > rewrite_budget()) return Cmp::Undecided;
  bool same_base = a.kind() == b.kind() &&
                   (a.kind() == TailKind::Omega || (a.alpha() == b.alpha() && a.u() == b.u()));
  if (same_base) {
    auto c = a.beta() <=> b.beta();
    if (c < 0) return Cmp::Greater;
    if (c > 0) return Cmp::Less;
    return Cmp::Equal;
  }
  if (a.kind() == TailKind::Hyper && b.kind() == TailKind::Hyper && a.alpha() == b.alpha()) {
    Cmp c = compare_numbers(a.u(), b.u());
    if (c == Cmp::Less || c == Cmp::Greater) return c;
    return Cmp::Undecided;
  }
  Ordinal top = std::max(strength_of(a), strength_of(b));
  if (!top.is_zero()) {
    try {
      NumberExpr fa = hyperlog(top, NumberExpr::of(a));
      NumberExpr fb = hyperlog(top, NumberExpr::of(b));
      Cmp c = compare_numbers(fa, fb);
      if (c == Cmp::Less || c == Cmp::Greater) return c;
    } catch (const StuckError&) {
    } catch (const NormalizationUndecided&) {
    }
  }
  for (int side = 0; side < 2; ++side) {
    const Monomial& x = side == 0 ? a : b;
    const Monomial& y = side == 0 ? b : a;
    if (x.beta().is_zero()) continue;
    try {
      Monomial base = with_beta(x, Ordinal{});
      Monomial ey = hyperexp(x.beta(), NumberExpr::of(y));
      Cmp c = cmp_mono_impl(base, ey);
      if (c == Cmp::Less || c == Cmp::Greater) return side == 0 ? c : reverse(c);
    } catch (const StuckError&) {
    } catch (const NormalizationUndecided&) {
    }
  }
  return Cmp::Undecided;
}

Cmp cmp_mono_impl(const Monomial& m, const Monomial& n) {
  if (m == n) return Cmp::Equal;
  if (m.is_one()) return reverse(compare_to_one(n));
  if (n.is_one()) return compare_to_one(m);
  if (m.is_nested() || n.is_nested()) return Cmp::Undecided;
  Cmp sm = compare_to_one(m), sn = compare_to_one(n);
  if (sm == Cmp::Undecided || sn == Cmp::Undecided) return Cmp::Undecided;
  if (sm != sn) return sm;
  Cmp c;
  if (m.is_atom() && n.is_atom() && !is_e1(m) && !is_e1(n)) {
    c = cmp_atoms(m, n);
  } else {
    c = compare_numbers(mono_log(m), mono_log(n));
  }
  return c == Cmp::Equal ? Cmp::Undecided : c;
}

Cmp nested_compare(const NumberExpr& a, const NumberExpr& b) {
  if (a.size() == 1 && b.size() == 1 && a.leading().mono.is_nested() &&
      b.leading().mono.is_nested()) {
    const Monomial& x = a.leading().mono;
    const Monomial& y = b.leading().mono;
    if (x.seq() == y.seq() && x.level() == y.level() && a.leading().coeff == b.leading().coeff &&
        a.leading().coeff > 0)
      return compare_numbers(x.rank(), y.rank());
  }
  if (t_nested_depth >= nested_depth()) return Cmp::Undecided;
  DepthGuard g(t_nested_depth);
  return compare_numbers(unfold_top(a), unfold_top(b));
}

NumberExpr log_tail(const Monomial& m) {
  if (m.kind() == TailKind::Omega)
    return NumberExpr::of(Monomial::raw_omega(NumberExpr{}, 1, ord_sum(m.beta(), ord_one())));
  if (m.alpha() == ord_one()) return m.u();
  if (!m.beta().is_zero())
    return NumberExpr::of(
        Monomial::raw_hyper(NumberExpr{}, 1, ord_sum(m.beta(), ord_one()), m.alpha(), m.u()));
  if (m.alpha() == ord_omega())
    return NumberExpr::of(mk_e(ord_omega(), sub(m.u(), NumberExpr::constant(1))));
  return NumberExpr::of(Monomial::raw_hyper(NumberExpr{}, 1, ord_one(), m.alpha(), m.u()));
}

// The log-atomic monomial whose logarithm is the log-atomic a.
Monomial unlog(const Monomial& a) {
  const Ordinal& beta = a.beta();
  if (beta.finite_part() > 0) return with_beta(a, beta.predecessor());
  NumberExpr w = add(hyperlog(ord_omega(), NumberExpr::of(a)), NumberExpr::constant(1));
  return mk_e(ord_omega(), w);
}

// L_{w^eta} of a positive infinite number.
NumberExpr l_step(const Ordinal& eta, const NumberExpr& a) {
  EngineGuard eg;
  if (top_nested(a)) throw StuckError("hyperlogarithm of a nested atom");
  if (!is_positive_infinite(a))
    throw StuckError("hyperlogarithm argument is not positive infinite: " + print_number(a));
  if (!a.is_monomial())
    throw StuckError("no exact hyperlogarithm rule for " + print_number(a));
  const Monomial& m = a.leading().mono;
  Ordinal weta = Ordinal::omega_pow(eta);
  if (!m.is_atom()) {
    if (eta.is_zero()) return mono_log(m);
    if (eta == ord_one()) return add(l_step(eta, mono_log(m)), NumberExpr::constant(1));
    throw StuckError("no exact hyperlogarithm rule for " + print_number(a));
  }
  const Ordinal& beta = m.beta();
  if (lleq(weta, beta)) {
    if (m.kind() == TailKind::Omega || !beta.is_zero())
      return NumberExpr::of(with_beta(m, ord_sum(beta, weta)));
    const Ordinal mu = m.alpha().log_omega();
    if (mu == eta) return m.u();
    Ordinal eta1 = ord_sum(eta, ord_one());
    if (mu == eta1) return NumberExpr::of(mk_e(m.alpha(), sub(m.u(), NumberExpr::constant(1))));
    if (mu > eta1) return NumberExpr::of(Monomial::raw_hyper(NumberExpr{}, 1, weta, m.alpha(), m.u()));
    if (eta == ord_sum(mu, ord_one()))
      return add(l_step(eta, m.u()), NumberExpr::constant(1));
    throw StuckError("no exact hyperlogarithm rule for " + print_number(a));
  }
  const OrdTerm& last = beta.terms().back();
  if (eta == ord_sum(last.exponent, ord_one())) {
    std::vector<OrdTerm> head(beta.terms().begin(), beta.terms().end() - 1);
    Monomial base = with_beta(m, Ordinal::from_terms(std::move(head)));
    NumberExpr r = l_step(eta, NumberExpr::of(base));
    return sub(r, NumberExpr::constant(Rational(static_cast<unsigned long>(last.coefficient))));
  }
  throw StuckError("no exact hyperlogarithm rule for " + print_number(a));
}

Monomial mk_e(const Ordinal& alpha, const NumberExpr& u) {
  EngineGuard eg;
  const Ordinal mu = alpha.log_omega();
  if (u.has_nested()) {
    if (top_nested(u) && u.is_monomial()) return Monomial::raw_hyper(NumberExpr{}, 1, Ordinal{}, alpha, u);
    if (mu.is_zero()) return exp_purely_large(u);
    if (nested_tail_ok(u) && sign(u) > 0) return Monomial::raw_hyper(NumberExpr{}, 1, Ordinal{}, alpha, u);
    throw StuckError("hyperexponential of a compound nested expression");
  }
  if (!is_positive_infinite(u))
    throw StuckError("hyperexponential argument is not positive infinite: " + print_number(u));
  if (mu.is_zero()) return exp_purely_large(u);
  if (u.is_monomial()) {
    const Monomial& x = u.leading().mono;
    if (x.is_atom() && !is_e1(x) && !x.beta().is_zero() && x.beta().last_exponent() == mu) {
      std::vector<OrdTerm> ts = x.beta().terms();
      if (--ts.back().coefficient == 0) ts.pop_back();
      return with_beta(x, Ordinal::from_terms(std::move(ts)));
    }
  }
  const Ordinal alpha_w = Ordinal::omega_pow(ord_sum(mu, ord_one()));
  if (mu.is_successor() && u.size() == 2 && u.terms()[0].coeff == 1 && u.terms()[1].mono.is_one() &&
      u.terms()[1].coeff < 0 && is_integer(u.terms()[1].coeff)) {
    const Monomial& v = u.terms()[0].mono;
    if (is_atomic(v, alpha_w)) {
      Rational n = -u.terms()[1].coeff;
      Monomial inner = mk_e(alpha, NumberExpr::of(v));
      NumberExpr r = hyperlog(Ordinal::omega_pow(mu.predecessor(), n.get_num().get_ui()),
                              NumberExpr::of(inner));
      if (r.is_monomial()) return r.leading().mono;
      throw StuckError("hyperexponential did not reduce to a monomial");
    }
  }
  if (u.is_monomial() && is_atomic(u.leading().mono, alpha_w))
    return mk_e(alpha_w, add(hyperlog(alpha_w, u), NumberExpr::constant(1)));
  Truth t = is_truncated(u, alpha);
  if (t == Truth::Yes) return Monomial::raw_hyper(NumberExpr{}, 1, Ordinal{}, alpha, u);
  if (t == Truth::No)
    throw StuckError("argument of E[" + alpha.to_string() + "] is not truncated: " + print_number(u));
  throw StuckError("truncatedness of the argument of E[" + alpha.to_string() +
                   "] is undecided: " + print_number(u));
}

}  // namespace

std::size_t rewrite_budget() {
  std::size_t b = g_budget.load();
  if (b == 0) {
    b = 64;
    if (const char* v = std::getenv("HSX_REWRITE_BUDGET")) {
      char* end = nullptr;
      unsigned long n = std::strtoul(v, &end, 10);
      if (end != v && *end == '\0' && n > 0) b = n;
    }
    g_budget.store(b);
  }
  return b;
}

void set_rewrite_budget(std::size_t n) { g_budget.store(n == 0 ? 64 : n); }
std::size_t nested_depth() { return g_nested_depth.load(); }
void set_nested_depth(std::size_t n) { g_nested_depth.store(n); }

Cmp compare_to_one(const Monomial& m) {
  if (m.is_one()) return Cmp::Equal;
  if (m.is_nested()) {
    try {
      if (t_nested_depth >= nested_depth()) return Cmp::Undecided;
      DepthGuard g(t_nested_depth);
      NumberExpr x = unfold_once(m);
      if (x.is_zero()) return Cmp::Undecided;
      return compare_to_one(x.leading().mono);
    } catch (const std::exception&) {
      return Cmp::Undecided;
    }
  }
  if (!m.psi().is_zero()) return sign(m.psi()) > 0 ? Cmp::Greater : Cmp::Less;
  return m.iota() > 0 ? Cmp::Greater : Cmp::Less;
}

Cmp compare_monomials(const Monomial& m, const Monomial& n) {
  try {
    return cmp_mono_impl(m, n);
  } catch (const StuckError&) {
    return Cmp::Undecided;
  } catch (const NormalizationUndecided&) {
    return Cmp::Undecided;
  }
}

Cmp compare_numbers(const NumberExpr& a, const NumberExpr& b) {
  try {
    if (a == b) return Cmp::Equal;
    if (top_nested(a) || top_nested(b)) return nested_compare(a, b);
    int s = sign(sub(a, b));
    return s < 0 ? Cmp::Less : s > 0 ? Cmp::Greater : Cmp::Equal;
  } catch (const StuckError&) {
    return Cmp::Undecided;
  } catch (const NormalizationUndecided&) {
    return Cmp::Undecided;
  }
}

int sign(const NumberExpr& a) {
  if (a.is_zero()) return 0;
  const Term& t = a.leading();
  int s = sgn(t.coeff);
  if (t.mono.is_nested()) {
    if (t_nested_depth >= nested_depth()) throw StuckError("nested unfolding depth exhausted");
    DepthGuard g(t_nested_depth);
    return s * sign(unfold_once(t.mono));
  }
  return s;
}

bool is_purely_large(const NumberExpr& a) {
  for (const auto& t : a.terms())
    if (compare_to_one(t.mono) != Cmp::Greater) return false;
  return true;
}

bool is_positive_infinite(const NumberExpr& a) {
  if (a.is_zero()) return false;
  try {
    if (sign(a) <= 0) return false;
  } catch (const StuckError&) {
    return false;
  }
  return compare_to_one(a.leading().mono) == Cmp::Greater;
}

NumberExpr add(const NumberExpr& a, const NumberExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    Cmp c = compare_monomials(x[i].mono, y[j].mono);
    switch (c) {
      case Cmp::Greater: out.push_back(x[i++]); break;
      case Cmp::Less: out.push_back(y[j++]); break;
      case Cmp::Equal: {
        Rational s = x[i].coeff + y[j].coeff;
        if (s != 0) out.push_back(Term{s, x[i].mono});
        ++i;
        ++j;
        break;
      }
      default: throw NormalizationUndecided(x[i].mono, y[j].mono);
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back(y[j]);
  return NumberExpr::from_sorted(std::move(out));
}

NumberExpr scale(const NumberExpr& a, const Rational& q) {
  if (q == 0) return NumberExpr{};
  if (q == 1) return a;
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff *= q;
  return NumberExpr::from_sorted(std::move(out));
}

NumberExpr neg(const NumberExpr& a) { return scale(a, Rational(-1)); }

NumberExpr sub(const NumberExpr& a, const NumberExpr& b) { return add(a, neg(b)); }

NumberExpr sort_terms(std::vector<Term> terms) {
  std::vector<NumberExpr> parts;
  for (auto& t : terms)
    if (t.coeff != 0) parts.push_back(NumberExpr::term(t.coeff, t.mono));
  if (parts.empty()) return NumberExpr{};
  while (parts.size() > 1) {
    std::vector<NumberExpr> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(add(parts[i], parts[i + 1]));
    if (parts.size() % 2 == 1) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

NumberExpr mul(const NumberExpr& a, const NumberExpr& b) {
  if (a.is_zero() || b.is_zero()) return NumberExpr{};
  if (a.size() == 1 && a.leading().mono.is_one()) return scale(b, a.leading().coeff);
  if (b.size() == 1 && b.leading().mono.is_one()) return scale(a, b.leading().coeff);
  std::vector<Term> out;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out.push_back(Term{s.coeff * t.coeff, mono_mul(s.mono, t.mono)});
  return sort_terms(std::move(out));
}

Monomial mono_mul(const Monomial& m, const Monomial& n) {
  if (m.is_one()) return n;
  if (n.is_one()) return m;
  if (m.is_nested() || n.is_nested()) throw StuckError("product with a nested atom");
  return exp_purely_large(add(mono_log(m), mono_log(n)));
}

Monomial mono_inv(const Monomial& m) {
  if (m.is_one()) return m;
  if (m.is_nested()) throw StuckError("inverse of a nested atom");
  if (m.kind() == TailKind::Omega) return Monomial::raw_omega(neg(m.psi()), -m.iota(), m.beta());
  return Monomial::raw_hyper(neg(m.psi()), -m.iota(), m.beta(), m.alpha(), m.u());
}

Monomial mono_pow(const Monomial& m, int iota) {
  if (iota == 1) return m;
  if (iota == -1) return mono_inv(m);
  if (iota == 0) return Monomial::one();
  throw StuckError("monomial powers are limited to +1 and -1");
}

NumberExpr number_pow(const NumberExpr& a, int iota) {
  if (iota == 1) return a;
  if (iota != -1) throw StuckError("powers are limited to +1 and -1");
  if (a.size() != 1) throw StuckError("inverse of " + print_number(a) + " is not a finite series");
  return NumberExpr::term(1 / a.leading().coeff, mono_inv(a.leading().mono));
}

NumberExpr mono_log(const Monomial& m) {
  if (m.is_one()) return NumberExpr{};
  if (m.is_nested()) throw StuckError("logarithm of a nested atom");
  auto it = t_log_cache.find(m);
  if (it != t_log_cache.end()) return it->second;
  NumberExpr tl = log_tail(m);
  if (m.iota() == -1) tl = neg(tl);
  NumberExpr r = concat(m.psi(), tl);
  if (t_log_cache.size() > 200000) t_log_cache.clear();
  t_log_cache.emplace(m, r);
  return r;
}

Monomial exp_purely_large(const NumberExpr& phi) {
  EngineGuard eg;
  if (phi.is_zero()) return Monomial::one();
  if (top_nested(phi)) {
    if (phi.is_monomial()) return Monomial::raw_hyper(NumberExpr{}, 1, Ordinal{}, ord_one(), phi);
    throw StuckError("exponential of a compound nested expression");
  }
  if (phi.has_nested()) {
    if (!nested_tail_ok(phi)) throw StuckError("exponential of a compound nested expression");
    int s = sign(phi);
    return Monomial::raw_hyper(NumberExpr{}, s, Ordinal{}, ord_one(), scale(phi, Rational(s)));
  }
  for (const auto& t : phi.terms()) {
    Cmp c = compare_to_one(t.mono);
    if (c != Cmp::Greater)
      throw StuckError("exponential argument is not purely large: " + print_number(phi));
  }
  const Term& last = phi.last();
  if (abs(last.coeff) == 1 && is_log_atomic(last.mono)) {
    std::vector<Term> rest(phi.terms().begin(), phi.terms().end() - 1);
    Monomial b = unlog(last.mono);
    return with_psi_iota(b, NumberExpr::from_sorted(std::move(rest)), sgn(last.coeff));
  }
  int s = sign(phi);
  return Monomial::raw_hyper(NumberExpr{}, s, Ordinal{}, ord_one(), scale(phi, Rational(s)));
}

NumberExpr number_exp(const NumberExpr& a) { return NumberExpr::of(exp_purely_large(a)); }

NumberExpr number_log(const NumberExpr& a) {
  if (!a.is_monomial())
    throw StuckError("logarithm of " + print_number(a) + " is not exact");
  return mono_log(a.leading().mono);
}

NumberExpr hyperlog(const Ordinal& gamma, const NumberExpr& a) {
  NumberExpr cur = a;
  for (const auto& t : gamma.terms())
    for (std::uint64_t i = 0; i < t.coefficient; ++i) cur = l_step(t.exponent, cur);
  if (gamma.is_zero() && !is_positive_infinite(a) && !a.has_nested())
    throw StuckError("hyperlogarithm argument is not positive infinite: " + print_number(a));
  return cur;
}

Monomial hyperexp(const Ordinal& gamma, const NumberExpr& a) {
  if (gamma.is_zero()) {
    if (a.is_monomial()) return a.leading().mono;
    throw StuckError("E[0] of a non-monomial");
  }
  NumberExpr cur = a;
  Monomial res;
  const auto& ts = gamma.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    Ordinal w = Ordinal::omega_pow(it->exponent);
    for (std::uint64_t i = 0; i < it->coefficient; ++i) {
      res = mk_e(w, cur);
      cur = NumberExpr::of(res);
    }
  }
  return res;
}

Exact<NumberExpr> rewrite_L(const Ordinal& gamma, const NumberExpr& a) {
  Exact<NumberExpr> r;
  try {
    r.value = hyperlog(gamma, a);
  } catch (const StuckError& e) {
    r.stuck = e.what();
  } catch (const NormalizationUndecided& e) {
    r.stuck = e.what();
  }
  return r;
}

Exact<Monomial> apply_E(const Ordinal& alpha, const NumberExpr& a) {
  Exact<Monomial> r;
  if (!alpha.is_power_of_omega()) {
    r.stuck = "strength is not a power of w: " + alpha.to_string();
    return r;
  }
  try {
    r.value = mk_e(alpha, a);
  } catch (const StuckError& e) {
    r.stuck = e.what();
  } catch (const NormalizationUndecided& e) {
    r.stuck = e.what();
  }
  return r;
}

bool is_atomic(const Monomial& m, const Ordinal& strength) {
  if (m.is_one() || m.is_nested()) return false;
  const Ordinal nu = strength.log_omega();
  if (nu.is_zero()) return compare_to_one(m) == Cmp::Greater;
  if (!m.is_atom()) return false;
  auto parts = split_at(m.beta(), Ordinal::omega_pow(mu_minus(nu)));
  if (!parts.second.is_zero()) return false;
  if (m.kind() == TailKind::Omega) return true;
  return m.alpha() >= strength;
}

bool is_log_atomic(const Monomial& m) { return is_atomic(m, ord_omega()); }

Truth is_truncated(const NumberExpr& f, const Ordinal& beta) {
  if (!beta.is_power_of_omega()) throw OrdinalError("truncation strength is not a power of w");
  if (!is_positive_infinite(f)) return Truth::No;
  if (beta == ord_one()) return is_purely_large(f) ? Truth::Yes : Truth::No;
  Truth result = Truth::Yes;
  for (const auto& t : f.terms()) {
    Cmp c1 = compare_to_one(t.mono);
    if (c1 == Cmp::Undecided) {
      result = Truth::Unknown;
      continue;
    }
    if (c1 != Cmp::Less) continue;
    try {
      NumberExpr bound = hyperlog(beta, NumberExpr::of(mono_inv(t.mono)));
      Cmp c = compare_numbers(f, bound);
      if (c == Cmp::Greater || c == Cmp::Equal) return Truth::No;
      if (c == Cmp::Undecided) result = Truth::Unknown;
    } catch (const StuckError&) {
      result = Truth::Unknown;
    } catch (const NormalizationUndecided&) {
      result = Truth::Unknown;
    }
  }
  return result;
}

Monomial normalize(const Monomial& m) {
  if (m.is_one()) return m;
  if (m.is_nested()) return Monomial::raw_nested(m.seq(), m.level(), normalize(m.rank()));
  NumberExpr e = number_exp(normalize(m.psi()));
  NumberExpr t;
  if (m.kind() == TailKind::Omega) {
    t = hyperlog(m.beta(), NumberExpr::omega());
  } else {
    t = hyperlog(m.beta(), NumberExpr::of(hyperexp(m.alpha(), normalize(m.u()))));
  }
  NumberExpr r = mul(e, number_pow(t, m.iota()));
  if (!r.is_monomial()) throw StuckError("monomial did not normalize to a monomial");
  return r.leading().mono;
}

NumberExpr normalize(const NumberExpr& e) {
  std::vector<Term> ts;
  for (const auto& t : e.terms()) ts.push_back(Term{t.coeff, normalize(t.mono)});
  return sort_terms(std::move(ts));
}

NumberExpr compose_L(const NumberExpr& e, const Ordinal& s) {
  if (s.is_zero()) return e;
  std::vector<Term> out;
  NumberExpr acc;
  for (const auto& t : e.terms()) {
    const Monomial& m = t.mono;
    if (m.is_one()) {
      acc = add(acc, NumberExpr::constant(t.coeff));
      continue;
    }
    if (m.is_nested()) throw StuckError("composition with a nested atom");
    NumberExpr p = number_exp(compose_L(m.psi(), s));
    NumberExpr tail;
    if (m.kind() == TailKind::Omega) {
      tail = hyperlog(m.beta(), NumberExpr::of(Monomial::raw_omega(NumberExpr{}, 1, s)));
    } else {
      tail = hyperlog(m.beta(), NumberExpr::of(hyperexp(m.alpha(), compose_L(m.u(), s))));
    }
    acc = add(acc, scale(mul(p, number_pow(tail, m.iota())), t.coeff));
  }
  return acc;
}

}  // namespace hsx
