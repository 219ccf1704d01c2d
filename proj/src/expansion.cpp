#include "hsx/expansion.hpp"

#include <json.hpp>

#include "hsx/textio.hpp"

namespace hsx {

namespace {

const Ordinal& ord_one() {
  static const Ordinal o = Ordinal::nat(1);
  return o;
}

void fail(const std::string& cond, const std::string& detail) {
  throw ExpansionError(cond + ": " + detail);
}

// supp psi > l for the dominant monomial l of L_{beta+1} of the tail.
void check_psi_above(const NumberExpr& psi, const Monomial& atom) {
  if (psi.is_zero()) return;
  if (!is_purely_large(psi)) fail("psi purely large", print_number(psi));
  NumberExpr lg = mono_log(atom);
  if (lg.is_zero()) return;
  const Monomial& bound = lg.leading().mono;
  for (const auto& t : psi.terms()) {
    Cmp c = compare_monomials(t.mono, bound);
    if (c == Cmp::Undecided) fail("supp psi above L_{beta+1} tail", "undecided against " + print_monomial(bound));
    if (c != Cmp::Greater)
      fail("supp psi above L_{beta+1} tail", print_monomial(t.mono) + " is not above " + print_monomial(bound));
  }
}

}  // namespace

const char* to_string(ExpansionType t) {
  switch (t) {
    case ExpansionType::Unit: return "unit";
    case ExpansionType::I: return "I";
    case ExpansionType::II: return "II";
    case ExpansionType::Nested: return "nested";
  }
  return "?";
}

ExpansionType ExpansionTuple::type() const {
  if (!nested.is_one()) return ExpansionType::Nested;
  if (iota == 0) return ExpansionType::Unit;
  return alpha.is_zero() ? ExpansionType::II : ExpansionType::I;
}

bool operator==(const ExpansionTuple& a, const ExpansionTuple& b) {
  return a.psi == b.psi && a.iota == b.iota && a.alpha == b.alpha && a.beta == b.beta && a.u == b.u &&
         a.nested == b.nested;
}

ExpansionTuple expand(const Monomial& m) {
  ExpansionTuple t;
  if (m.is_one()) return t;
  if (m.is_nested()) {
    t.nested = m;
    return t;
  }
  t.psi = m.psi();
  t.iota = m.iota();
  t.beta = m.beta();
  if (m.kind() == TailKind::Hyper) {
    t.alpha = m.alpha();
    t.u = m.u();
  } else {
    t.u = NumberExpr::omega();
  }
  return t;
}

Monomial assemble(const ExpansionTuple& t) {
  switch (t.type()) {
    case ExpansionType::Nested: return t.nested;
    case ExpansionType::Unit:
      if (!t.psi.is_zero() || !t.alpha.is_zero() || !t.beta.is_zero() || !t.u.is_zero())
        fail("iota in {-1,1}", "iota = 0 outside the unit tuple");
      return Monomial::one();
    default: break;
  }
  if (t.iota != 1 && t.iota != -1) fail("iota in {-1,1}", std::to_string(t.iota));
  Monomial built;
  if (t.type() == ExpansionType::II) {
    if (!(t.u == NumberExpr::omega())) fail("type II has u = w", print_number(t.u));
    built = Monomial::raw_omega(t.psi, t.iota, t.beta);
    check_psi_above(t.psi, Monomial::raw_omega(NumberExpr{}, 1, t.beta));
  } else {
    if (!t.alpha.is_power_of_omega()) fail("alpha a power of w", t.alpha.to_string());
    if (!(ord_mul(t.beta, Ordinal::omega()) < t.alpha))
      fail("beta*w < alpha", t.beta.to_string() + "*w >= " + t.alpha.to_string());
    if (!is_positive_infinite(t.u)) fail("u positive infinite", print_number(t.u));
    Truth tr = is_truncated(t.u, t.alpha);
    if (tr != Truth::Yes)
      fail("u alpha-truncated", std::string(to_string(tr)) + " for " + print_number(t.u));
    if (t.alpha == ord_one() && !t.psi.is_zero()) fail("alpha = 1 forces psi = 0", print_number(t.psi));
    Monomial atom = Monomial::raw_hyper(NumberExpr{}, 1, t.beta, t.alpha, t.u);
    if (t.alpha != ord_one()) check_psi_above(t.psi, atom);
    built = Monomial::raw_hyper(t.psi, t.iota, t.beta, t.alpha, t.u);
  }
  Monomial norm;
  try {
    norm = normalize(built);
  } catch (const StuckError& e) {
    fail("normal form", e.what());
  } catch (const NormalizationUndecided& e) {
    fail("normal form", e.what());
  }
  if (!(norm == built)) fail("normal form", print_monomial(built) + " normalizes to " + print_monomial(norm));
  return built;
}

std::string expansion_json(const ExpansionTuple& t) {
  nlohmann::ordered_json j;
  if (t.type() == ExpansionType::Nested) {
    j["type"] = "nested";
    j["atom"] = print_monomial(t.nested);
    return j.dump();
  }
  j["psi"] = print_number(t.psi);
  j["iota"] = t.iota;
  j["type"] = to_string(t.type());
  j["alpha"] = t.alpha.to_string();
  j["beta"] = t.beta.to_string();
  j["u"] = print_number(t.u);
  return j.dump();
}

Monomial dominant_atomic(const Monomial& m, const Ordinal& strength) {
  if (!strength.is_power_of_omega()) throw ExpansionError("strength is not a power of w");
  if (!m.is_atom() || m.kind() != TailKind::Hyper)
    throw ExpansionError("dominant_atomic expects an atom L_beta E_alpha^u, got " + print_monomial(m));
  if (m.alpha() < strength)
    throw ExpansionError("alpha " + m.alpha().to_string() + " is below strength " + strength.to_string());
  Ordinal mu = strength.log_omega();
  if (mu.is_zero()) return m;
  auto parts = split_at(m.beta(), Ordinal::omega_pow(mu_minus(mu)));
  if (parts.second.is_zero()) return m;
  return Monomial::raw_hyper(NumberExpr{}, 1, parts.first, m.alpha(), m.u());
}

std::optional<TailAtomic> tail_atomic(const NumberExpr& phi) {
  if (phi.is_zero()) return std::nullopt;
  const Term& last = phi.last();
  if (last.coeff != 1 && last.coeff != -1) return std::nullopt;
  if (!is_log_atomic(last.mono)) return std::nullopt;
  std::vector<Term> head(phi.terms().begin(), phi.terms().end() - 1);
  return TailAtomic{NumberExpr::from_sorted(std::move(head)), last.coeff > 0 ? 1 : -1, last.mono};
}

Sharp sharp(const NumberExpr& f, const Ordinal& beta) {
  const auto& ts = f.terms();
  for (std::size_t n = ts.size(); n > 0; --n) {
    NumberExpr g = NumberExpr::from_sorted(std::vector<Term>(ts.begin(), ts.begin() + n));
    Truth t = is_truncated(g, beta);
    if (t == Truth::Yes) return Sharp{Truth::Yes, g};
    if (t == Truth::Unknown) return Sharp{Truth::Unknown, NumberExpr{}};
  }
  return Sharp{Truth::Yes, NumberExpr{}};
}

}  // namespace hsx
