#include "hsx/series.hpp"

#include "hsx/textio.hpp"

namespace hsx {

namespace {

// f / (c d) - 1 for the dominant term c d of f.
NumberExpr relative_tail(const NumberExpr& f) {
  const Term& lead = f.leading();
  Monomial inv = mono_inv(lead.mono);
  std::vector<Term> ts;
  for (std::size_t i = 1; i < f.size(); ++i) {
    const Term& t = f.terms()[i];
    ts.push_back(Term{t.coeff / lead.coeff, mono_mul(t.mono, inv)});
  }
  return sort_terms(std::move(ts));
}

}  // namespace

std::pair<Rational, Monomial> dominant(const NumberExpr& f) {
  if (f.is_zero()) throw SeriesError("dominant term of 0");
  return {f.leading().coeff, f.leading().mono};
}

NumberExpr truncate_above(const NumberExpr& f, const Monomial& m) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Cmp c = compare_monomials(t.mono, m);
    if (c == Cmp::Undecided) throw NormalizationUndecided(t.mono, m);
    if (c != Cmp::Greater) break;
    out.push_back(t);
  }
  return NumberExpr::from_sorted(std::move(out));
}

bool is_truncation(const NumberExpr& g, const NumberExpr& f) {
  if (g.size() > f.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.terms()[i].coeff != f.terms()[i].coeff) return false;
    if (!(g.terms()[i].mono == f.terms()[i].mono)) return false;
  }
  return true;
}

SeriesSplit split3(const NumberExpr& f) {
  SeriesSplit s;
  std::vector<Term> large, small;
  for (const auto& t : f.terms()) {
    if (t.mono.is_one()) {
      s.real_part = t.coeff;
      continue;
    }
    Cmp c = compare_to_one(t.mono);
    if (c == Cmp::Undecided) throw NormalizationUndecided(t.mono, Monomial::one());
    (c == Cmp::Greater ? large : small).push_back(t);
  }
  s.purely_large = NumberExpr::from_sorted(std::move(large));
  s.infinitesimal = NumberExpr::from_sorted(std::move(small));
  return s;
}

Cmp compare_series(const NumberExpr& f, const NumberExpr& g) { return compare_numbers(f, g); }

Approx log_partial(const NumberExpr& f, std::size_t order) {
  if (f.is_zero() || sign(f) <= 0) throw SeriesError("logarithm of a non-positive number");
  if (f.leading().coeff != 1)
    throw SeriesError("logarithm requires leading coefficient 1, got " + f.leading().coeff.get_str());
  Approx r;
  r.value = mono_log(f.leading().mono);
  NumberExpr eps = relative_tail(f);
  if (eps.is_zero()) return r;
  r.approximate = true;
  NumberExpr power = eps;
  for (std::size_t k = 0; k < order; ++k) {
    Rational c(k % 2 == 0 ? 1 : -1, static_cast<unsigned long>(k + 1));
    r.value = add(r.value, scale(power, c));
    power = mul(power, eps);
  }
  return r;
}

NumberExpr exp_partial(const NumberExpr& f) {
  if (f.is_zero()) return NumberExpr::constant(Rational(1));
  if (!is_purely_large(f)) throw SeriesError("exp of a number that is not purely large: " + print_number(f));
  return number_exp(f);
}

Approx invert_to_order(const NumberExpr& f, std::size_t order) {
  if (f.is_zero()) throw SeriesError("inverse of 0");
  const Term& lead = f.leading();
  NumberExpr base = NumberExpr::term(1 / lead.coeff, mono_inv(lead.mono));
  NumberExpr eps = relative_tail(f);
  Approx r;
  if (eps.is_zero()) {
    r.value = base;
    return r;
  }
  r.approximate = true;
  NumberExpr minus_eps = neg(eps);
  NumberExpr power = NumberExpr::constant(Rational(1));
  NumberExpr sum;
  for (std::size_t k = 0; k <= order; ++k) {
    sum = add(sum, power);
    power = mul(power, minus_eps);
  }
  r.value = mul(base, sum);
  return r;
}

}  // namespace hsx
