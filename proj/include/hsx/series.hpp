#pragma once

#include <cstddef>
#include <utility>

#include "hsx/expr.hpp"

namespace hsx {

// add, sub, mul and scale on NumberExpr live in expr.hpp.

struct SeriesSplit {
  NumberExpr purely_large;
  Rational real_part;
  NumberExpr infinitesimal;
};

// Result of an order-truncated computation.
struct Approx {
  NumberExpr value;
  bool approximate = false;
};

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::pair<Rational, Monomial> dominant(const NumberExpr& f);
// f_{>m}: the terms whose monomial dominates m.
NumberExpr truncate_above(const NumberExpr& f, const Monomial& m);
// g is a truncation of f.
bool is_truncation(const NumberExpr& g, const NumberExpr& f);
SeriesSplit split3(const NumberExpr& f);
Cmp compare_series(const NumberExpr& f, const NumberExpr& g);

// log f = log d_f + sum_{k<order} (-1)^k/(k+1) eps^{k+1} with f = d_f (1 + eps).
Approx log_partial(const NumberExpr& f, std::size_t order);
// e^f for purely large f.
NumberExpr exp_partial(const NumberExpr& f);
// Geometric-series inverse up to eps^order.
Approx invert_to_order(const NumberExpr& f, std::size_t order);

}  // namespace hsx
