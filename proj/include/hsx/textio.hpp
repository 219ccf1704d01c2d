#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hsx/expr.hpp"
#include "hsx/loghyp.hpp"
#include "hsx/nested.hpp"
#include "hsx/ordinal.hpp"

namespace hsx {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, SourceSpan span);
  // Errors without a text position, e.g. a malformed coding file field.
  explicit ParseError(const std::string& msg);
  SourceSpan span;
};

Ordinal parse_ordinal(std::string_view text);
NumberExpr parse_number(std::string_view text);
std::string print_number(const NumberExpr& e);
std::string print_monomial(const Monomial& m);

LogSeries parse_log_series(std::string_view text);
std::string print_log_series(const LogSeries& f);
std::string print_log_monomial(const LogMonomial& m);

// JSON: {"name", "levels": [{"phi","eps","psi","iota","alpha"}], "period", "shift"}.
CodingSequence parse_coding(std::string_view json);
std::string print_coding(const CodingSequence& s);

}  // namespace hsx
