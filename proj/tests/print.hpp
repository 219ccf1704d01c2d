#pragma once

// Readable gtest output for engine values.

#include <ostream>

#include "hsx/textio.hpp"

namespace hsx {

inline void PrintTo(const Monomial& m, std::ostream* os) { *os << print_monomial(m); }
inline void PrintTo(const NumberExpr& e, std::ostream* os) { *os << print_number(e); }
inline void PrintTo(const Ordinal& o, std::ostream* os) { *os << o.to_string(); }
inline void PrintTo(const LogSeries& f, std::ostream* os) { *os << print_log_series(f); }

}  // namespace hsx
