#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace hsx {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::size_t hash_rational(const Rational& q) {
  std::size_t h = static_cast<std::size_t>(mpz_getlimbn(q.get_num_mpz_t(), 0));
  h ^= static_cast<std::size_t>(mpz_getlimbn(q.get_den_mpz_t(), 0)) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::size_t>(sgn(q) + 2) << 1;
  return h;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hsx
