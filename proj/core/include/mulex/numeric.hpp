#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mulex {

/// Exact arbitrary-precision naturals and rationals (GMP).
using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact product of edge multiplicities, P(G) and friends.
using ProductValue = BigInt;

inline BigInt pow_big(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// "p/q" (or "p" for integers), the exchange form for exact rationals.
inline std::string to_fraction_string(const Rational& v) {
  Rational c(v);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str(10);
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

Rational parse_fraction(const std::string& text);

/// Exact binomial coefficient C(n, k); 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Binomial coefficient that must fit in 64 bits (throws std::overflow_error).
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

}  // namespace mulex
