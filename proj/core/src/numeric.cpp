#include "mulex/numeric.hpp"

#include "mulex/errors.hpp"

#include <stdexcept>

namespace mulex {

Rational parse_fraction(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw FormatError("not a rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw FormatError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  BigInt r = binomial(n, k);
  if (!r.fits_ulong_p()) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  return r.get_ui();
}

}  // namespace mulex
