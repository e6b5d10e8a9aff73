#pragma once

#include "mulex/numeric.hpp"

#include <optional>
#include <ostream>

namespace mulex {

/// Closed interval [lo, hi] with exact rational endpoints. The real it stands
/// for always lies inside; every operation encloses the exact image.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT: implicit by design of the algebra
  Interval(long point) : lo_(point), hi_(point) {}             // NOLINT
  Interval(const Rational& lo, const Rational& hi);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  bool certainly_positive() const { return lo_ > 0; }
  bool certainly_negative() const { return hi_ < 0; }
  bool certainly_nonnegative() const { return lo_ >= 0; }
  bool certainly_nonpositive() const { return hi_ <= 0; }

  /// -1 / +1 when the sign is certain, nullopt when 0 is inside.
  std::optional<int> sign() const;

  /// Outward rounding of both endpoints to multiples of 2^-bits.
  Interval rounded(unsigned bits) const;

  double approx() const { return midpoint().get_d(); }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

/// Certified real: the represented value is known to lie in the interval.
using CertifiedScalar = Interval;

std::ostream& operator<<(std::ostream& os, const Interval& x);

Interval square(const Interval& x);
Interval pow(const Interval& x, unsigned k);

/// Floor/ceil of the enclosed real when both endpoints agree.
std::optional<BigInt> certified_floor(const Interval& x);
std::optional<BigInt> certified_ceil(const Interval& x);

/// Natural logarithm of a positive rational, width <= 2^-bits.
Interval log_of(const Rational& r, unsigned bits);
/// Natural logarithm of a positive interval.
Interval log_of(const Interval& x, unsigned bits);
/// e^x, relative width about 2^-bits.
Interval exp_of(const Interval& x, unsigned bits);
/// Square root of a nonnegative interval.
Interval sqrt_of(const Interval& x, unsigned bits);

}  // namespace mulex
