#include "mulex/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace mulex {

namespace {

BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt ceil_of(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt shl(const BigInt& v, unsigned long bits) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
  return r;
}

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt cdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational scaled(const BigInt& v, unsigned long bits) {
  Rational r(v, shl(BigInt(1), bits));
  r.canonicalize();
  return r;
}

// Enclosure of 2^P * atanh(a/b) for 0 <= a < b with a/b <= 1/3; returns
// integer bounds.
std::pair<BigInt, BigInt> atanh_fixed(const BigInt& a, const BigInt& b, unsigned long p) {
  const BigInt a2 = a * a;
  const BigInt b2 = b * b;
  const BigInt one = shl(BigInt(1), p);

  BigInt term = fdiv(one * a, b);
  BigInt lo = term;
  for (unsigned long k = 1; term > 0; ++k) {
    term = fdiv(term * a2, b2);
    lo += fdiv(term, BigInt(2 * k + 1));
  }

  term = cdiv(one * a, b);
  BigInt hi = term;
  unsigned long k = 1;
  for (; term > 1; ++k) {
    term = cdiv(term * a2, b2);
    hi += cdiv(term, BigInt(2 * k + 1));
  }
  // tail: sum_{j >= k} z^{2j+1}/(2j+1) <= z^{2k+1} / (1 - z^2)
  term = cdiv(term * a2, b2);
  hi += cdiv(term * b2, b2 - a2);
  return {lo, hi};
}

Interval atanh_of(const Rational& z, unsigned long p) {
  const bool neg = z < 0;
  const Rational az = neg ? Rational(-z) : z;
  if (az > Rational(1, 3)) throw std::domain_error("atanh argument outside [-1/3, 1/3]");
  auto [lo, hi] = atanh_fixed(az.get_num(), az.get_den(), p);
  Interval r(scaled(lo, p), scaled(hi, p));
  return neg ? -r : r;
}

Interval ln2_fixed(unsigned long p) { return atanh_of(Rational(1, 3), p) * Interval(2); }

// Enclosure of e^y for y >= 0, as fixed-point bounds at p bits.
std::pair<BigInt, BigInt> exp_fixed_nonneg(const Rational& y, unsigned long p) {
  unsigned long m = 0;
  Rational u = y;
  while (u > Rational(1, 2)) {
    u /= 2;
    ++m;
  }
  const unsigned long q = p + m + 8;
  const BigInt c = u.get_num();
  const BigInt d = u.get_den();
  const BigInt one = shl(BigInt(1), q);

  BigInt term = fdiv(one * c, d);
  BigInt lo = one + term;
  for (unsigned long k = 2; term > 0; ++k) {
    term = fdiv(term * c, d * BigInt(k));
    lo += term;
  }

  term = cdiv(one * c, d);
  BigInt hi = one + term;
  unsigned long k = 2;
  for (; term > 1; ++k) {
    term = cdiv(term * c, d * BigInt(k));
    hi += term;
  }
  // remaining terms form a series dominated by a geometric one with ratio <= 1/2
  hi += 2 * cdiv(term * c, d * BigInt(k)) + 2;

  for (unsigned long i = 0; i < m; ++i) {
    lo = fdiv(lo * lo, one);
    hi = cdiv(hi * hi, one);
  }
  // rescale from q to p bits
  return {fdiv(lo, shl(BigInt(1), q - p)), cdiv(hi, shl(BigInt(1), q - p))};
}

Interval exp_point(const Rational& y, unsigned bits, bool want_lower) {
  const unsigned long p = bits + 16;
  if (y >= 0) {
    auto [lo, hi] = exp_fixed_nonneg(y, p);
    return want_lower ? Interval(scaled(lo, p)) : Interval(scaled(hi, p));
  }
  auto [lo, hi] = exp_fixed_nonneg(-y, p);
  // e^y = 1 / e^{-y}
  if (want_lower) return Interval(Rational(shl(BigInt(1), p), hi));
  return Interval(Rational(shl(BigInt(1), p), lo));
}

Interval log_point(const Rational& r, unsigned bits) {
  if (r <= 0) throw std::domain_error("log of a nonpositive number");
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  long k = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  auto mant = [&](long e) {
    Rational m = r;
    if (e > 0) {
      m /= Rational(shl(BigInt(1), static_cast<unsigned long>(e)));
    } else if (e < 0) {
      m *= Rational(shl(BigInt(1), static_cast<unsigned long>(-e)));
    }
    return m;
  };
  Rational m = mant(k);
  while (m > Rational(4, 3)) m = mant(++k);
  while (m < Rational(2, 3)) m = mant(--k);
  const unsigned long kbits = static_cast<unsigned long>(k < 0 ? -k : k);
  const unsigned long guard = 16 + (kbits ? mpz_sizeinbase(BigInt(kbits).get_mpz_t(), 2) : 0);
  const unsigned long p = bits + guard;
  Rational z = (m - 1) / (m + 1);
  z.canonicalize();
  Interval res = atanh_of(z, p) * Interval(2);
  if (k != 0) res += ln2_fixed(p) * Interval(k);
  return res;
}

}  // namespace

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
  lo_.canonicalize();
  hi_.canonicalize();
}

std::optional<int> Interval::sign() const {
  if (lo_ > 0) return 1;
  if (hi_ < 0) return -1;
  if (lo_ == 0 && hi_ == 0) return 0;
  return std::nullopt;
}

Interval Interval::rounded(unsigned bits) const {
  const BigInt scale = shl(BigInt(1), bits);
  return Interval(Rational(floor_of(lo_ * scale), scale), Rational(ceil_of(hi_ * scale), scale));
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational nlo = lo_ - o.hi_;
  Rational nhi = hi_ - o.lo_;
  lo_ = std::move(nlo);
  hi_ = std::move(nhi);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  const Rational a = lo_ * o.lo_;
  const Rational b = lo_ * o.hi_;
  const Rational c = hi_ * o.lo_;
  const Rational d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.lo_ <= 0 && o.hi_ >= 0) throw std::domain_error("interval division by a range containing 0");
  Interval inv(1 / o.hi_, 1 / o.lo_);
  return *this *= inv;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << x.lo().get_d() << ", " << x.hi().get_d() << ']';
}

Interval square(const Interval& x) {
  if (x.lo() >= 0) return Interval(x.lo() * x.lo(), x.hi() * x.hi());
  if (x.hi() <= 0) return Interval(x.hi() * x.hi(), x.lo() * x.lo());
  return Interval(Rational(0), std::max(x.lo() * x.lo(), x.hi() * x.hi()));
}

Interval pow(const Interval& x, unsigned k) {
  Interval r(1);
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

std::optional<BigInt> certified_floor(const Interval& x) {
  BigInt a = floor_of(x.lo());
  if (a == floor_of(x.hi())) return a;
  return std::nullopt;
}

std::optional<BigInt> certified_ceil(const Interval& x) {
  BigInt a = ceil_of(x.lo());
  if (a == ceil_of(x.hi())) return a;
  return std::nullopt;
}

Interval log_of(const Rational& r, unsigned bits) { return log_point(r, bits); }

Interval log_of(const Interval& x, unsigned bits) {
  if (x.lo() <= 0) throw std::domain_error("log of an interval reaching 0");
  if (x.lo() == x.hi()) return log_point(x.lo(), bits);
  return Interval(log_point(x.lo(), bits).lo(), log_point(x.hi(), bits).hi());
}

Interval exp_of(const Interval& x, unsigned bits) {
  return Interval(exp_point(x.lo(), bits, true).lo(), exp_point(x.hi(), bits, false).hi());
}

Interval sqrt_of(const Interval& x, unsigned bits) {
  if (x.lo() < 0) throw std::domain_error("sqrt of a negative interval");
  const unsigned long p = bits + 8;
  const BigInt s2 = shl(BigInt(1), 2 * p);
  BigInt lo_arg = floor_of(x.lo() * s2);
  BigInt hi_arg = ceil_of(x.hi() * s2);
  BigInt lo, hi;
  mpz_sqrt(lo.get_mpz_t(), lo_arg.get_mpz_t());
  mpz_sqrt(hi.get_mpz_t(), hi_arg.get_mpz_t());
  if (hi * hi < hi_arg) hi += 1;
  return Interval(scaled(lo, p), scaled(hi, p));
}

}  // namespace mulex
