#include "mulex/analysis.hpp"

#include "mulex/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace mulex {

namespace {

Interval iabs_hull(const Interval& x) {
  Rational a = abs(x.lo());
  Rational b = abs(x.hi());
  if (x.lo() <= 0 && x.hi() >= 0) return Interval(Rational(0), std::max(a, b));
  return Interval(std::min(a, b), std::max(a, b));
}

Interval binom2(const Interval& x) { return (x * x - x) / Interval(2); }

std::optional<bool> negative_sign(const Interval& lhs) {
  if (lhs.certainly_negative()) return true;
  if (lhs.certainly_nonnegative()) return false;
  return std::nullopt;
}

Interval iv(std::uint64_t v) { return Interval(Rational(static_cast<unsigned long>(v))); }

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

BigInt prime_part(unsigned long p, std::int64_t e) {
  return e > 0 ? pow_big(p, static_cast<unsigned long>(e)) : BigInt(1);
}

}  // namespace

LogBounds log_bounds(unsigned bits) { return {log_of(Rational(2), bits), log_of(Rational(3), bits)}; }

LogBounds three_digit_log_bounds() {
  return {Interval(Rational(693, 1000), Rational(694, 1000)),
          Interval(Rational(1098, 1000), Rational(1099, 1000))};
}

Constants constants_from(const LogBounds& logs) {
  Constants c;
  c.logs = logs;
  const Interval& a = logs.ln2;
  const Interval& b = logs.ln3;
  c.log2_3 = b / a;
  c.log2_5 = log_of(Rational(5), 128) / a;
  c.beta = b / (Interval(2) * b - a);
  const Interval& x = c.beta;
  const Interval one_minus = Interval(1) - x;
  c.gamma = square(x) / Interval(2) + x * one_minus * c.log2_3;
  c.two_pow_gamma = exp_of(c.gamma * a, 64);
  c.tn_coefficient = Interval(1) - square(x) - Interval(2) * x * one_minus * c.log2_3;
  c.gamma_appendix = -(Interval(5) * c.tn_coefficient + c.log2_3 - Interval(1)) / Interval(2);
  return c;
}

const Constants& constants(unsigned bits) {
  static std::mutex mu;
  static std::map<unsigned, Constants> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  Constants c = constants_from(log_bounds(bits));
  c.precision = bits;
  return cache.emplace(bits, std::move(c)).first->second;
}

ConjectureConstants conjecture_constants(unsigned a, unsigned bits) {
  if (a < 2) throw std::invalid_argument("conjecture constants need a >= 2");
  const Interval lm = log_of(Rational(a - 1), bits);
  const Interval la = log_of(Rational(a), bits);
  const Interval lp = log_of(Rational(a + 1), bits);
  const Interval ln2 = log_of(Rational(2), bits);
  ConjectureConstants r;
  r.a = a;
  r.beta_a = (lp - lm) / (Interval(2) * lp - la - lm);
  const Interval& x = r.beta_a;
  const Interval y = Interval(1) - x;
  r.gamma_a = (square(y) / Interval(2) * lm + square(x) / Interval(2) * la + x * y * lp) / ln2;
  return r;
}

namespace {

template <typename Pick>
std::uint64_t round_beta(std::uint64_t m, Pick pick) {
  if (m == 0) return 0;
  for (unsigned bits = kDefaultPrecision; bits <= kMaxPrecision; bits *= 2) {
    const Interval v = constants(bits).beta * iv(m);
    if (auto r = pick(v)) return r->get_ui();
  }
  throw PrecisionError("beta * " + std::to_string(m) + " not separated from an integer");
}

}  // namespace

std::uint64_t ceil_beta(std::uint64_t m) {
  return round_beta(m, [](const Interval& v) { return certified_ceil(v); });
}

std::uint64_t floor_beta(std::uint64_t m) {
  return round_beta(m, [](const Interval& v) { return certified_floor(v); });
}

Rational PrimePower::value() const {
  BigInt num = prime_part(2, e2) * prime_part(3, e3) * prime_part(5, e5);
  BigInt den = prime_part(2, -e2) * prime_part(3, -e3) * prime_part(5, -e5);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Interval PrimePower::log2(const Constants& c) const {
  Interval r(e2);
  if (e3 != 0) r += Interval(e3) * c.log2_3;
  if (e5 != 0) r += Interval(e5) * c.log2_5;
  return r;
}

PrimePower operator*(const PrimePower& a, const PrimePower& b) {
  return {a.e2 + b.e2, a.e3 + b.e3, a.e5 + b.e5};
}

int compare(const PrimePower& a, const PrimePower& b) {
  const PrimePower d{a.e2 - b.e2, a.e3 - b.e3, a.e5 - b.e5};
  const BigInt num = prime_part(2, d.e2) * prime_part(3, d.e3) * prime_part(5, d.e5);
  const BigInt den = prime_part(2, -d.e2) * prime_part(3, -d.e3) * prime_part(5, -d.e5);
  const int c = cmp(num, den);
  return (c > 0) - (c < 0);
}

PrimePower w_value(std::uint64_t n, std::uint64_t y) {
  if (y > n) throw std::invalid_argument("|R| larger than n");
  return {i64(y * (y - 1) / 2), i64(y * (n - y)), 0};
}

WOptimum w_optimum(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("w_optimum needs n >= 1");
  std::uint64_t best = 0;
  if (n <= 64) {
    PrimePower best_v = w_value(n, 0);
    for (std::uint64_t y = 1; y <= n; ++y) {
      PrimePower v = w_value(n, y);
      if (compare(v, best_v) > 0) {
        best = y;
        best_v = v;
      }
    }
  } else {
    best = ceil_beta(n - 1);
    const PrimePower v = w_value(n, best);
    if (compare(v, w_value(n, best - 1)) <= 0 || (best < n && compare(v, w_value(n, best + 1)) <= 0)) {
      throw InvariantViolation("W(n) optimum is not at ceil(beta(n-1))");
    }
  }
  return {best, w_value(n, best).value().get_num()};
}

namespace {

struct FChoice {
  PrimePower value;
  std::uint64_t c = 0;
};

FChoice f_choice(std::uint64_t n, std::uint64_t t) {
  if (t < 2 || t > n) throw std::invalid_argument("f(n,t) needs 2 <= t <= n");
  const std::uint64_t b = ceil_beta(t);
  const std::uint64_t l = t - b;  // floor((1-beta)t)
  const std::uint64_t m = n - t;
  auto at = [&](std::uint64_t c) {
    return PrimePower{i64(b * (b - 1) / 2 + b * c), i64(b * l + c * l + b * (m - c)), 0};
  };
  const std::uint64_t c_lo = floor_beta(m);
  const std::uint64_t c_hi = ceil_beta(m);
  FChoice r{at(c_lo), c_lo};
  if (c_hi != c_lo) {
    PrimePower other = at(c_hi);
    if (compare(other, r.value) < 0) r = {other, c_hi};
  }
  return r;
}

}  // namespace

PrimePower f_value(std::uint64_t n, std::uint64_t t) { return f_choice(n, t).value; }

PrimePower h_value(std::uint64_t n, std::uint64_t t) {
  if (t > n) throw std::invalid_argument("h(n,t) needs t <= n");
  return {i64(t * (t - 1) / 2 + t * (n - t)) - i64(n), i64(n), 0};
}

PrimePower k_value(std::uint64_t n, std::uint64_t t) {
  if (t > n) throw std::invalid_argument("k(n,t) needs t <= n");
  return {i64(t * (t - 1) / 2 + t * (n - t)) - i64(t), i64(t), i64(t)};
}

Interval fstar_log2(std::uint64_t n, std::uint64_t t, const Constants& c) {
  const Interval& x = c.beta;
  const Interval tt = iv(t);
  const Interval rest = iv(n - t);
  const Interval xt = x * tt;
  const Interval xx = x * (Interval(1) - x);
  Interval two = binom2(xt) + square(x) * tt * rest;
  Interval three = Interval(2) * xx * tt * rest + xx * square(tt);
  return two + three * c.log2_3;
}

Bounds eval_bounds(std::uint64_t n, std::uint64_t t, unsigned bits) {
  FChoice f = f_choice(n, t);
  Bounds b;
  b.f = f.value;
  b.c = f.c;
  b.h = h_value(n, t);
  b.k = k_value(n, t);
  b.fstar_log2 = fstar_log2(n, t, constants(bits));
  return b;
}

bool InequalityCheck::both_decided() const {
  return negative_sign(direct).has_value() && negative_sign(reduced).has_value();
}

bool AppendixReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InequalityCheck& c) { return c.holds.value_or(false); });
}

AppendixReport evaluate_appendix_inequalities(const LogBounds& logs) {
  const Constants c = constants_from(logs);
  const Interval& a = logs.ln2;
  const Interval& b = logs.ln3;
  const Interval& x = c.beta;
  const Interval xx = x * (Interval(1) - x);
  const Interval one_minus_sq = Interval(1) - square(x);

  auto make = [](std::string name, std::string st, std::string red, Interval direct, Interval reduced) {
    InequalityCheck chk{std::move(name), std::move(st), std::move(red), std::move(direct), std::move(reduced), {}};
    auto d = negative_sign(chk.direct);
    auto r = negative_sign(chk.reduced);
    if ((d && *d) || (r && *r)) {
      chk.holds = true;
    } else if ((d && !*d) || (r && !*r)) {
      chk.holds = false;
    }
    return chk;
  };

  AppendixReport rep;
  rep.checks.push_back(make("two_split", "2^(1-x^2) < 3^(1.5x(1-x))", "6 ln2 ln3 - 3 ln3^2 - 2 ln2^2 < 0",
                            one_minus_sq * a - Rational(3, 2) * xx * b,
                            Interval(6) * a * b - Interval(3) * square(b) - Interval(2) * square(a)));
  rep.checks.push_back(make("three_split", "3^((2/3)x(1-x)) < 2^((1-x^2)/2)", "4 ln3^2 - 9 ln2 ln3 + 3 ln2^2 < 0",
                            Rational(2, 3) * xx * b - one_minus_sq / Interval(2) * a,
                            Interval(4) * square(b) - Interval(9) * a * b + Interval(3) * square(a)));
  rep.checks.push_back(make("decay", "5(1-x^2-2x(1-x)log2 3) + log2 3 - 1 < 0",
                            "-3 ln3^2 + 7 ln2 ln3 - 4 ln2^2 < 0",
                            Interval(5) * c.tn_coefficient + c.log2_3 - Interval(1),
                            Interval(-3) * square(b) + Interval(7) * a * b - Interval(4) * square(a)));
  return rep;
}

AppendixReport check_appendix_inequalities(unsigned bits) {
  for (unsigned p = std::max(bits, 8u); p <= kMaxPrecision; p *= 2) {
    AppendixReport rep = evaluate_appendix_inequalities(constants(p).logs);
    rep.precision = p;
    if (std::all_of(rep.checks.begin(), rep.checks.end(),
                    [](const InequalityCheck& c) { return c.both_decided(); })) {
      return rep;
    }
  }
  throw PrecisionError("appendix inequalities undecided at the precision cap");
}

AppendixReport check_appendix_inequalities(const LogBounds& logs) {
  AppendixReport rep = evaluate_appendix_inequalities(logs);
  for (const auto& c : rep.checks) {
    if (!c.holds) throw PrecisionError("inequality " + c.name + " undecided with the given log bounds");
  }
  return rep;
}

PropsReport check_props(std::uint64_t n, std::uint64_t t, unsigned bits) {
  if (t < 2 || t > n) throw std::invalid_argument("check_props needs 2 <= t <= n");
  const PrimePower f = f_value(n, t);
  const PrimePower h = h_value(n, t);
  for (unsigned p = bits; p <= kMaxPrecision; p *= 2) {
    const Constants& c = constants(p);
    const Interval tt = iv(t);
    const Interval nn = iv(n);
    const Interval rhs1 = fstar_log2(n, t, c) - c.beta * tt - Rational(3, 2) - (tt + Interval(1)) * c.log2_3;
    const ExponentPolys polys = exponent_polys(c);
    const Interval bound2 = polys.c1_displayed.eval(nn, tt) + polys.c2_displayed.eval(nn, tt) * c.log2_3;
    PropsReport r;
    r.n = n;
    r.t = t;
    r.a1_margin = f.log2(c) - rhs1;
    r.a2_margin = bound2 - (h.log2(c) - f.log2(c));
    const auto s1 = r.a1_margin.sign();
    const auto s2 = r.a2_margin.sign();
    if (s1 && s2) {
      r.a1 = *s1 >= 0;
      r.a2 = *s2 >= 0;
      return r;
    }
  }
  throw PrecisionError("appendix propositions undecided at (" + std::to_string(n) + ", " +
                       std::to_string(t) + ")");
}

Poly2 Poly2::constant(const Interval& c) {
  Poly2 p;
  p.add(0, 0, c);
  return p;
}

Poly2 Poly2::n_var() {
  Poly2 p;
  p.add(1, 0, Interval(1));
  return p;
}

Poly2 Poly2::t_var() {
  Poly2 p;
  p.add(0, 1, Interval(1));
  return p;
}

void Poly2::add(unsigned n_deg, unsigned t_deg, const Interval& coeff) {
  for (auto& [deg, c] : terms_) {
    if (deg == std::make_pair(n_deg, t_deg)) {
      c += coeff;
      return;
    }
  }
  terms_.push_back({{n_deg, t_deg}, coeff});
  std::sort(terms_.begin(), terms_.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
}

Interval Poly2::coeff(unsigned n_deg, unsigned t_deg) const {
  for (const auto& [deg, c] : terms_) {
    if (deg == std::make_pair(n_deg, t_deg)) return c;
  }
  return Interval(0);
}

Interval Poly2::eval(const Interval& n, const Interval& t) const {
  Interval r(0);
  for (const auto& [deg, c] : terms_) r += c * pow(n, deg.first) * pow(t, deg.second);
  return r;
}

Poly2 Poly2::n_free_part() const {
  Poly2 p;
  for (const auto& [deg, c] : terms_) {
    if (deg.first == 0) p.add(0, deg.second, c);
  }
  return p;
}

bool Poly2::matches(const Poly2& other) const {
  for (const auto& [deg, c] : terms_) {
    if (!c.overlaps(other.coeff(deg.first, deg.second))) return false;
  }
  for (const auto& [deg, c] : other.terms_) {
    if (!c.overlaps(coeff(deg.first, deg.second))) return false;
  }
  return true;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [deg, c] : o.terms_) add(deg.first, deg.second, c);
  return *this;
}

Poly2 Poly2::scaled(const Interval& s) const {
  Poly2 p;
  for (const auto& [deg, c] : terms_) p.add(deg.first, deg.second, c * s);
  return p;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 p;
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) p.add(da.first + db.first, da.second + db.second, ca * cb);
  }
  return p;
}

ExponentPolys exponent_polys(const Constants& c) {
  const Interval& x = c.beta;
  const Interval xx = x * (Interval(1) - x);
  const Poly2 N = Poly2::n_var();
  const Poly2 T = Poly2::t_var();
  const Poly2 one = Poly2::constant(Interval(1));
  auto k = [](const Interval& v) { return Poly2::constant(v); };
  auto choose2 = [&](const Poly2& p) { return (p * p - p).scaled(Interval(Rational(1, 2))); };

  const Poly2 xT = T.scaled(x);
  // log2 f_* = C(xt,2) + x^2 t(n-t) + (2x(1-x)t(n-t) + x(1-x)t^2) log2 3
  const Poly2 fstar2 = choose2(xT) + (T * (N - T)).scaled(square(x));
  const Poly2 fstar3 = (T * (N - T)).scaled(Interval(2) * xx) + (T * T).scaled(xx);
  // f >= f_* 2^{-xt-3/2} 3^{-t-1}
  const Poly2 lower2 = fstar2 - xT - k(Rational(3, 2));
  const Poly2 lower3 = fstar3 - T - one;

  ExponentPolys e;
  e.c1 = choose2(T) + T * (N - T) - N - lower2;
  e.c2 = N - lower3;
  e.c1_displayed = (T * T).scaled(square(x) - Interval(1)).scaled(Rational(1, 2)) +
                   T.scaled(Interval(3) * x - Interval(1)).scaled(Rational(1, 2)) +
                   (T * N).scaled(Interval(1) - square(x)) - N + k(Rational(3, 2));
  e.c2_displayed = N - (T * N).scaled(Interval(2) * xx) + (T * T).scaled(xx) + T + one;
  e.g1 = choose2(T) + T * (N - T) - T + T.scaled(c.log2_3 + c.log2_5) - lower2;
  e.g2 = Poly2() - lower3;
  return e;
}

std::uint64_t find_K(const Constants& c) {
  const Interval& x = c.beta;
  const Interval slope = -(x / Interval(6)) * (Interval(1) - x);
  for (std::uint64_t t = 5; t < 1000000; ++t) {
    const Interval tt = iv(t);
    const Interval coeff = slope * tt + Interval(2);
    const Interval p_tt = coeff * tt + Interval(2);
    if (coeff.certainly_negative() && p_tt.certainly_negative()) return t;
  }
  throw PrecisionError("no K certified below 10^6");
}

namespace {

Interval q_of(const ExponentPolys& e, const Constants& c, std::uint64_t t) {
  const Interval tt = iv(t);
  return e.c1.n_free_part().eval(Interval(0), tt) + e.c2.n_free_part().eval(Interval(0), tt) * c.log2_3;
}

Interval r_of(const ExponentPolys& e, const Constants& c, std::uint64_t t) {
  const Interval tt = iv(t);
  return e.g1.n_free_part().eval(Interval(0), tt) + e.g2.n_free_part().eval(Interval(0), tt) * c.log2_3;
}

Interval max_abs(const ExponentPolys& e, const Constants& c, std::uint64_t lo, std::uint64_t hi,
                 Interval (*fn)(const ExponentPolys&, const Constants&, std::uint64_t)) {
  Rational best_lo = 0;
  Rational best_hi = 0;
  for (std::uint64_t t = lo; t <= hi; ++t) {
    const Interval a = iabs_hull(fn(e, c, t));
    best_lo = std::max(best_lo, a.lo());
    best_hi = std::max(best_hi, a.hi());
  }
  return Interval(best_lo, best_hi);
}

std::uint64_t ceil_u64(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_ui();
}

std::uint64_t floor_u64(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_ui();
}

bool p_nonnegative(const Constants& c, std::uint64_t t) {
  const Interval& x = c.beta;
  const Interval tt = iv(t);
  const Interval coeff = -(x / Interval(6)) * (Interval(1) - x) * tt + Interval(2);
  return (coeff * tt + Interval(2)).certainly_nonnegative();
}

}  // namespace

ConstantsCertificate find_constants(unsigned bits) {
  const Constants& c = constants(bits);
  const ExponentPolys e = exponent_polys(c);
  ConstantsCertificate cert;
  cert.precision = bits;
  cert.K = find_K(c);
  cert.K_minimal = p_nonnegative(c, cert.K - 1);
  cert.K_three_digit = find_K(constants_from(three_digit_log_bounds()));
  cert.gamma_app = c.gamma_appendix;
  if (!cert.gamma_app.certainly_positive()) throw PrecisionError("appendix gamma not certified positive");

  const Interval& kappa = c.tn_coefficient;
  cert.linear_coefficients_match =
      e.c1.matches(e.c1_displayed) && e.c2.matches(e.c2_displayed) &&
      (e.c1.coeff(1, 1) + e.c2.coeff(1, 1) * c.log2_3).overlaps(kappa) &&
      (e.g1.coeff(1, 1) + e.g2.coeff(1, 1) * c.log2_3).overlaps(kappa) &&
      (e.c1.coeff(1, 0) + e.c2.coeff(1, 0) * c.log2_3).overlaps(c.log2_3 - Interval(1)) &&
      (e.g1.coeff(1, 0) + e.g2.coeff(1, 0) * c.log2_3).overlaps(Interval(0));
  if (!cert.linear_coefficients_match) throw InvariantViolation("exponent polynomials disagree");

  cert.T = max_abs(e, c, 5, cert.K, q_of);
  cert.M1 = std::max(cert.K, ceil_u64(cert.T.hi() / cert.gamma_app.lo()));

  // K': (-(x/6)(1-x)t + 2) < -100, i.e. t > 612 / (x(1-x))
  const Interval threshold = Interval(612) / (c.beta * (Interval(1) - c.beta));
  auto fl = certified_floor(threshold);
  if (!fl) throw PrecisionError("K' threshold straddles an integer");
  cert.Kprime = std::max(cert.K, fl->get_ui() + 1);

  cert.Tprime_bound = max_abs(e, c, 2, cert.Kprime, r_of);
  if (!kappa.certainly_negative()) throw PrecisionError("tn coefficient not certified negative");
  const std::uint64_t m = floor_u64(cert.Tprime_bound.hi() / (-kappa.hi())) + 1;
  cert.M_complem2 = std::max(m, cert.Kprime);

  cert.provenance = {
      "log 2, log 3 enclosed by atanh series at " + std::to_string(bits) + " bits",
      "K: least t with -(x/6)(1-x)t + 2 < 0 and p(t,t) = -(x/6)(1-x)t^2 + 2t + 2 < 0",
      "K (three-digit bounds): same test with .693 < log 2 < .694, 1.098 < log 3 < 1.099",
      "gamma = -(5(1-x^2-2x(1-x)log2 3) + log2 3 - 1)/2",
      "T >= max |q1(t) + q2(t) log2 3| over 5 <= t <= K, q read off C1, C2",
      "M1 = max(K, ceil(T / gamma)) so that -2 gamma n + T <= -gamma n",
      "K' = max(K, least t with -(x/6)(1-x)t + 2 < -100)",
      "T' >= max |r1(t) + r2(t) log2 3| over 2 <= t <= K', r read off G1, G2",
      "M = max(K', least n with n(1-x^2-2x(1-x)log2 3) + T' < 0)",
      "M2 not computed: it bounds ex_P(n,4,15) for all n <= M1 + K, beyond exhaustive search",
  };
  return cert;
}

bool verify_certificate(const ConstantsCertificate& cert) {
  const Constants& c = constants(cert.precision);
  const Interval& x = c.beta;
  const Interval xx = x * (Interval(1) - x);
  const Interval kk = iv(cert.K);
  const Interval coeff_K = -(xx / Interval(6)) * kk + Interval(2);
  bool ok = coeff_K.certainly_negative() && (coeff_K * kk + Interval(2)).certainly_negative();
  ok = ok && cert.gamma_app.certainly_positive();
  ok = ok && (cert.gamma_app * iv(cert.M1) - cert.T).certainly_nonnegative();
  const Interval coeff_Kp = -(xx / Interval(6)) * iv(cert.Kprime) + Interval(2);
  ok = ok && (coeff_Kp + Interval(100)).certainly_negative();
  if (cert.M_complem2) {
    ok = ok && (c.tn_coefficient * iv(*cert.M_complem2) + cert.Tprime_bound).certainly_negative();
  }
  return ok;
}

std::vector<SpotCheck> spot_check_hf_decay(const ConstantsCertificate& cert, unsigned count, std::uint64_t seed,
                                           std::uint64_t spread) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> tdist(5, cert.K);
  std::uniform_int_distribution<std::uint64_t> ndist(cert.M1, cert.M1 + spread);
  const Constants& c = constants(cert.precision);
  std::vector<SpotCheck> out;
  for (unsigned i = 0; i < count; ++i) {
    SpotCheck s;
    s.t = tdist(rng);
    s.n = ndist(rng);
    const Interval nn = iv(s.n);
    s.margin = h_value(s.n, s.t).log2(c) - f_value(s.n, s.t).log2(c) + cert.gamma_app * nn;
    s.holds = s.margin.certainly_negative();
    out.push_back(std::move(s));
  }
  return out;
}

bool hf_decay_holds(std::uint64_t n, std::uint64_t t, const Constants& c) {
  const Interval nn = iv(n);
  const Interval margin = h_value(n, t).log2(c) - f_value(n, t).log2(c) + c.gamma_appendix * nn;
  if (margin.certainly_negative()) return true;
  if (margin.certainly_nonnegative()) return false;
  throw PrecisionError("h/f decay undecided at (" + std::to_string(n) + ", " + std::to_string(t) + ")");
}

GridReport grid_verify(GridCheck which, std::pair<std::uint64_t, std::uint64_t> t_range,
                       std::pair<std::uint64_t, std::uint64_t> n_range, unsigned threads) {
  if (n_range.second > 1000) throw std::invalid_argument("grid_verify is limited to n <= 1000");
  std::uint64_t t_lo = std::max<std::uint64_t>(t_range.first, which == GridCheck::hf_decay ? 5 : 2);
  const std::uint64_t t_hi = t_range.second;
  const Constants& c = constants(kDefaultPrecision);

  std::vector<std::uint64_t> rows;
  for (std::uint64_t n = n_range.first; n <= n_range.second; ++n) rows.push_back(n);
  std::vector<std::vector<GridFailure>> fails(rows.size());
  std::vector<std::uint64_t> counts(rows.size(), 0);

  auto work = [&](std::size_t idx) {
    const std::uint64_t n = rows[idx];
    for (std::uint64_t t = t_lo; t <= std::min(t_hi, n); ++t) {
      ++counts[idx];
      const PrimePower f = f_value(n, t);
      bool ok = false;
      PrimePower lhs;
      switch (which) {
        case GridCheck::h_lt_f:
          lhs = h_value(n, t);
          ok = compare(lhs, f) < 0;
          break;
        case GridCheck::k_lt_f:
          lhs = k_value(n, t);
          ok = compare(lhs, f) < 0;
          break;
        case GridCheck::hf_decay:
          lhs = h_value(n, t);
          ok = hf_decay_holds(n, t, c);
          break;
      }
      if (!ok) fails[idx].push_back({n, t, lhs, f});
    }
  };

  const unsigned workers = std::max(1u, threads);
  if (workers == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < rows.size(); i += workers) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  GridReport rep;
  rep.which = which;
  std::optional<std::uint64_t> last_bad;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rep.points += counts[i];
    if (!fails[i].empty()) last_bad = rows[i];
    for (auto& f : fails[i]) rep.failures.push_back(std::move(f));
  }
  if (!last_bad) {
    rep.min_clean_n = n_range.first;
  } else if (*last_bad < n_range.second) {
    rep.min_clean_n = *last_bad + 1;
  }
  return rep;
}

std::uint64_t sum_formula(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sum_formula needs n >= 1");
  auto val = [n](std::uint64_t m) { return m * (m - 1) + 3 * m * (n - m); };
  const std::uint64_t lo = 2 * n / 3;
  const std::uint64_t hi = (2 * n + 2) / 3;
  return std::max(val(lo), val(hi));
}

}  // namespace mulex
