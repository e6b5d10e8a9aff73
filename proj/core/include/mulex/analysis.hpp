#pragma once

#include "mulex/interval.hpp"
#include "mulex/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mulex {

inline constexpr unsigned kDefaultPrecision = 60;
inline constexpr unsigned kMaxPrecision = 4096;

/// Enclosures of log 2 and log 3 (natural logs).
struct LogBounds {
  Interval ln2;
  Interval ln3;
};

LogBounds log_bounds(unsigned bits);

/// .693 < log 2 < .694 and 1.098 < log 3 < 1.099.
LogBounds three_digit_log_bounds();

/// beta, gamma and friends derived from one pair of log enclosures.
struct Constants {
  unsigned precision = 0;  // 0 when built from explicit bounds
  LogBounds logs;
  Interval log2_3;
  Interval log2_5;
  Interval beta;
  Interval gamma;
  Interval two_pow_gamma;
  /// -(5(1 - x^2 - 2x(1-x)log2 3) + log2 3 - 1)/2, the decay rate of h/f for t >= 5.
  Interval gamma_appendix;
  /// 1 - x^2 - 2x(1-x)log2 3, the tn coefficient of log2 of h/f and k/f.
  Interval tn_coefficient;
};

Constants constants_from(const LogBounds& logs);

/// Cached per precision; thread-safe.
const Constants& constants(unsigned bits = kDefaultPrecision);

/// beta_a, gamma_a of the W_a(n) construction (weights a-1, a, a+1).
struct ConjectureConstants {
  unsigned a = 2;
  Interval beta_a;
  Interval gamma_a;
};

ConjectureConstants conjecture_constants(unsigned a, unsigned bits = kDefaultPrecision);

/// ceil(beta m) and floor(beta m), certified by raising the precision until the
/// enclosure of beta m avoids integers. Throws PrecisionError past kMaxPrecision.
std::uint64_t ceil_beta(std::uint64_t m);
std::uint64_t floor_beta(std::uint64_t m);

/// 2^e2 3^e3 5^e5 with integer (possibly negative) exponents.
struct PrimePower {
  std::int64_t e2 = 0;
  std::int64_t e3 = 0;
  std::int64_t e5 = 0;

  Rational value() const;
  /// Enclosure of log2 of the value.
  Interval log2(const Constants& c) const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

PrimePower operator*(const PrimePower& a, const PrimePower& b);

/// Exact comparison: -1, 0, +1.
int compare(const PrimePower& a, const PrimePower& b);

/// h(y) = 2^{C(y,2)} 3^{y(n-y)}, the product of the W(n) member with |R| = y.
PrimePower w_value(std::uint64_t n, std::uint64_t y);

struct WOptimum {
  std::uint64_t y = 0;  // |R|
  ProductValue value = 1;
};

/// argmax of h over 0..n. Exact scan for n <= 64; beyond that the maximizer
/// is ceil(beta (n-1)), checked against both neighbours exactly.
WOptimum w_optimum(std::uint64_t n);

PrimePower f_value(std::uint64_t n, std::uint64_t t);
PrimePower h_value(std::uint64_t n, std::uint64_t t);
PrimePower k_value(std::uint64_t n, std::uint64_t t);

struct Bounds {
  PrimePower f;
  PrimePower h;
  PrimePower k;
  std::uint64_t c = 0;  // the minimizing |R_A| in f
  Interval fstar_log2;
};

/// f, h, k exactly and log2 f_* as an interval. Requires 2 <= t <= n.
Bounds eval_bounds(std::uint64_t n, std::uint64_t t, unsigned bits = kDefaultPrecision);

Interval fstar_log2(std::uint64_t n, std::uint64_t t, const Constants& c);

/// One appendix inequality "lhs < 0", in its original form and in the
/// equivalent quadratic form in log 2, log 3. Either certified sign decides it.
struct InequalityCheck {
  std::string name;
  std::string statement;
  std::string reduced_statement;
  Interval direct;
  Interval reduced;
  std::optional<bool> holds;  // nullopt: inconclusive
  bool both_decided() const;
};

struct AppendixReport {
  unsigned precision = 0;
  std::vector<InequalityCheck> checks;
  bool all_hold() const;
};

/// The three appendix inequalities and their quadratic-in-logs reductions,
/// evaluated with the given bounds. Does not throw on an inconclusive sign.
AppendixReport evaluate_appendix_inequalities(const LogBounds& logs);

/// Certifies every inequality, doubling the precision from `bits` until all
/// signs are decided. Throws PrecisionError at kMaxPrecision.
AppendixReport check_appendix_inequalities(unsigned bits = kDefaultPrecision);

/// Same, with fixed bounds; throws PrecisionError if any sign is undecided.
AppendixReport check_appendix_inequalities(const LogBounds& logs);

struct PropsReport {
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  Interval a1_margin;  // log2 f - log2 (f_* 2^{-xt-3/2} 3^{-t-1}), >= 0 when a1 holds
  Interval a2_margin;  // (C1 + C2 log2 3) - log2(h/f), >= 0 when a2 holds
  bool a1 = false;
  bool a2 = false;
};

/// Certifies both appendix propositions at (n, t). Requires 2 <= t <= n.
PropsReport check_props(std::uint64_t n, std::uint64_t t, unsigned bits = kDefaultPrecision);

/// Polynomial in (n, t) with interval coefficients.
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 constant(const Interval& c);
  static Poly2 n_var();
  static Poly2 t_var();

  void add(unsigned n_deg, unsigned t_deg, const Interval& coeff);
  Interval coeff(unsigned n_deg, unsigned t_deg) const;
  Interval eval(const Interval& n, const Interval& t) const;
  /// The part with n-degree zero, as a polynomial in t only.
  Poly2 n_free_part() const;
  /// Coefficients agree up to overlap of their enclosures.
  bool matches(const Poly2& other) const;
  Poly2& operator+=(const Poly2& o);
  Poly2 scaled(const Interval& s) const;

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a += b.scaled(Interval(-1)); }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);

  const std::vector<std::pair<std::pair<unsigned, unsigned>, Interval>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<std::pair<unsigned, unsigned>, Interval>> terms_;
};

/// log2 exponent polynomials: h/f <= 2^{C1} 3^{C2} and k/f <= 2^{G1} 3^{G2}.
struct ExponentPolys {
  Poly2 c1, c2;  // from the definitions of h and f_*
  Poly2 c1_displayed, c2_displayed;
  Poly2 g1, g2;  // 15^t folded into g1 as t log2 15
};

ExponentPolys exponent_polys(const Constants& c);

struct ConstantsCertificate {
  unsigned precision = 0;
  std::uint64_t K = 0;
  bool K_minimal = false;  // p(K-1, K-1) >= 0 certified
  std::uint64_t K_three_digit = 0;
  Interval gamma_app;
  Interval T;
  std::uint64_t M1 = 0;
  std::uint64_t Kprime = 0;
  Interval Tprime_bound;
  std::optional<std::uint64_t> M_complem2;
  bool linear_coefficients_match = false;
  std::vector<std::string> provenance;
};

/// Least t >= 5 at which p(n,t) = (-(x/6)(1-x)t + 2)n + 2 is certified
/// negative for every n >= t under the given bounds.
std::uint64_t find_K(const Constants& c);

ConstantsCertificate find_constants(unsigned bits = kDefaultPrecision);

/// Re-checks the certificate's defining inequalities at its own precision.
bool verify_certificate(const ConstantsCertificate& cert);

struct SpotCheck {
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  Interval margin;  // log2(h/f) + gamma n, negative when the decay bound holds
  bool holds = false;
};

/// h(n,t) < 2^{-gamma n} f(n,t) at pseudo-random points with 5 <= t <= K and
/// M1 <= n <= M1 + spread. Deterministic for a given seed.
std::vector<SpotCheck> spot_check_hf_decay(const ConstantsCertificate& cert, unsigned count = 20,
                                           std::uint64_t seed = 1, std::uint64_t spread = 2000);

enum class GridCheck { h_lt_f, k_lt_f, hf_decay };

struct GridFailure {
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  PrimePower lhs;
  PrimePower rhs;
};

struct GridReport {
  GridCheck which = GridCheck::h_lt_f;
  std::uint64_t points = 0;
  std::vector<GridFailure> failures;
  /// Least n0 in the range such that every n >= n0 in range has no failure.
  std::optional<std::uint64_t> min_clean_n;
};

/// Exact comparison at every (n, t) with t in [t_lo, t_hi], n in [n_lo, n_hi],
/// t <= n. hf_decay compares log2(h/f) against -gamma n, t >= 5, certified.
GridReport grid_verify(GridCheck which, std::pair<std::uint64_t, std::uint64_t> t_range,
                       std::pair<std::uint64_t, std::uint64_t> n_range, unsigned threads = 1);

/// h(n,t) < 2^{-gamma n} f(n,t) certified at one point.
bool hf_decay_holds(std::uint64_t n, std::uint64_t t, const Constants& c);

/// Largest sum of a two-class construction: 2C(m,2) + 3m(n-m) for m in {floor(2n/3), ceil(2n/3)}.
std::uint64_t sum_formula(std::uint64_t n);

}  // namespace mulex
