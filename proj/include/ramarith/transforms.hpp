#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramarith/arith_core.hpp"
#include "ramarith/rational.hpp"

namespace ramarith {

// A family of Ramanujan-series coefficients q -> G(q): either a dense table
// with finite support, or one of the named symbolic families (1/q, 1/phi(q),
// mu^2(q)/phi(q)^2) whose support is infinite. The symbolic families are all
// multiplicative, which the smooth evaluator exploits.
class RamanujanCoefficients {
 public:
  // values[i] is the coefficient at q = i+1; support bound = values.size().
  static RamanujanCoefficients from_table(std::vector<Rational> values);
  static RamanujanCoefficients unit();                          // 1 at q = 1
  static RamanujanCoefficients null_coefficients();             // G(q) = 1/q
  static RamanujanCoefficients hardy_coefficients();            // G(q) = 1/phi(q)
  static RamanujanCoefficients singular_series_coefficients();  // mu^2(q)/phi(q)^2

  Rational at(std::int64_t q) const;
  std::optional<std::int64_t> support_bound() const { return support_bound_; }
  bool is_multiplicative() const { return multiplicative_; }
  const std::string& name() const { return name_; }

 private:
  RamanujanCoefficients() = default;

  std::vector<Rational> table_;
  std::function<Rational(std::int64_t)> generator_;
  std::optional<std::int64_t> support_bound_;
  bool multiplicative_ = false;
  std::string name_;
};

// Exact-rational periodic arithmetic function, stored as one full period.
class PeriodicFunction {
 public:
  // values[i] is F(i+1); F(a) = values[(a-1) mod T].
  explicit PeriodicFunction(std::vector<Rational> one_period);

  std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
  const Rational& at(std::int64_t a) const;

  // F(a) = sum_{q <= support} G(q) c_q(a), tabulated over lcm(1..support).
  static PeriodicFunction from_expansion(const RamanujanCoefficients& coeffs,
                                         std::int64_t support);

 private:
  std::vector<Rational> values_;
};

// sum_{d <= cutoff, l | d} F'(d) / d. The result is the full Wintner
// coefficient when F' provably vanishes beyond the cutoff, otherwise a
// truncation tagged partial. `tail_unknown` declares that the window itself
// truncates a function with unknown tail.
Evaluated<Rational> wintner_coefficient(const RationalWindow& fprime, std::int64_t ell,
                                        std::int64_t cutoff, bool tail_unknown = false);
Evaluated<double> wintner_coefficient(const RealWindow& fprime, std::int64_t ell,
                                      std::int64_t cutoff, bool tail_unknown = false);

// (1/phi(l)) * mean of F(a) c_l(a) over one exact period lcm(period(F), l).
Rational carmichael_coefficient(const PeriodicFunction& f, std::int64_t ell);

// Partial sum sum_{q <= cutoff} G(q) c_q(a); exact when G is finitely
// supported inside the cutoff.
Evaluated<Rational> ramanujan_series_eval(const RamanujanCoefficients& coeffs, std::int64_t a,
                                          std::int64_t cutoff);
Evaluated<double> ramanujan_series_eval_real(const RamanujanCoefficients& coeffs, std::int64_t a,
                                             std::int64_t cutoff);

// Sum of G(q) c_q(a) over P-smooth q. The set is finite: c_q(a) != 0 forces
// v_p(q) <= v_p(a) + 1 for every p | q. Finite tables are enumerated
// directly; the symbolic families factor into exact local sums per prime.
Rational smooth_series_eval(const RamanujanCoefficients& coeffs, std::int64_t a, std::int64_t smooth_prime);

// F ignores prime powers iff F(a) = F(kappa(a)); equivalently F' is
// square-free supported. Both routes are evaluated and must agree.
bool is_ipp(const RationalWindow& f);
bool is_ipp(const RealWindow& f);

// The canonical modification a -> F(kappa(a)), also built independently as
// (mu^2 . F') * 1; the two constructions are asserted equal.
RationalWindow ippify(const RationalWindow& f);
RealWindow ippify(const RealWindow& f);

}  // namespace ramarith
