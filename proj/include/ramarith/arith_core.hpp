#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ramarith/rational.hpp"

namespace ramarith {

// Thrown when a checked algebraic identity fails. Every operation that
// evaluates both sides of an identity raises this instead of returning a
// wrong value silently.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Primes and factorization
// ---------------------------------------------------------------------------

struct PrimeFactor {
  std::int64_t prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

// n = product of prime^exponent, primes strictly increasing, empty iff n = 1.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimeFactor> factors;
};

// Smallest-prime-factor sieve. Built once, shared read-only.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  const std::vector<std::int32_t>& primes() const { return primes_; }
  bool is_prime(std::int64_t n) const;
  std::int32_t smallest_factor(std::int64_t n) const;

 private:
  std::int64_t limit_;
  std::vector<std::int32_t> spf_;
  std::vector<std::int32_t> primes_;
};

// Process-wide sieve used by the scalar arithmetic functions; sized for
// desk-scale sweeps (primes to 1e6, factorization to 1e12).
const PrimeSieve& default_sieve();

Factorization factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> divisors(const Factorization& f);

int moebius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t kappa(std::int64_t n);  // square-free kernel, product of distinct primes
int omega(std::int64_t n);
int big_omega(std::int64_t n);
int liouville(std::int64_t n);
double von_mangoldt(std::int64_t n);
bool is_prime(std::int64_t n);
bool is_square_free(std::int64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
// lcm(1,2,...,q); throws std::domain_error when it would overflow int64.
std::int64_t lcm_up_to(std::int64_t q);

// ---------------------------------------------------------------------------
// Dense windows of arithmetic-function values on [1, M]
// ---------------------------------------------------------------------------

template <class T>
class Window {
 public:
  Window() = default;
  explicit Window(std::int64_t upper, T fill = T{})
      : upper_(upper), values_(static_cast<std::size_t>(upper), fill) {
    if (upper < 1) throw std::domain_error("Window: upper bound must be >= 1");
  }

  static Window indicator(std::int64_t upper, std::int64_t point, T value = T(1)) {
    Window w(upper);
    w.set(point, value);
    return w;
  }

  std::int64_t upper() const { return upper_; }

  const T& at(std::int64_t n) const {
    check(n);
    return values_[static_cast<std::size_t>(n - 1)];
  }

  void set(std::int64_t n, T v) {
    check(n);
    values_[static_cast<std::size_t>(n - 1)] = std::move(v);
  }

  friend bool operator==(const Window& a, const Window& b) {
    return a.upper_ == b.upper_ && a.values_ == b.values_;
  }

 private:
  void check(std::int64_t n) const {
    if (n < 1 || n > upper_) throw std::domain_error("Window: index outside [1, M]");
  }

  std::int64_t upper_ = 0;
  std::vector<T> values_;
};

using RationalWindow = Window<Rational>;
using RealWindow = Window<double>;

// Sieved tables over [1, M]; index n-1 holds the value at n.
std::vector<int> moebius_table(std::int64_t upper);
std::vector<std::int64_t> phi_table(std::int64_t upper);
std::vector<std::int64_t> kappa_table(std::int64_t upper);

// Named built-in windows (the CLI accepts these names for f / g' sources).
// one, id, moebius, phi, liouville, mu_squared, indicator_primes are exact;
// von_mangoldt is double-valued.
RationalWindow builtin_window(const std::string& name, std::int64_t upper);
bool is_builtin_window(const std::string& name);
RealWindow von_mangoldt_window(std::int64_t upper);
RealWindow log_window(std::int64_t upper);
RationalWindow moebius_window(std::int64_t upper);
RealWindow moebius_real_window(std::int64_t upper);

// ---------------------------------------------------------------------------
// Dirichlet convolution and the Eratosthenes transform
// ---------------------------------------------------------------------------

// result(n) = sum_{d|n} f(d) g(n/d) for n <= upper.
template <class T>
Window<T> dirichlet_convolve(const Window<T>& f, const Window<T>& g, std::int64_t upper) {
  if (f.upper() < upper || g.upper() < upper)
    throw std::domain_error("dirichlet_convolve: window bounds smaller than requested range");
  Window<T> out(upper);
  for (std::int64_t d = 1; d <= upper; ++d) {
    const T& fd = f.at(d);
    if (fd == T{}) continue;
    for (std::int64_t n = d; n <= upper; n += d) out.set(n, out.at(n) + fd * g.at(n / d));
  }
  return out;
}

// f' = f * mu, so that sum_{d|n} f'(d) = f(n).
template <class T>
Window<T> eratosthenes_transform(const Window<T>& f, std::int64_t upper) {
  if (f.upper() < upper)
    throw std::domain_error("eratosthenes_transform: window bound smaller than requested range");
  const std::vector<int> mu = moebius_table(upper);
  Window<T> out(upper);
  for (std::int64_t t = 1; t <= upper; ++t) {
    const T& ft = f.at(t);
    if (ft == T{}) continue;
    for (std::int64_t n = t; n <= upper; n += t) {
      const int m = mu[static_cast<std::size_t>(n / t - 1)];
      if (m == 1)
        out.set(n, out.at(n) + ft);
      else if (m == -1)
        out.set(n, out.at(n) - ft);
    }
  }
  return out;
}

// sum_{d|n} f'(d), the inverse of the Eratosthenes transform.
template <class T>
Window<T> divisor_sum(const Window<T>& fprime, std::int64_t upper) {
  if (fprime.upper() < upper)
    throw std::domain_error("divisor_sum: window bound smaller than requested range");
  Window<T> out(upper);
  for (std::int64_t d = 1; d <= upper; ++d) {
    const T& v = fprime.at(d);
    if (v == T{}) continue;
    for (std::int64_t n = d; n <= upper; n += d) out.set(n, out.at(n) + v);
  }
  return out;
}

// Both sides of sum_{d|n} mu(d) f(d) = prod_{p|n} (1 - f(p)) for
// multiplicative f; evaluating them together flags non-multiplicative input.
struct MoebiusProductSides {
  Rational divisor_sum;
  Rational prime_product;
};
MoebiusProductSides moebius_sum_to_product(const RationalWindow& f, std::int64_t n);

// 1_{(a,b)=1} computed through the Moebius sum over common divisors and
// through the gcd; both routes are exposed.
struct CoprimalityCheck {
  int via_moebius = 0;
  int via_gcd = 0;
};
CoprimalityCheck coprimality_detector(std::int64_t a, std::int64_t b);

}  // namespace ramarith
