#include "ramarith/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ramarith/arith_core.hpp"

namespace ramarith {

namespace {

// n reduced into [0, q); c_q is q-periodic so this loses nothing.
std::int64_t reduce_mod(std::int64_t n, std::int64_t q) {
  std::int64_t r = n % q;
  return r < 0 ? r + q : r;
}

}  // namespace

std::int64_t c_kluyver(std::int64_t q, std::int64_t n) {
  if (q < 1) throw std::domain_error("c_kluyver: q must be >= 1");
  const std::int64_t r = reduce_mod(n, q);
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(q)) {
    if (r % d != 0) continue;
    sum += d * moebius(q / d);
  }
  return sum;
}

std::int64_t c_holder(std::int64_t q, std::int64_t n) {
  if (q < 1) throw std::domain_error("c_holder: q must be >= 1");
  const std::int64_t r = reduce_mod(n, q);
  const std::int64_t g = std::gcd(q, r);  // gcd(q, 0) == q
  const std::int64_t m = q / g;
  const int mu = moebius(m);
  if (mu == 0) return 0;
  // phi(m) | phi(q) whenever m | q, so the quotient is an exact integer.
  const std::int64_t quotient = euler_phi(q) / euler_phi(m);
  return quotient * mu;
}

double c_direct(std::int64_t q, std::int64_t n) {
  if (q < 1) throw std::domain_error("c_direct: q must be >= 1");
  double sum = 0.0;
  for (std::int64_t j = 1; j <= q; ++j) {
    if (std::gcd(j, q) != 1) continue;
    sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(j) *
                    static_cast<double>(reduce_mod(n, q)) / static_cast<double>(q));
  }
  return sum;
}

std::vector<std::int64_t> ramanujan_period(std::int64_t q) {
  std::vector<std::int64_t> period(static_cast<std::size_t>(q));
  // Shared divisor list; per-residue evaluation is a filtered Kluyver sum.
  const std::vector<std::int64_t> divs = divisors(q);
  std::vector<std::int64_t> weighted(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i) weighted[i] = divs[i] * moebius(q / divs[i]);
  for (std::int64_t r = 0; r < q; ++r) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < divs.size(); ++i)
      if (r % divs[i] == 0) sum += weighted[i];
    period[static_cast<std::size_t>(r)] = sum;
  }
  return period;
}

int divisibility_via_ramanujan(std::int64_t q, std::int64_t n) {
  if (q < 1) throw std::domain_error("divisibility_via_ramanujan: q must be >= 1");
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(q)) sum += c_kluyver(d, n);
  const Rational value = Rational(sum) / q;
  const int expected = reduce_mod(n, q) == 0 ? 1 : 0;
  if (value != expected)
    throw IdentityViolation("divisibility_via_ramanujan: mean is not 1_{q|n}");
  return expected;
}

Rational carmichael_orthogonality(std::int64_t q, std::int64_t ell, std::int64_t n) {
  if (q < 1 || ell < 1)
    throw std::domain_error("carmichael_orthogonality: moduli must be >= 1");
  const std::int64_t period = lcm64(q, ell);
  const std::vector<std::int64_t> cq = ramanujan_period(q);
  const std::vector<std::int64_t> cl = ramanujan_period(ell);
  std::int64_t sum = 0;
  for (std::int64_t a = 1; a <= period; ++a)
    sum += cq[static_cast<std::size_t>(reduce_mod(n + a, q))] *
           cl[static_cast<std::size_t>(reduce_mod(a, ell))];
  Rational mean = Rational(sum) / period;
  mean.canonicalize();
  const Rational expected = q == ell ? Rational(c_kluyver(ell, n)) : Rational(0);
  if (mean != expected)
    throw IdentityViolation("carmichael_orthogonality: period mean is not 1_{q=l} c_l(n)");
  return mean;
}

}  // namespace ramarith
