#include "ramarith/arith_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ramarith {

PrimeSieve::PrimeSieve(std::int64_t limit) : limit_(limit) {
  if (limit < 1) throw std::domain_error("PrimeSieve: limit must be >= 1");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  // Linear sieve: each composite is crossed once by its smallest prime.
  for (std::int64_t n = 2; n <= limit; ++n) {
    if (spf_[static_cast<std::size_t>(n)] == 0) {
      spf_[static_cast<std::size_t>(n)] = static_cast<std::int32_t>(n);
      primes_.push_back(static_cast<std::int32_t>(n));
    }
    for (std::int32_t p : primes_) {
      if (p > spf_[static_cast<std::size_t>(n)] || n * p > limit) break;
      spf_[static_cast<std::size_t>(n * p)] = p;
    }
  }
}

bool PrimeSieve::is_prime(std::int64_t n) const {
  if (n < 2) return false;
  if (n <= limit_) return spf_[static_cast<std::size_t>(n)] == n;
  if (n > limit_ * limit_) throw std::domain_error("PrimeSieve: n beyond certified range");
  for (std::int32_t p : primes_) {
    if (static_cast<std::int64_t>(p) * p > n) break;
    if (n % p == 0) return false;
  }
  return true;
}

std::int32_t PrimeSieve::smallest_factor(std::int64_t n) const {
  if (n < 2 || n > limit_) throw std::domain_error("PrimeSieve: smallest_factor out of range");
  return spf_[static_cast<std::size_t>(n)];
}

const PrimeSieve& default_sieve() {
  static const PrimeSieve sieve(1'000'000);
  return sieve;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorize: n must be >= 1");
  Factorization out;
  out.n = n;
  const PrimeSieve& sieve = default_sieve();
  if (n <= sieve.limit()) {
    while (n > 1) {
      const std::int64_t p = sieve.smallest_factor(n);
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.factors.push_back({p, e});
    }
    return out;
  }
  for (std::int32_t p : sieve.primes()) {
    if (static_cast<std::int64_t>(p) * p > n) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (n > 1) {
    if (n > sieve.limit() * sieve.limit())
      throw std::domain_error("factorize: n exceeds trial-division bound");
    out.factors.push_back({n, 1});
  }
  return out;
}

std::vector<std::int64_t> divisors(const Factorization& f) {
  std::vector<std::int64_t> divs{1};
  for (const PrimeFactor& pf : f.factors) {
    const std::size_t base = divs.size();
    std::int64_t pe = 1;
    for (int e = 1; e <= pf.exponent; ++e) {
      pe *= pf.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<std::int64_t> divisors(std::int64_t n) { return divisors(factorize(n)); }

int moebius(std::int64_t n) {
  const Factorization f = factorize(n);
  for (const PrimeFactor& pf : f.factors)
    if (pf.exponent > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t out = 1;
  for (const PrimeFactor& pf : factorize(n).factors) {
    std::int64_t pe = 1;
    for (int e = 1; e < pf.exponent; ++e) pe *= pf.prime;
    out *= pe * (pf.prime - 1);
  }
  return out;
}

std::int64_t kappa(std::int64_t n) {
  std::int64_t out = 1;
  for (const PrimeFactor& pf : factorize(n).factors) out *= pf.prime;
  return out;
}

int omega(std::int64_t n) { return static_cast<int>(factorize(n).factors.size()); }

int big_omega(std::int64_t n) {
  int out = 0;
  for (const PrimeFactor& pf : factorize(n).factors) out += pf.exponent;
  return out;
}

int liouville(std::int64_t n) { return big_omega(n) % 2 == 0 ? 1 : -1; }

double von_mangoldt(std::int64_t n) {
  const Factorization f = factorize(n);
  if (f.factors.size() != 1) return 0.0;
  return std::log(static_cast<double>(f.factors[0].prime));
}

bool is_prime(std::int64_t n) { return default_sieve().is_prime(n); }

bool is_square_free(std::int64_t n) { return moebius(n) != 0; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = std::gcd(a, b);
  const std::int64_t step = a / g;
  if (step > std::numeric_limits<std::int64_t>::max() / b)
    throw std::domain_error("lcm64: overflow");
  return step * b;
}

std::int64_t lcm_up_to(std::int64_t q) {
  if (q < 1) throw std::domain_error("lcm_up_to: q must be >= 1");
  std::int64_t out = 1;
  for (std::int64_t k = 2; k <= q; ++k) out = lcm64(out, k);
  return out;
}

std::vector<int> moebius_table(std::int64_t upper) {
  std::vector<int> mu(static_cast<std::size_t>(upper));
  std::vector<std::int32_t> spf(static_cast<std::size_t>(upper) + 1, 0);
  std::vector<std::int32_t> primes;
  mu[0] = 1;
  for (std::int64_t n = 2; n <= upper; ++n) {
    if (spf[static_cast<std::size_t>(n)] == 0) {
      spf[static_cast<std::size_t>(n)] = static_cast<std::int32_t>(n);
      primes.push_back(static_cast<std::int32_t>(n));
      mu[static_cast<std::size_t>(n - 1)] = -1;
    }
    for (std::int32_t p : primes) {
      if (p > spf[static_cast<std::size_t>(n)] || n * p > upper) break;
      spf[static_cast<std::size_t>(n * p)] = p;
      mu[static_cast<std::size_t>(n * p - 1)] =
          (n % p == 0) ? 0 : -mu[static_cast<std::size_t>(n - 1)];
    }
  }
  return mu;
}

std::vector<std::int64_t> phi_table(std::int64_t upper) {
  std::vector<std::int64_t> phi(static_cast<std::size_t>(upper));
  std::vector<std::int32_t> spf(static_cast<std::size_t>(upper) + 1, 0);
  std::vector<std::int32_t> primes;
  phi[0] = 1;
  for (std::int64_t n = 2; n <= upper; ++n) {
    if (spf[static_cast<std::size_t>(n)] == 0) {
      spf[static_cast<std::size_t>(n)] = static_cast<std::int32_t>(n);
      primes.push_back(static_cast<std::int32_t>(n));
      phi[static_cast<std::size_t>(n - 1)] = n - 1;
    }
    for (std::int32_t p : primes) {
      if (p > spf[static_cast<std::size_t>(n)] || n * p > upper) break;
      spf[static_cast<std::size_t>(n * p)] = p;
      phi[static_cast<std::size_t>(n * p - 1)] =
          (n % p == 0) ? phi[static_cast<std::size_t>(n - 1)] * p
                       : phi[static_cast<std::size_t>(n - 1)] * (p - 1);
    }
  }
  return phi;
}

std::vector<std::int64_t> kappa_table(std::int64_t upper) {
  std::vector<std::int64_t> k(static_cast<std::size_t>(upper));
  std::vector<std::int32_t> spf(static_cast<std::size_t>(upper) + 1, 0);
  std::vector<std::int32_t> primes;
  k[0] = 1;
  for (std::int64_t n = 2; n <= upper; ++n) {
    if (spf[static_cast<std::size_t>(n)] == 0) {
      spf[static_cast<std::size_t>(n)] = static_cast<std::int32_t>(n);
      primes.push_back(static_cast<std::int32_t>(n));
      k[static_cast<std::size_t>(n - 1)] = n;
    }
    for (std::int32_t p : primes) {
      if (p > spf[static_cast<std::size_t>(n)] || n * p > upper) break;
      spf[static_cast<std::size_t>(n * p)] = p;
      k[static_cast<std::size_t>(n * p - 1)] = (n % p == 0)
                                                   ? k[static_cast<std::size_t>(n - 1)]
                                                   : k[static_cast<std::size_t>(n - 1)] * p;
    }
  }
  return k;
}

RationalWindow moebius_window(std::int64_t upper) {
  const std::vector<int> mu = moebius_table(upper);
  RationalWindow w(upper);
  for (std::int64_t n = 1; n <= upper; ++n) w.set(n, rat(mu[static_cast<std::size_t>(n - 1)]));
  return w;
}

RealWindow moebius_real_window(std::int64_t upper) {
  const std::vector<int> mu = moebius_table(upper);
  RealWindow w(upper);
  for (std::int64_t n = 1; n <= upper; ++n)
    w.set(n, static_cast<double>(mu[static_cast<std::size_t>(n - 1)]));
  return w;
}

RealWindow von_mangoldt_window(std::int64_t upper) {
  RealWindow w(upper);
  for (std::int32_t p : PrimeSieve(upper).primes()) {
    const double logp = std::log(static_cast<double>(p));
    for (std::int64_t pe = p; pe <= upper;) {
      w.set(pe, logp);
      if (pe > upper / p) break;
      pe *= p;
    }
  }
  return w;
}

RealWindow log_window(std::int64_t upper) {
  RealWindow w(upper);
  for (std::int64_t n = 1; n <= upper; ++n) w.set(n, std::log(static_cast<double>(n)));
  return w;
}

bool is_builtin_window(const std::string& name) {
  return name == "one" || name == "id" || name == "moebius" || name == "phi" ||
         name == "liouville" || name == "mu_squared" || name == "indicator_primes" ||
         name == "von_mangoldt";
}

RationalWindow builtin_window(const std::string& name, std::int64_t upper) {
  RationalWindow w(upper);
  if (name == "one") {
    for (std::int64_t n = 1; n <= upper; ++n) w.set(n, rat(1));
  } else if (name == "id") {
    for (std::int64_t n = 1; n <= upper; ++n) w.set(n, rat(n));
  } else if (name == "moebius") {
    return moebius_window(upper);
  } else if (name == "phi") {
    const std::vector<std::int64_t> phi = phi_table(upper);
    for (std::int64_t n = 1; n <= upper; ++n) w.set(n, rat(phi[static_cast<std::size_t>(n - 1)]));
  } else if (name == "liouville") {
    for (std::int64_t n = 1; n <= upper; ++n) w.set(n, rat(liouville(n)));
  } else if (name == "mu_squared") {
    const std::vector<int> mu = moebius_table(upper);
    for (std::int64_t n = 1; n <= upper; ++n)
      w.set(n, rat(mu[static_cast<std::size_t>(n - 1)] != 0 ? 1 : 0));
  } else if (name == "indicator_primes") {
    for (std::int32_t p : PrimeSieve(upper).primes()) w.set(p, rat(1));
  } else if (name == "von_mangoldt") {
    throw std::invalid_argument("builtin_window: von_mangoldt is double-valued; use von_mangoldt_window");
  } else {
    throw std::invalid_argument("builtin_window: unknown name '" + name + "'");
  }
  return w;
}

MoebiusProductSides moebius_sum_to_product(const RationalWindow& f, std::int64_t n) {
  if (n < 1 || n > f.upper())
    throw std::domain_error("moebius_sum_to_product: n outside window");
  MoebiusProductSides sides{rat(0), rat(1)};
  for (std::int64_t d : divisors(n)) {
    const int mu = moebius(d);
    if (mu == 1)
      sides.divisor_sum += f.at(d);
    else if (mu == -1)
      sides.divisor_sum -= f.at(d);
  }
  for (const PrimeFactor& pf : factorize(n).factors)
    sides.prime_product *= rat(1) - f.at(pf.prime);
  if (sides.divisor_sum != sides.prime_product)
    throw IdentityViolation("moebius_sum_to_product: sides differ (f not multiplicative?)");
  return sides;
}

CoprimalityCheck coprimality_detector(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::domain_error("coprimality_detector: arguments must be >= 1");
  CoprimalityCheck out;
  std::int64_t s = 0;
  for (std::int64_t d : divisors(std::gcd(a, b))) s += moebius(d);
  out.via_moebius = static_cast<int>(s);
  out.via_gcd = std::gcd(a, b) == 1 ? 1 : 0;
  if (out.via_moebius != out.via_gcd)
    throw IdentityViolation("coprimality_detector: Moebius route disagrees with gcd");
  return out;
}

}  // namespace ramarith
