#include "ramarith/transforms.hpp"

#include <algorithm>

#include "ramarith/ramanujan.hpp"

namespace ramarith {

namespace {

int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool nearly_equal(double x, double y) { return std::abs(x - y) <= 1e-12 * (1.0 + std::abs(x) + std::abs(y)); }

}  // namespace

RamanujanCoefficients RamanujanCoefficients::from_table(std::vector<Rational> values) {
  RamanujanCoefficients c;
  c.support_bound_ = static_cast<std::int64_t>(values.size());
  c.table_ = std::move(values);
  c.name_ = "table";
  return c;
}

RamanujanCoefficients RamanujanCoefficients::unit() {
  RamanujanCoefficients c = from_table({rat(1)});
  c.name_ = "unit";
  return c;
}

RamanujanCoefficients RamanujanCoefficients::null_coefficients() {
  RamanujanCoefficients c;
  c.generator_ = [](std::int64_t q) { return Rational(1) / q; };
  c.multiplicative_ = true;
  c.name_ = "null";
  return c;
}

RamanujanCoefficients RamanujanCoefficients::hardy_coefficients() {
  RamanujanCoefficients c;
  c.generator_ = [](std::int64_t q) { return Rational(1) / euler_phi(q); };
  c.multiplicative_ = true;
  c.name_ = "hardy";
  return c;
}

RamanujanCoefficients RamanujanCoefficients::singular_series_coefficients() {
  RamanujanCoefficients c;
  c.generator_ = [](std::int64_t q) {
    if (moebius(q) == 0) return Rational(0);
    const std::int64_t phi = euler_phi(q);
    return Rational(1) / (phi * phi);
  };
  c.multiplicative_ = true;
  c.name_ = "singular_series";
  return c;
}

Rational RamanujanCoefficients::at(std::int64_t q) const {
  if (q < 1) throw std::domain_error("RamanujanCoefficients: index must be >= 1");
  if (support_bound_) {
    if (q > *support_bound_) return Rational(0);
    return table_[static_cast<std::size_t>(q - 1)];
  }
  return generator_(q);
}

PeriodicFunction::PeriodicFunction(std::vector<Rational> one_period) : values_(std::move(one_period)) {
  if (values_.empty()) throw std::domain_error("PeriodicFunction: period must be >= 1");
}

const Rational& PeriodicFunction::at(std::int64_t a) const {
  const std::int64_t t = period();
  std::int64_t r = (a - 1) % t;
  if (r < 0) r += t;
  return values_[static_cast<std::size_t>(r)];
}

PeriodicFunction PeriodicFunction::from_expansion(const RamanujanCoefficients& coeffs,
                                                  std::int64_t support) {
  const std::int64_t period = lcm_up_to(std::max<std::int64_t>(support, 1));
  std::vector<Rational> values(static_cast<std::size_t>(period), Rational(0));
  for (std::int64_t q = 1; q <= support; ++q) {
    const Rational g = coeffs.at(q);
    if (g == 0) continue;
    const std::vector<std::int64_t> cq = ramanujan_period(q);
    for (std::int64_t a = 1; a <= period; ++a)
      values[static_cast<std::size_t>(a - 1)] += g * cq[static_cast<std::size_t>(a % q)];
  }
  return PeriodicFunction(std::move(values));
}

namespace {

template <class T>
Evaluated<T> wintner_impl(const Window<T>& fprime, std::int64_t ell, std::int64_t cutoff,
                          bool tail_unknown) {
  if (ell < 1) throw std::domain_error("wintner_coefficient: index must be >= 1");
  if (cutoff < ell) throw std::domain_error("wintner_coefficient: cutoff below index");
  Evaluated<T> out;
  const std::int64_t top = std::min(cutoff, fprime.upper());
  for (std::int64_t d = ell; d <= top; d += ell) out.value += fprime.at(d) / d;
  bool truncates = tail_unknown;
  for (std::int64_t d = cutoff + 1; d <= fprime.upper() && !truncates; ++d)
    truncates = fprime.at(d) != T{};
  out.exactness = truncates ? Exactness::partial : Exactness::exact;
  return out;
}

}  // namespace

Evaluated<Rational> wintner_coefficient(const RationalWindow& fprime, std::int64_t ell,
                                        std::int64_t cutoff, bool tail_unknown) {
  return wintner_impl(fprime, ell, cutoff, tail_unknown);
}

Evaluated<double> wintner_coefficient(const RealWindow& fprime, std::int64_t ell,
                                      std::int64_t cutoff, bool tail_unknown) {
  return wintner_impl(fprime, ell, cutoff, tail_unknown);
}

Rational carmichael_coefficient(const PeriodicFunction& f, std::int64_t ell) {
  if (ell < 1) throw std::domain_error("carmichael_coefficient: index must be >= 1");
  const std::int64_t t = f.period();
  const std::int64_t span = lcm64(t, ell);
  const std::vector<std::int64_t> cl = ramanujan_period(ell);
  // Group the exact period mean by residue mod t; the inner Ramanujan-sum
  // weights are plain integers.
  Rational sum(0);
  for (std::int64_t r = 1; r <= t; ++r) {
    std::int64_t weight = 0;
    for (std::int64_t a = r; a <= span; a += t) weight += cl[static_cast<std::size_t>(a % ell)];
    if (weight != 0) sum += f.at(r) * weight;
  }
  return sum / (Rational(span) * euler_phi(ell));
}

Evaluated<Rational> ramanujan_series_eval(const RamanujanCoefficients& coeffs, std::int64_t a,
                                          std::int64_t cutoff) {
  if (a < 1) throw std::domain_error("ramanujan_series_eval: argument must be >= 1");
  Evaluated<Rational> out;
  const std::optional<std::int64_t> bound = coeffs.support_bound();
  const std::int64_t top = bound ? std::min(cutoff, *bound) : cutoff;
  for (std::int64_t q = 1; q <= top; ++q) {
    const Rational g = coeffs.at(q);
    if (g == 0) continue;
    out.value += g * c_kluyver(q, a);
  }
  out.exactness = (bound && *bound <= cutoff) ? Exactness::exact : Exactness::partial;
  return out;
}

Evaluated<double> ramanujan_series_eval_real(const RamanujanCoefficients& coeffs, std::int64_t a,
                                             std::int64_t cutoff) {
  if (a < 1) throw std::domain_error("ramanujan_series_eval_real: argument must be >= 1");
  Evaluated<double> out{0.0, Exactness::partial};
  const std::optional<std::int64_t> bound = coeffs.support_bound();
  const std::int64_t top = bound ? std::min(cutoff, *bound) : cutoff;
  for (std::int64_t q = 1; q <= top; ++q) {
    const Rational g = coeffs.at(q);
    if (g == 0) continue;
    out.value += to_double(g) * static_cast<double>(c_kluyver(q, a));
  }
  out.exactness = (bound && *bound <= cutoff) ? Exactness::exact : Exactness::partial;
  return out;
}

Rational smooth_series_eval(const RamanujanCoefficients& coeffs, std::int64_t a,
                            std::int64_t smooth_prime) {
  if (a < 1) throw std::domain_error("smooth_series_eval: argument must be >= 1");
  if (!is_prime(smooth_prime)) throw std::domain_error("smooth_series_eval: P must be prime");

  std::vector<std::int64_t> primes;
  for (std::int32_t p : default_sieve().primes()) {
    if (p > smooth_prime) break;
    primes.push_back(p);
  }

  if (coeffs.support_bound()) {
    // Finite support: walk the P-smooth integers below the bound.
    const std::int64_t bound = *coeffs.support_bound();
    Rational sum(0);
    std::vector<std::pair<std::int64_t, std::size_t>> stack{{1, 0}};
    while (!stack.empty()) {
      auto [q, next] = stack.back();
      stack.pop_back();
      if (next == 0) {
        const Rational g = coeffs.at(q);
        if (g != 0) sum += g * c_kluyver(q, a);
      }
      for (std::size_t i = next; i < primes.size(); ++i) {
        const std::int64_t p = primes[i];
        const int vmax = valuation(a, p) + 1;
        std::int64_t qq = q;
        for (int v = 1; v <= vmax; ++v) {
          if (qq > bound / p) break;
          qq *= p;
          const Rational g = coeffs.at(qq);
          if (g != 0) sum += g * c_kluyver(qq, a);
          stack.push_back({qq, i + 1});
        }
      }
    }
    return sum;
  }

  if (!coeffs.is_multiplicative())
    throw std::domain_error("smooth_series_eval: symbolic coefficients must be multiplicative");
  // G and c_.(a) are multiplicative in q, so the smooth sum over
  // q = prod p^{v}, v <= v_p(a)+1, splits into local factors.
  Rational product(1);
  for (std::int64_t p : primes) {
    Rational local(1);
    std::int64_t pe = 1;
    const int vmax = valuation(a, p) + 1;
    for (int v = 1; v <= vmax; ++v) {
      pe *= p;
      local += coeffs.at(pe) * c_kluyver(pe, a);
    }
    product *= local;
  }
  return product;
}

namespace {

template <class T>
bool values_match(const T& x, const T& y) {
  if constexpr (std::is_same_v<T, double>)
    return nearly_equal(x, y);
  else
    return x == y;
}

template <class T>
bool is_ipp_impl(const Window<T>& f) {
  const std::int64_t upper = f.upper();
  const std::vector<std::int64_t> kernels = kappa_table(upper);
  bool by_kernel = true;
  for (std::int64_t a = 1; a <= upper && by_kernel; ++a)
    by_kernel = values_match(f.at(a), f.at(kernels[static_cast<std::size_t>(a - 1)]));

  const Window<T> fprime = eratosthenes_transform(f, upper);
  const std::vector<int> mu = moebius_table(upper);
  bool by_transform = true;
  for (std::int64_t d = 1; d <= upper && by_transform; ++d)
    if (mu[static_cast<std::size_t>(d - 1)] == 0) by_transform = values_match(fprime.at(d), T{});

  if (by_kernel != by_transform)
    throw IdentityViolation("is_ipp: kernel route and transform route disagree");
  return by_kernel;
}

template <class T>
Window<T> ippify_impl(const Window<T>& f) {
  const std::int64_t upper = f.upper();
  const std::vector<std::int64_t> kernels = kappa_table(upper);
  Window<T> by_kernel(upper);
  for (std::int64_t a = 1; a <= upper; ++a)
    by_kernel.set(a, f.at(kernels[static_cast<std::size_t>(a - 1)]));

  Window<T> fprime = eratosthenes_transform(f, upper);
  const std::vector<int> mu = moebius_table(upper);
  for (std::int64_t d = 1; d <= upper; ++d)
    if (mu[static_cast<std::size_t>(d - 1)] == 0) fprime.set(d, T{});
  const Window<T> by_transform = divisor_sum(fprime, upper);

  for (std::int64_t a = 1; a <= upper; ++a)
    if (!values_match(by_kernel.at(a), by_transform.at(a)))
      throw IdentityViolation("ippify: kernel route and (mu^2 . F') * 1 route disagree");
  return by_kernel;
}

}  // namespace

bool is_ipp(const RationalWindow& f) { return is_ipp_impl(f); }
bool is_ipp(const RealWindow& f) { return is_ipp_impl(f); }
RationalWindow ippify(const RationalWindow& f) { return ippify_impl(f); }
RealWindow ippify(const RealWindow& f) { return ippify_impl(f); }

}  // namespace ramarith
