#include "ramarith/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ramarith/arith_core.hpp"

namespace ramarith {

namespace {

std::int64_t reduce_mod(std::int64_t n, std::int64_t m) {
  std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base = reduce_mod(base, mod);
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  std::int64_t x = reduce_mod(a, m);
  std::int64_t order = 1;
  while (x != 1 % m) {
    x = x * reduce_mod(a, m) % m;
    ++order;
  }
  return order;
}

std::int64_t primitive_root(std::int64_t p, int k) {
  // Exhaustive order test mod p; a root with g^(p-1) != 1 (mod p^2) stays
  // primitive for every higher power of the odd prime p.
  std::int64_t g = 1;
  for (std::int64_t cand = 2; cand < p; ++cand) {
    if (multiplicative_order(cand, p) == p - 1) {
      g = cand;
      break;
    }
  }
  if (k == 1) return g;
  if (pow_mod(g, p - 1, p * p) == 1) g += p;
  return g;
}

// One cyclic factor of the unit group mod a prime power: generator and order,
// plus a discrete-log table over that prime power.
struct CyclicFactor {
  std::int64_t prime_power = 1;
  std::int64_t order = 1;
  std::vector<std::int64_t> dlog;  // index r mod prime_power; -1 off units
};

CyclicFactor make_factor(std::int64_t pp, std::int64_t gen, std::int64_t order) {
  CyclicFactor f;
  f.prime_power = pp;
  f.order = order;
  f.dlog.assign(static_cast<std::size_t>(pp), -1);
  std::int64_t x = 1 % pp;
  for (std::int64_t j = 0; j < order; ++j) {
    if (f.dlog[static_cast<std::size_t>(x)] == -1) f.dlog[static_cast<std::size_t>(x)] = j;
    x = x * (gen % pp) % pp;
  }
  return f;
}

std::vector<CyclicFactor> unit_group_factors(std::int64_t m) {
  std::vector<CyclicFactor> factors;
  for (const PrimeFactor& pf : factorize(m).factors) {
    std::int64_t pp = 1;
    for (int e = 0; e < pf.exponent; ++e) pp *= pf.prime;
    if (pf.prime == 2) {
      if (pf.exponent == 1) continue;  // trivial unit group
      if (pf.exponent == 2) {
        factors.push_back(make_factor(4, 3, 2));
        continue;
      }
      // (Z/2^k)^* = <-1> x <5>
      factors.push_back(make_factor(pp, pp - 1, 2));
      factors.push_back(make_factor(pp, 5, pp / 4));
      continue;
    }
    const std::int64_t order = euler_phi(pp);
    const std::int64_t g = primitive_root(pf.prime, pf.exponent);
    factors.push_back(make_factor(pp, g, order));
  }
  return factors;
}

// Combined dlog of residue r across the factors; the 2^k (k>=3) case needs
// the pair (sign, power-of-5) recovered jointly.
bool factor_dlogs(const std::vector<CyclicFactor>& factors, std::int64_t r,
                  std::vector<std::int64_t>& out) {
  out.clear();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const CyclicFactor& f = factors[i];
    const std::int64_t rr = r % f.prime_power;
    // Two factors sharing one prime power (the 2^k case): resolve the pair.
    if (i + 1 < factors.size() && factors[i + 1].prime_power == f.prime_power) {
      const CyclicFactor& g = factors[i + 1];
      const std::int64_t pp = f.prime_power;
      bool found = false;
      for (std::int64_t s = 0; s < f.order && !found; ++s) {
        // candidate residue (-1)^s 5^j: solve for j via g.dlog of r * (-1)^{-s}
        const std::int64_t sign = s == 0 ? 1 : pp - 1;
        std::int64_t target = rr * sign % pp;  // (-1)^{-s} == (-1)^s
        const std::int64_t j = g.dlog[static_cast<std::size_t>(target)];
        if (j >= 0) {
          out.push_back(s);
          out.push_back(j);
          found = true;
        }
      }
      if (!found) return false;
      ++i;
      continue;
    }
    const std::int64_t j = f.dlog[static_cast<std::size_t>(rr)];
    if (j < 0) return false;
    out.push_back(j);
  }
  return true;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::int64_t root_order,
                                       std::vector<std::int64_t> exponents, bool principal)
    : modulus_(modulus),
      root_order_(root_order),
      exponents_(std::move(exponents)),
      principal_(principal) {
  if (modulus_ < 1) throw std::domain_error("DirichletCharacter: modulus must be >= 1");
  if (exponents_.size() != static_cast<std::size_t>(modulus_))
    throw std::invalid_argument("DirichletCharacter: exponent table size mismatch");
}

std::int64_t DirichletCharacter::exponent_at(std::int64_t n) const {
  return exponents_[static_cast<std::size_t>(reduce_mod(n, modulus_))];
}

std::complex<double> DirichletCharacter::value(std::int64_t n) const {
  const std::int64_t k = exponent_at(n);
  if (k < 0) return {0.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(root_order_);
  return {std::cos(angle), std::sin(angle)};
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<std::int64_t> exps(exponents_);
  for (std::int64_t& k : exps)
    if (k > 0) k = root_order_ - k;
  return DirichletCharacter(modulus_, root_order_, std::move(exps), principal_);
}

std::vector<DirichletCharacter> character_group(std::int64_t m) {
  if (m < 1) throw std::domain_error("character_group: modulus must be >= 1");
  const std::vector<CyclicFactor> raw = unit_group_factors(m);

  std::vector<std::int64_t> orders;
  for (const CyclicFactor& f : raw) orders.push_back(f.order);
  std::int64_t e = 1;
  for (std::int64_t d : orders) e = lcm64(e, d);

  // Discrete logs per residue, -1 rows off the unit group.
  std::vector<std::vector<std::int64_t>> dlogs(static_cast<std::size_t>(m));
  std::vector<bool> unit(static_cast<std::size_t>(m), false);
  for (std::int64_t r = 0; r < m; ++r) {
    if (std::gcd(r, m) != 1) continue;  // gcd(0, 1) == 1 covers m == 1
    std::vector<std::int64_t> row;
    if (!factor_dlogs(raw, r, row)) continue;
    dlogs[static_cast<std::size_t>(r)] = std::move(row);
    unit[static_cast<std::size_t>(r)] = true;
  }

  std::vector<DirichletCharacter> group;
  std::vector<std::int64_t> tuple(orders.size(), 0);
  while (true) {
    std::vector<std::int64_t> exps(static_cast<std::size_t>(m), -1);
    bool principal = true;
    for (std::int64_t t : tuple) principal = principal && t == 0;
    for (std::int64_t r = 0; r < m; ++r) {
      if (!unit[static_cast<std::size_t>(r)]) continue;
      std::int64_t k = 0;
      const std::vector<std::int64_t>& row = dlogs[static_cast<std::size_t>(r)];
      for (std::size_t i = 0; i < tuple.size(); ++i)
        k = (k + tuple[i] * row[i] % e * (e / orders[i])) % e;
      exps[static_cast<std::size_t>(r)] = k;
    }
    group.emplace_back(m, e, std::move(exps), principal);

    // next tuple (mixed radix)
    std::size_t i = 0;
    while (i < tuple.size() && ++tuple[i] == orders[i]) tuple[i++] = 0;
    if (i == tuple.size()) break;
  }
  return group;
}

double detect_residue_multiplicative(std::int64_t a, std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::domain_error("detect_residue_multiplicative: modulus must be >= 1");
  if (std::gcd(reduce_mod(a, m), m) != 1)
    throw std::domain_error("detect_residue_multiplicative: a must be coprime to m");
  std::complex<double> sum{0.0, 0.0};
  for (const DirichletCharacter& chi : character_group(m))
    sum += std::conj(chi.value(a)) * chi.value(n);
  return sum.real() / static_cast<double>(euler_phi(m));
}

double detect_residue_additive(std::int64_t q, std::int64_t n) {
  if (q < 1) throw std::domain_error("detect_residue_additive: q must be >= 1");
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t j = 1; j <= q; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) *
                         static_cast<double>(reduce_mod(n, q)) / static_cast<double>(q);
    sum += std::complex<double>{std::cos(angle), std::sin(angle)};
  }
  return sum.real() / static_cast<double>(q);
}

double principal_detector(const DirichletCharacter& chi) {
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t n = 0; n < chi.modulus(); ++n) sum += chi.value(n);
  return sum.real() / static_cast<double>(euler_phi(chi.modulus()));
}

}  // namespace ramarith
