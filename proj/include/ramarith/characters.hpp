#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ramarith {

// One Dirichlet character modulo m. Values are stored exactly as exponents k
// of a primitive e-th root of unity (value = e^{2 pi i k / e}); the marker -1
// stands for the zero value at residues not coprime to m. Conversion to
// complex doubles happens only when a sum is actually evaluated.
class DirichletCharacter {
 public:
  DirichletCharacter(std::int64_t modulus, std::int64_t root_order,
                     std::vector<std::int64_t> exponents, bool principal);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t root_order() const { return root_order_; }
  bool is_principal() const { return principal_; }

  // Exponent at n (reduced mod m); -1 when the character vanishes there.
  std::int64_t exponent_at(std::int64_t n) const;
  std::complex<double> value(std::int64_t n) const;
  DirichletCharacter conjugate() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.root_order_ == b.root_order_ &&
           a.exponents_ == b.exponents_;
  }

 private:
  std::int64_t modulus_;
  std::int64_t root_order_;
  std::vector<std::int64_t> exponents_;  // index r in [0, m)
  bool principal_;
};

// All phi(m) characters modulo m, built from the cyclic decomposition of the
// unit group (primitive roots for odd prime powers, {-1, 5} for 2^k, k >= 3).
// The group is closed under conjugation and contains exactly one principal
// character.
std::vector<DirichletCharacter> character_group(std::int64_t m);

// (1/phi(m)) sum_chi conj(chi(a)) chi(n), real part; detects n = a (mod m)
// for reduced residues a only. gcd(a, m) > 1 is a domain error.
double detect_residue_multiplicative(std::int64_t a, std::int64_t m, std::int64_t n);

// (1/q) sum_{j<=q} e^{2 pi i j n / q}, real part; detects q | n.
double detect_residue_additive(std::int64_t q, std::int64_t n);

// (1/phi(m)) sum_{n mod m} chi(n), real part; 1 iff chi is principal.
double principal_detector(const DirichletCharacter& chi);

}  // namespace ramarith
