#pragma once

#include <cstdint>
#include <vector>

#include "ramarith/rational.hpp"

namespace ramarith {

// Ramanujan sum c_q(n) by three independent routes. Kluyver's divisor sum and
// Hoelder's totient quotient are exact integers; the trigonometric sum over
// the reduced residues is the floating cross-check.
std::int64_t c_kluyver(std::int64_t q, std::int64_t n);
std::int64_t c_holder(std::int64_t q, std::int64_t n);
double c_direct(std::int64_t q, std::int64_t n);

// One period of c_q: entry r holds c_q(r) for r in [0, q).
std::vector<std::int64_t> ramanujan_period(std::int64_t q);

// (1/q) sum_{d|q} c_d(n), asserted to be 0 or 1 and to equal 1_{q|n}.
int divisibility_via_ramanujan(std::int64_t q, std::int64_t n);

// Mean of c_q(n+a) c_l(a) over one exact period lcm(q,l); the summand is
// periodic, so this equals the infinite Cesaro limit. Asserted to equal
// 1_{q=l} * c_l(n).
Rational carmichael_orthogonality(std::int64_t q, std::int64_t ell, std::int64_t n);

}  // namespace ramarith
