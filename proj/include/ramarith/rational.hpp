#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace ramarith {

// Exact rational scalar used by every identity-carrying code path.
// Double-precision variants exist only for log-weighted functions and
// character sums, which have no exact representation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& x) { return x.get_d(); }

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Marks whether a transform value is the full (finite) sum or a truncation
// of a series whose tail is unknown.
enum class Exactness { exact, partial };

template <class T>
struct Evaluated {
  T value{};
  Exactness exactness = Exactness::exact;
};

inline const char* exactness_label(Exactness e) {
  return e == Exactness::exact ? "exact" : "partial";
}

}  // namespace ramarith
