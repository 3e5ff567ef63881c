#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdgl {

// Exact rational scalar. All arithmetic in the library is exact; there is no
// floating-point mode. GMP canonicalizes results of arithmetic, so values are
// always in lowest terms with positive denominator.
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
inline Scalar parse_rational(const std::string& s) {
  Scalar q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string rational_str(const Scalar& q) { return q.get_str(); }

inline Scalar factorial(unsigned n) {
  Scalar r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= (long)i;
  return r;
}

inline long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (long)(n - i) / (long)(i + 1);
  return r;
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace cdgl
