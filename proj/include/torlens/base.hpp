#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace torlens {

// All exact arithmetic runs on arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a value the theory forces (an exact division, an asserted
// normal form, a rank identity) fails to hold.  Indicates a bug in this
// library, never bad user input.
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

// Thrown when an exact enumeration would exceed its stated state budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

inline long long to_long_long(const Int& v, const char* what = "value") {
  if (v < (std::numeric_limits<long long>::min)() ||
      v > (std::numeric_limits<long long>::max)()) {
    throw ResourceLimitError(std::string(what) + " does not fit in 64 bits: " +
                             v.str());
  }
  return static_cast<long long>(v);
}

inline std::size_t to_size(const Int& v, const char* what = "value") {
  if (v < 0) throw std::domain_error(std::string(what) + " must be >= 0");
  const long long n = to_long_long(v, what);
  return static_cast<std::size_t>(n);
}

// Deterministic trial division; inputs are desk scale.
inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (Int d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

inline Int pow_int(Int base, long long exp) {
  if (exp < 0) throw std::domain_error("pow_int: negative exponent");
  Int result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

inline Int binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;  // exact: acc is a running binomial coefficient
  }
  return acc;
}

// Nonnegative residue of m modulo 4; the graded tables are 4-periodic.
inline int mod4(long long m) {
  int r = static_cast<int>(m % 4);
  return r < 0 ? r + 4 : r;
}

}  // namespace torlens
