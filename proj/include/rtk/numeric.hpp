#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace rtk {

// All dimension/multiplicity arithmetic is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  return num / den;  // callers guarantee divisibility
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int int_pow(Int base, std::int64_t e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace rtk
