#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cmaps {

// Enumeration results outgrow 64 bits well before n = 20.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_factorial(long n) {
  BigCount r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigCount big_binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigCount r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

/// (n)(n-1)...(n-k+1), the falling factorial.
inline BigCount big_falling(long n, long k) {
  BigCount r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace cmaps
