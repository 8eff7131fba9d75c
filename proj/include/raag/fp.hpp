#pragma once

#include <stdexcept>

namespace raag {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Prime-power parameter q = p^f. Everything downstream assumes f >= 2
// whenever p = 2, so that q - 1 and q(q-1)/2 stay divisible by p where needed.
struct Prime {
  int p = 3;
  int f = 1;
  long q = 3;

  static Prime make(int p, int f) {
    if (!is_prime(p) || p > 251)
      throw std::invalid_argument("p must be a prime <= 251");
    if (f < 1) throw std::invalid_argument("f must be >= 1");
    if (p == 2 && f < 2)
      throw std::invalid_argument("p = 2 requires f >= 2");
    long q = 1;
    for (int i = 0; i < f; ++i) {
      q *= p;
      if (q > (1L << 30)) throw std::invalid_argument("q = p^f too large");
    }
    return Prime{p, f, q};
  }
};

inline int mod_norm(long a, int p) {
  long r = a % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

inline int mod_pow(int base, long e, int p) {
  long r = 1, b = mod_norm(base, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

inline int mod_inv(int a, int p) {
  a = mod_norm(a, p);
  if (a == 0) throw std::invalid_argument("mod_inv of zero");
  return mod_pow(a, p - 2, p);
}

}  // namespace raag
