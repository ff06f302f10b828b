#include "signlab/primes.hpp"

#include <stdexcept>

namespace signlab {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (long m = p * p; m <= n; m += p) composite[m] = true;
  }
  return out;
}

std::vector<int32_t> smallest_prime_factor(long n) {
  if (n > INT32_MAX) throw std::length_error("smallest_prime_factor: bound too large");
  std::vector<int32_t> spf(n + 1, 0);
  for (long p = 2; p <= n; ++p) {
    if (spf[p] != 0) continue;
    for (long m = p; m <= n; m += p)
      if (spf[m] == 0) spf[m] = static_cast<int32_t>(p);
  }
  return spf;
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace signlab
