#ifndef SIGNLAB_PRIMES_HPP
#define SIGNLAB_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace signlab {

std::vector<long> primes_up_to(long n);

// spf[i] = smallest prime factor of i, for 0 <= i <= n (spf[0] = spf[1] = 0).
std::vector<int32_t> smallest_prime_factor(long n);

bool is_prime(long n);

}  // namespace signlab

#endif
