#include "signlab/numeric.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace signlab {

const BigFloat& big_pi() {
  static const BigFloat pi = acos(BigFloat(-1));
  return pi;
}

BigFloat frac1(const BigFloat& x) {
  BigFloat f = x - floor(x);
  if (f < 0) f += 1;
  if (f >= 1) f -= 1;
  return f;
}

double frac1(double x) {
  double f = x - std::floor(x);
  if (f < 0) f += 1.0;
  if (f >= 1.0) f -= 1.0;
  return f;
}

double torus_distance(double x) {
  double f = frac1(x);
  return std::min(f, 1.0 - f);
}

BigFloat torus_distance(const BigFloat& x) {
  BigFloat f = frac1(x);
  BigFloat g = 1 - f;
  return f < g ? f : g;
}

double deligne_denominator(long p, int weight) {
  return 2.0 * std::pow(static_cast<double>(p), (weight - 1) / 2.0);
}

BigFloat deligne_denominator_precise(long p, int weight) {
  return 2 * pow(sqrt(BigFloat(p)), weight - 1);
}

Int round_to_int(const BigFloat& x) {
  BigFloat r = x < 0 ? x - BigFloat(0.5) : x + BigFloat(0.5);
  Int out;
  mpfr_get_z(out.get_mpz_t(), r.backend().data(), MPFR_RNDZ);
  return out;
}

BigFloat to_bigfloat(const Int& v) {
  BigFloat out;
  mpfr_set_z(out.backend().data(), v.get_mpz_t(), MPFR_RNDN);
  return out;
}

void parallel_for(long n, unsigned threads, const std::function<void(long)>& fn) {
  if (n <= 0) return;
  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  if (workers <= 1 || n < 64) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        long i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace signlab
