#ifndef SIGNLAB_NUMERIC_HPP
#define SIGNLAB_NUMERIC_HPP

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <functional>

namespace signlab {

// Exact integer type for Fourier coefficients; a(p^r) grows like p^{r(k-1)/2}.
using Int = mpz_class;

// Working precision for identity residuals and phase reduction: 60 decimal
// digits (~200 bits), comfortably above the 96 fractional bits the
// cancellation-sensitive paths need.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>>;

const BigFloat& big_pi();

// x - floor(x), in [0,1).
BigFloat frac1(const BigFloat& x);
double frac1(double x);

// Distance from x to the nearest integer, in [0, 1/2].
double torus_distance(double x);
BigFloat torus_distance(const BigFloat& x);

// 2 * p^{(k-1)/2}, the Deligne normalization denominator.
double deligne_denominator(long p, int weight);
BigFloat deligne_denominator_precise(long p, int weight);

// Round-half-away-from-zero to an exact integer.
Int round_to_int(const BigFloat& x);

BigFloat to_bigfloat(const Int& v);

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). Falls back to the calling thread for small n.
void parallel_for(long n, unsigned threads, const std::function<void(long)>& fn);

}  // namespace signlab

#endif
