#include <stdexcept>

#include "signlab/coeffs.hpp"
#include "signlab/primes.hpp"

namespace signlab::coeffs {

namespace {

inline long addmod(long a, long b, long p) {
  long s = a + b;
  return s >= p ? s - p : s;
}

long to_residue(const Int& v, long p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

Int EllipticCurve::discriminant() const {
  const Int b2 = Int(a1) * a1 + 4 * Int(a2);
  const Int b4 = 2 * Int(a4) + Int(a1) * a3;
  const Int b6 = Int(a3) * a3 + 4 * Int(a6);
  const Int b8 = Int(a1) * a1 * a6 + 4 * Int(a2) * a6 - Int(a1) * a3 * a4 +
                 Int(a2) * a3 * a3 - Int(a4) * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool EllipticCurve::good_reduction(long p) const {
  return discriminant() % p != 0;
}

Int ec_ap(const EllipticCurve& curve, long p) {
  if (!is_prime(p)) throw std::invalid_argument("ec_ap: p must be prime");
  if (!curve.good_reduction(p))
    throw std::domain_error("ec_ap: bad reduction at p; supply a_p externally");

  if (p == 2) {
    long count = 1;  // point at infinity
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y) {
        long lhs = y * y + curve.a1 * x * y + curve.a3 * y;
        long rhs = x * x * x + curve.a2 * x * x + curve.a4 * x + curve.a6;
        if (((lhs - rhs) % 2 + 2) % 2 == 0) ++count;
      }
    return Int(2 + 1 - count);
  }

  // Complete the square: u^2 = 4x^3 + b2 x^2 + 2b4 x + b6 with u = 2y+a1x+a3,
  // so #affine = sum_x (1 + chi(rhs(x))) and a_p = -sum_x chi(rhs(x)).
  std::vector<int8_t> chi(p, -1);
  chi[0] = 0;
  for (long t = 1, sq = 0; t <= p / 2; ++t) {
    sq = addmod(sq, (2 * t - 1) % p, p);
    chi[sq] = 1;
  }

  const Int b2 = Int(curve.a1) * curve.a1 + 4 * Int(curve.a2);
  const Int b4 = 2 * Int(curve.a4) + Int(curve.a1) * curve.a3;
  const Int b6 = Int(curve.a3) * curve.a3 + 4 * Int(curve.a6);
  const long c2 = to_residue(b2, p);
  const long c1 = to_residue(2 * b4, p);
  const long c0 = to_residue(b6, p);

  // rhs(x) by finite differences: rhs(0)=c0, D(0)=4+c2+c1, D2(0)=24+2c2, D3=24.
  long f = c0;
  long d1 = (4 + c2 + c1) % p;
  long d2 = (24 + 2 * c2) % p;
  const long d3 = 24 % p;
  long sum = 0;
  for (long x = 0; x < p; ++x) {
    sum += chi[f];
    f = addmod(f, d1, p);
    d1 = addmod(d1, d2, p);
    d2 = addmod(d2, d3, p);
  }

  // Hasse: a_p^2 <= 4p.
  if (sum * sum > 4 * p) throw std::logic_error("ec_ap: Hasse bound violated");
  return Int(-sum);
}

}  // namespace signlab::coeffs
