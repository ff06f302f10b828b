#ifndef SIGNLAB_SATAKE_HPP
#define SIGNLAB_SATAKE_HPP

#include <utility>
#include <vector>

#include "signlab/coeffs.hpp"
#include "signlab/numeric.hpp"

namespace signlab::satake {

// theta in [0, 1/2] with a_p = 2 p^{(k-1)/2} cos(2 pi theta). Throws if the
// Deligne bound a_p^2 <= 4 p^{k-1} fails (checked exactly).
double angle(const Int& a_p, long p, int weight);
BigFloat angle_precise(const Int& a_p, long p, int weight);

// Satake angles of the good primes p <= x of a coefficient table.
class AngleTable {
 public:
  static AngleTable from_table(const coeffs::CoeffTable& table, long x);

  const coeffs::FormSpec& spec() const { return spec_; }
  const std::vector<std::pair<long, double>>& entries() const { return entries_; }
  double theta(long p) const;  // throws if p is absent

 private:
  coeffs::FormSpec spec_;
  std::vector<std::pair<long, double>> entries_;  // (p, theta), ascending p
};

struct Box {
  double u_lo = 0, u_hi = 0.5, v_lo = 0, v_hi = 0.5;
  void validate() const;
};

// Joint Sato-Tate density (4 sin(2 pi u) sin(2 pi v))^2 on [0,1/2]^2.
double joint_density(double u, double v);
double marginal_density(double u);  // 4 sin^2(2 pi u)
double marginal_cdf(double u);      // 2u - sin(4 pi u)/(2 pi)
double box_probability(const Box& box);

struct EquidistributionReport {
  int grid_n = 0;
  long n_primes = 0;
  // Row-major grid_n x grid_n cells over [0,1/2]^2.
  std::vector<long> counts;
  std::vector<double> empirical;
  std::vector<double> theoretical;
  // Sup over grid-aligned boxes of |empirical - theoretical|.
  double discrepancy = 0;
  // Kolmogorov-Smirnov distances of each marginal to the Sato-Tate CDF.
  double marginal_sup_f = 0;
  double marginal_sup_g = 0;
};

EquidistributionReport equidistribution_report(const AngleTable& phi, const AngleTable& psi,
                                               long x, int grid_n);

struct SignDensity {
  long n_primes = 0;
  long positive = 0, negative = 0, zero = 0;
  double positive_fraction() const { return n_primes ? double(positive) / n_primes : 0; }
  double negative_fraction() const { return n_primes ? double(negative) / n_primes : 0; }
  double zero_fraction() const { return n_primes ? double(zero) / n_primes : 0; }
};

// Sign classes of a_f(p) a_g(p) over primes p <= x coprime to both levels.
SignDensity sign_density_primes(const coeffs::CoeffTable& f, const coeffs::CoeffTable& g, long x);

}  // namespace signlab::satake

#endif
