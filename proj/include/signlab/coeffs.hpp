#ifndef SIGNLAB_COEFFS_HPP
#define SIGNLAB_COEFFS_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "signlab/numeric.hpp"

namespace signlab::coeffs {

// eta(m z)^e factors of an eta product. Divisors must divide the declared
// level and half the exponent sum must equal the declared weight.
struct EtaProduct {
  struct Factor {
    long divisor = 1;
    int exponent = 0;
  };
  std::vector<Factor> factors;

  int weight() const;                    // (1/2) * sum of exponents
  long leading_exponent() const;         // sum(m*e)/24; throws if not a positive integer
};

// Long Weierstrass coefficients y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurve {
  long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  Int discriminant() const;
  bool good_reduction(long p) const;
};

// Coefficients read from a fixture file rather than computed.
struct FixtureSource {
  std::string path;
};

struct FormSpec {
  long level = 1;
  int weight = 2;
  std::string label;
  std::variant<EtaProduct, EllipticCurve, FixtureSource> generator;
  // a_p at primes dividing the level; supplied externally (the point counter
  // refuses bad primes).
  std::map<long, Int> bad_ap;

  void validate() const;  // throws std::invalid_argument
};

// Exact coefficient table a(1..B) with the normalized values
// lambda(n) = a(n)/n^{(k-1)/2} alongside. Linear combinations produce
// real-valued tables where a(n) is carried in doubles and sign queries use a
// relative zero band.
class CoeffTable {
 public:
  static CoeffTable integral(FormSpec spec, std::vector<Int> a, bool eigenform);
  static CoeffTable real_valued(FormSpec spec, std::vector<double> a, double zero_tol);

  const FormSpec& spec() const { return spec_; }
  long bound() const { return bound_; }
  bool is_integral() const { return integral_; }
  bool is_eigenform() const { return eigenform_; }
  double zero_tolerance() const { return zero_tol_; }

  const Int& a(long n) const;      // integral tables only
  double coeff(long n) const;      // either kind, as double
  double lambda(long n) const;
  // -1, 0, +1; exact for integral tables, zero-banded for real ones.
  int sign_at(long n) const;

  bool good_prime(long p) const { return spec_.level % p != 0; }

 private:
  CoeffTable() = default;
  void check_bound(long n) const;

  FormSpec spec_;
  long bound_ = 0;
  bool integral_ = true;
  bool eigenform_ = false;
  double zero_tol_ = 0.0;
  std::vector<Int> a_;          // index 1..bound when integral
  std::vector<double> areal_;   // index 1..bound when real
  std::vector<double> lambda_;  // index 1..bound
};

struct LinearCombination {
  std::vector<const CoeffTable*> basis;  // eigenforms sharing (level, weight, bound)
  std::vector<double> coeffs;

  void validate() const;
};

// q-expansion coefficients a(1..bound) of prod eta(m z)^e, via Euler's
// pentagonal sparse series; negative exponents by the reciprocal-series
// division recurrence.
std::vector<Int> eta_expand(const EtaProduct& product, long bound);

// a_p = p + 1 - #E(F_p) by point counting with a residue table, O(p) per prime.
// Throws on bad reduction.
Int ec_ap(const EllipticCurve& curve, long p);

// good_ap must cover every good prime <= bound, bad_ap every level prime
// <= bound. Fills prime powers by the Hecke recurrence and composites by
// multiplicativity.
CoeffTable hecke_extend(const FormSpec& spec, const std::map<long, Int>& bad_ap,
                        const std::map<long, Int>& good_ap, long bound);

// Kronecker symbol (delta / n), completely multiplicative in n.
int kronecker(long delta, long n);
bool is_fundamental_discriminant(long delta);

// Coefficients a(n) * (delta/n); delta must be a fundamental discriminant or 1.
CoeffTable twist(const CoeffTable& table, long delta);

// g(z) = f(z) + f(pz): a_g(n) = a_f(n) + a_f(n/p). Result is flagged
// non-eigenform and lives at level p*M.
CoeffTable oldform_shift(const CoeffTable& table, long p);

// Real-valued table sum u_i * a_i(n) over a shared eigenbasis.
CoeffTable linear_combo(const LinearCombination& combo);

// Coefficient cache: '#' header lines (label/level/weight/bound, optional
// sha256 over the row bytes), then "n,a_n" rows sorted by n.
void write_table_csv(const CoeffTable& table, const std::filesystem::path& path,
                     bool with_checksum = true);
CoeffTable read_table_csv(const std::filesystem::path& path);

}  // namespace signlab::coeffs

#endif
