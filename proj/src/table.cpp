#include <cmath>
#include <stdexcept>

#include "signlab/coeffs.hpp"

namespace signlab::coeffs {

void FormSpec::validate() const {
  if (level < 1) throw std::invalid_argument("form: level must be >= 1");
  if (weight < 2 || weight % 2 != 0)
    throw std::invalid_argument("form: weight must be even and >= 2");
  if (const auto* eta = std::get_if<EtaProduct>(&generator)) {
    if (eta->weight() != weight)
      throw std::invalid_argument("form: eta product weight does not match declared weight");
    for (const auto& f : eta->factors)
      if (level % f.divisor != 0)
        throw std::invalid_argument("form: eta divisor does not divide the level");
  }
  if (const auto* curve = std::get_if<EllipticCurve>(&generator)) {
    if (weight != 2)
      throw std::invalid_argument("form: elliptic curve generators have weight 2");
    if (curve->discriminant() == 0)
      throw std::invalid_argument("form: singular curve");
  }
}

namespace {

std::vector<double> normalized_values(const std::vector<Int>& a, int weight) {
  std::vector<double> lambda(a.size(), 0.0);
  for (size_t n = 1; n < a.size(); ++n)
    lambda[n] = a[n].get_d() / std::pow(static_cast<double>(n), (weight - 1) / 2.0);
  return lambda;
}

std::vector<double> normalized_values(const std::vector<double>& a, int weight) {
  std::vector<double> lambda(a.size(), 0.0);
  for (size_t n = 1; n < a.size(); ++n)
    lambda[n] = a[n] / std::pow(static_cast<double>(n), (weight - 1) / 2.0);
  return lambda;
}

}  // namespace

CoeffTable CoeffTable::integral(FormSpec spec, std::vector<Int> a, bool eigenform) {
  spec.validate();
  if (a.size() < 2) throw std::invalid_argument("coefficient table: empty");
  if (eigenform && a[1] != 1)
    throw std::invalid_argument("coefficient table: eigenform tables are normalized, a(1)=1");
  CoeffTable t;
  t.spec_ = std::move(spec);
  t.bound_ = static_cast<long>(a.size()) - 1;
  t.integral_ = true;
  t.eigenform_ = eigenform;
  t.lambda_ = normalized_values(a, t.spec_.weight);
  t.a_ = std::move(a);
  return t;
}

CoeffTable CoeffTable::real_valued(FormSpec spec, std::vector<double> a, double zero_tol) {
  spec.validate();
  if (a.size() < 2) throw std::invalid_argument("coefficient table: empty");
  CoeffTable t;
  t.spec_ = std::move(spec);
  t.bound_ = static_cast<long>(a.size()) - 1;
  t.integral_ = false;
  t.eigenform_ = false;
  t.zero_tol_ = zero_tol;
  t.lambda_ = normalized_values(a, t.spec_.weight);
  t.areal_ = std::move(a);
  return t;
}

void CoeffTable::check_bound(long n) const {
  if (n < 1 || n > bound_)
    throw std::out_of_range("coefficient table: index " + std::to_string(n) +
                            " exceeds bound " + std::to_string(bound_));
}

const Int& CoeffTable::a(long n) const {
  check_bound(n);
  if (!integral_) throw std::logic_error("coefficient table: exact values unavailable on real table");
  return a_[n];
}

double CoeffTable::coeff(long n) const {
  check_bound(n);
  return integral_ ? a_[n].get_d() : areal_[n];
}

double CoeffTable::lambda(long n) const {
  check_bound(n);
  return lambda_[n];
}

int CoeffTable::sign_at(long n) const {
  check_bound(n);
  if (integral_) return sgn(a_[n]);
  double v = lambda_[n];
  if (v > zero_tol_) return 1;
  if (v < -zero_tol_) return -1;
  return 0;
}

}  // namespace signlab::coeffs
