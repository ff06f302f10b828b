#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "signlab/primes.hpp"
#include "signlab/satake.hpp"

namespace signlab::satake {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void check_deligne(const Int& a_p, long p, int weight) {
  Int rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), p, weight - 1);
  rhs *= 4;
  if (a_p * a_p > rhs)
    throw std::domain_error("angle: |a_p| exceeds the Deligne bound (corrupted table?)");
}

}  // namespace

double angle(const Int& a_p, long p, int weight) {
  check_deligne(a_p, p, weight);
  double ratio = a_p.get_d() / deligne_denominator(p, weight);
  ratio = std::clamp(ratio, -1.0, 1.0);
  return std::acos(ratio) / kTwoPi;
}

BigFloat angle_precise(const Int& a_p, long p, int weight) {
  check_deligne(a_p, p, weight);
  BigFloat ratio = to_bigfloat(a_p) / deligne_denominator_precise(p, weight);
  if (ratio > 1) ratio = 1;
  if (ratio < -1) ratio = -1;
  return acos(ratio) / (2 * big_pi());
}

AngleTable AngleTable::from_table(const coeffs::CoeffTable& table, long x) {
  if (x > table.bound())
    throw std::out_of_range("angle table: x exceeds the coefficient bound");
  AngleTable out;
  out.spec_ = table.spec();
  for (long p : primes_up_to(x)) {
    if (!table.good_prime(p)) continue;
    out.entries_.emplace_back(p, angle(table.a(p), p, table.spec().weight));
  }
  return out;
}

double AngleTable::theta(long p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const auto& e, long v) { return e.first < v; });
  if (it == entries_.end() || it->first != p)
    throw std::out_of_range("angle table: prime not tabulated");
  return it->second;
}

void Box::validate() const {
  auto ordered = [](double lo, double hi) { return 0 <= lo && lo <= hi && hi <= 0.5; };
  if (!ordered(u_lo, u_hi) || !ordered(v_lo, v_hi))
    throw std::invalid_argument("box: endpoints must satisfy 0 <= lo <= hi <= 1/2");
}

double joint_density(double u, double v) {
  double s = 4 * std::sin(kTwoPi * u) * std::sin(kTwoPi * v);
  return s * s;
}

double marginal_density(double u) {
  double s = std::sin(kTwoPi * u);
  return 4 * s * s;
}

double marginal_cdf(double u) {
  return 2 * u - std::sin(2 * kTwoPi * u) / kTwoPi;
}

double box_probability(const Box& box) {
  box.validate();
  return (marginal_cdf(box.u_hi) - marginal_cdf(box.u_lo)) *
         (marginal_cdf(box.v_hi) - marginal_cdf(box.v_lo));
}

namespace {

int cell_of(double theta, int grid_n) {
  int c = static_cast<int>(theta * 2 * grid_n);
  return std::clamp(c, 0, grid_n - 1);
}

double ks_distance(std::vector<double> thetas) {
  std::sort(thetas.begin(), thetas.end());
  const double n = static_cast<double>(thetas.size());
  double sup = 0;
  for (size_t i = 0; i < thetas.size(); ++i) {
    double cdf = marginal_cdf(thetas[i]);
    sup = std::max(sup, std::max(cdf - i / n, (i + 1) / n - cdf));
  }
  return sup;
}

}  // namespace

EquidistributionReport equidistribution_report(const AngleTable& phi, const AngleTable& psi,
                                               long x, int grid_n) {
  if (grid_n < 1) throw std::invalid_argument("equidistribution: grid_n must be >= 1");

  EquidistributionReport rep;
  rep.grid_n = grid_n;
  rep.counts.assign(static_cast<size_t>(grid_n) * grid_n, 0);

  const long mf = phi.spec().level, mg = psi.spec().level;
  std::vector<double> tf, tg;
  auto it_f = phi.entries().begin();
  auto it_g = psi.entries().begin();
  while (it_f != phi.entries().end() && it_g != psi.entries().end()) {
    if (it_f->first < it_g->first) {
      ++it_f;
      continue;
    }
    if (it_g->first < it_f->first) {
      ++it_g;
      continue;
    }
    long p = it_f->first;
    if (p <= x && mf % p != 0 && mg % p != 0) {
      rep.counts[cell_of(it_f->second, grid_n) * grid_n + cell_of(it_g->second, grid_n)]++;
      tf.push_back(it_f->second);
      tg.push_back(it_g->second);
    }
    ++it_f;
    ++it_g;
  }
  rep.n_primes = static_cast<long>(tf.size());
  if (rep.n_primes == 0) throw std::runtime_error("equidistribution: no common good primes");

  rep.empirical.resize(rep.counts.size());
  rep.theoretical.resize(rep.counts.size());
  std::vector<double> g_lines(grid_n + 1);
  for (int i = 0; i <= grid_n; ++i) g_lines[i] = marginal_cdf(0.5 * i / grid_n);
  for (int i = 0; i < grid_n; ++i)
    for (int j = 0; j < grid_n; ++j) {
      rep.empirical[i * grid_n + j] =
          static_cast<double>(rep.counts[i * grid_n + j]) / rep.n_primes;
      rep.theoretical[i * grid_n + j] =
          (g_lines[i + 1] - g_lines[i]) * (g_lines[j + 1] - g_lines[j]);
    }

  // Discrepancy over every grid-aligned box via 2D prefix sums.
  std::vector<long> pref((grid_n + 1) * (grid_n + 1), 0);
  for (int i = 0; i < grid_n; ++i)
    for (int j = 0; j < grid_n; ++j)
      pref[(i + 1) * (grid_n + 1) + (j + 1)] = rep.counts[i * grid_n + j] +
                                               pref[i * (grid_n + 1) + (j + 1)] +
                                               pref[(i + 1) * (grid_n + 1) + j] -
                                               pref[i * (grid_n + 1) + j];
  double disc = 0;
  for (int i1 = 0; i1 < grid_n; ++i1)
    for (int i2 = i1; i2 < grid_n; ++i2)
      for (int j1 = 0; j1 < grid_n; ++j1)
        for (int j2 = j1; j2 < grid_n; ++j2) {
          long cnt = pref[(i2 + 1) * (grid_n + 1) + (j2 + 1)] -
                     pref[i1 * (grid_n + 1) + (j2 + 1)] -
                     pref[(i2 + 1) * (grid_n + 1) + j1] + pref[i1 * (grid_n + 1) + j1];
          double emp = static_cast<double>(cnt) / rep.n_primes;
          double theo = (g_lines[i2 + 1] - g_lines[i1]) * (g_lines[j2 + 1] - g_lines[j1]);
          disc = std::max(disc, std::fabs(emp - theo));
        }
  rep.discrepancy = disc;
  rep.marginal_sup_f = ks_distance(std::move(tf));
  rep.marginal_sup_g = ks_distance(std::move(tg));
  return rep;
}

SignDensity sign_density_primes(const coeffs::CoeffTable& f, const coeffs::CoeffTable& g, long x) {
  const long bound = std::min({x, f.bound(), g.bound()});
  SignDensity out;
  for (long p : primes_up_to(bound)) {
    if (!f.good_prime(p) || !g.good_prime(p)) continue;
    int s = f.sign_at(p) * g.sign_at(p);
    ++out.n_primes;
    if (s > 0)
      ++out.positive;
    else if (s < 0)
      ++out.negative;
    else
      ++out.zero;
  }
  return out;
}

}  // namespace signlab::satake
