#include <cmath>
#include <numeric>
#include <stdexcept>

#include "signlab/coeffs.hpp"
#include "signlab/primes.hpp"

namespace signlab::coeffs {

int kronecker(long a, long n) {
  if (n < 1) throw std::invalid_argument("kronecker: n must be positive");
  int result = 1;
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int twos = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++twos;
    }
    long am8 = ((a % 8) + 8) % 8;
    if (twos % 2 == 1 && (am8 == 3 || am8 == 5)) result = -result;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(long delta) {
  if (delta == 1) return true;  // the trivial character is admitted throughout
  auto squarefree = [](long v) {
    v = std::labs(v);
    for (long d = 2; d * d <= v; ++d)
      if (v % (d * d) == 0) return false;
    return true;
  };
  long mod4 = ((delta % 4) + 4) % 4;
  if (mod4 == 1) return delta != 1 && squarefree(delta);
  if (mod4 == 0) {
    long m = delta / 4;
    long m4 = ((m % 4) + 4) % 4;
    return (m4 == 2 || m4 == 3) && squarefree(m);
  }
  return false;
}

CoeffTable hecke_extend(const FormSpec& spec, const std::map<long, Int>& bad_ap,
                        const std::map<long, Int>& good_ap, long bound) {
  spec.validate();
  if (bound < 1) throw std::invalid_argument("hecke_extend: bound must be >= 1");

  std::vector<Int> a(bound + 1, Int(0));
  a[1] = 1;

  for (long p : primes_up_to(bound)) {
    const bool bad = spec.level % p == 0;
    const auto& src = bad ? bad_ap : good_ap;
    auto it = src.find(p);
    if (it == src.end())
      throw std::invalid_argument("hecke_extend: missing a_p for prime " + std::to_string(p));
    const Int& ap = it->second;

    if (bad) {
      // U_p eigenvalue at level primes: a(p^r) = a(p)^r.
      Int power = 1;
      for (Int q = p; q <= bound; q *= p) {
        power *= ap;
        a[q.get_si()] = power;
      }
    } else {
      // a(p^{r+1}) = a(p) a(p^r) - p^{k-1} a(p^{r-1}).
      Int pk1;
      mpz_ui_pow_ui(pk1.get_mpz_t(), p, spec.weight - 1);
      Int prev = 1, cur = ap;
      for (Int q = p; q <= bound; q *= p) {
        a[q.get_si()] = cur;
        Int next = ap * cur - pk1 * prev;
        prev = cur;
        cur = next;
      }
    }
  }

  // Multiplicativity: split off the smallest-prime-power part.
  auto spf = smallest_prime_factor(bound);
  std::vector<int64_t> ppart(bound + 1, 0);
  for (long n = 2; n <= bound; ++n) {
    long p = spf[n];
    long m = n / p;
    ppart[n] = (m % p == 0) ? ppart[m] * p : p;
    long rest = n / ppart[n];
    if (rest > 1) a[n] = a[ppart[n]] * a[rest];
  }

  return CoeffTable::integral(spec, std::move(a), /*eigenform=*/true);
}

CoeffTable twist(const CoeffTable& table, long delta) {
  if (!is_fundamental_discriminant(delta))
    throw std::invalid_argument("twist: delta must be a fundamental discriminant or 1");

  // (delta/.) is periodic mod |delta|.
  const long period = std::labs(delta);
  std::vector<int> chi(period);
  for (long r = 0; r < period; ++r) chi[r] = kronecker(delta, r == 0 ? period : r);
  auto chi_at = [&](long n) { return chi[n % period]; };

  FormSpec spec = table.spec();
  spec.label = table.spec().label + (delta == 1 ? "" : ".tw" + std::to_string(delta));
  spec.level = std::lcm(table.spec().level, delta * delta);

  if (table.is_integral()) {
    std::vector<Int> a(table.bound() + 1, Int(0));
    for (long n = 1; n <= table.bound(); ++n) a[n] = table.a(n) * chi_at(n);
    return CoeffTable::integral(std::move(spec), std::move(a), table.is_eigenform());
  }
  std::vector<double> a(table.bound() + 1, 0.0);
  for (long n = 1; n <= table.bound(); ++n) a[n] = table.coeff(n) * chi_at(n);
  return CoeffTable::real_valued(std::move(spec), std::move(a), table.zero_tolerance());
}

CoeffTable oldform_shift(const CoeffTable& table, long p) {
  if (!is_prime(p)) throw std::invalid_argument("oldform_shift: p must be prime");

  FormSpec spec = table.spec();
  spec.label = table.spec().label + ".old" + std::to_string(p);
  spec.level = table.spec().level * p;

  if (table.is_integral()) {
    std::vector<Int> a(table.bound() + 1, Int(0));
    for (long n = 1; n <= table.bound(); ++n) {
      a[n] = table.a(n);
      if (n % p == 0) a[n] += table.a(n / p);
    }
    return CoeffTable::integral(std::move(spec), std::move(a), /*eigenform=*/false);
  }
  std::vector<double> a(table.bound() + 1, 0.0);
  for (long n = 1; n <= table.bound(); ++n) {
    a[n] = table.coeff(n);
    if (n % p == 0) a[n] += table.coeff(n / p);
  }
  return CoeffTable::real_valued(std::move(spec), std::move(a), table.zero_tolerance());
}

void LinearCombination::validate() const {
  if (basis.empty() || basis.size() != coeffs.size())
    throw std::invalid_argument("linear combination: basis/coefficient size mismatch");
  double norm = 0;
  for (double u : coeffs) norm += std::fabs(u);
  if (norm == 0) throw std::invalid_argument("linear combination: zero coefficient vector");
  const auto& first = *basis.front();
  for (const auto* t : basis) {
    if (t->spec().level != first.spec().level || t->spec().weight != first.spec().weight ||
        t->bound() != first.bound())
      throw std::invalid_argument("linear combination: basis mismatch in (level, weight, bound)");
    if (!t->is_eigenform())
      throw std::invalid_argument("linear combination: basis tables must be eigenforms");
  }
}

CoeffTable linear_combo(const LinearCombination& combo) {
  combo.validate();
  const auto& first = *combo.basis.front();
  const long bound = first.bound();

  double unorm = 0;
  std::string label = "lc(";
  for (size_t i = 0; i < combo.basis.size(); ++i) {
    unorm += std::fabs(combo.coeffs[i]);
    if (i) label += "+";
    label += std::to_string(combo.coeffs[i]) + "*" + combo.basis[i]->spec().label;
  }
  label += ")";

  std::vector<double> a(bound + 1, 0.0);
  for (size_t i = 0; i < combo.basis.size(); ++i) {
    const auto& t = *combo.basis[i];
    const double u = combo.coeffs[i];
    if (u == 0) continue;
    for (long n = 1; n <= bound; ++n) a[n] += u * t.coeff(n);
  }

  FormSpec spec = first.spec();
  spec.label = label;
  return CoeffTable::real_valued(std::move(spec), std::move(a), 1e-9 * unorm);
}

}  // namespace signlab::coeffs
