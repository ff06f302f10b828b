#include <stdexcept>

#include "signlab/coeffs.hpp"

namespace signlab::coeffs {

namespace {

struct SparseTerm {
  long exponent;
  int sign;
};

// Euler: prod (1-q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over Z. Terms with
// exponent in (0, limit], ascending.
std::vector<SparseTerm> pentagonal_terms(long limit, long divisor) {
  std::vector<SparseTerm> terms;
  for (long k = 1;; ++k) {
    long g1 = k * (3 * k - 1) / 2 * divisor;
    long g2 = k * (3 * k + 1) / 2 * divisor;
    int sign = (k % 2 != 0) ? -1 : 1;
    if (g1 > limit) break;
    terms.push_back({g1, sign});
    if (g2 <= limit) terms.push_back({g2, sign});
  }
  return terms;
}

template <class T>
bool accumulate(T& dst, const T& src, int sign);

template <>
bool accumulate(__int128& dst, const __int128& src, int sign) {
  if (sign > 0) return !__builtin_add_overflow(dst, src, &dst);
  return !__builtin_sub_overflow(dst, src, &dst);
}

template <>
bool accumulate(Int& dst, const Int& src, int sign) {
  if (sign > 0)
    dst += src;
  else
    dst -= src;
  return true;
}

// In-place multiply of c[0..len) by the sparse series 1 + sum s_g q^g.
template <class T>
bool sparse_multiply(std::vector<T>& c, const std::vector<SparseTerm>& terms) {
  const long len = static_cast<long>(c.size());
  for (long n = len - 1; n > 0; --n) {
    for (const auto& t : terms) {
      if (t.exponent > n) break;
      if (c[n - t.exponent] == 0) continue;
      if (!accumulate(c[n], c[n - t.exponent], t.sign)) return false;
    }
  }
  return true;
}

// In-place divide: the reciprocal-series recurrence against a sparse divisor
// with constant term 1.
template <class T>
bool sparse_divide(std::vector<T>& c, const std::vector<SparseTerm>& terms) {
  const long len = static_cast<long>(c.size());
  for (long n = 1; n < len; ++n) {
    for (const auto& t : terms) {
      if (t.exponent > n) break;
      if (c[n - t.exponent] == 0) continue;
      if (!accumulate(c[n], c[n - t.exponent], -t.sign)) return false;
    }
  }
  return true;
}

template <class T>
bool expand_product(const EtaProduct& product, long len, std::vector<T>& c) {
  c.assign(len, T(0));
  c[0] = 1;
  for (const auto& f : product.factors) {
    auto terms = pentagonal_terms(len - 1, f.divisor);
    for (int rep = 0; rep < std::abs(f.exponent); ++rep) {
      bool ok = f.exponent > 0 ? sparse_multiply(c, terms) : sparse_divide(c, terms);
      if (!ok) return false;
    }
  }
  return true;
}

Int to_int(__int128 v) {
  bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  Int out{static_cast<unsigned long>(mag >> 64)};
  out <<= 64;
  out += static_cast<unsigned long>(mag);
  return negative ? Int(-out) : out;
}

}  // namespace

int EtaProduct::weight() const {
  long sum = 0;
  for (const auto& f : factors) sum += f.exponent;
  if (sum <= 0 || sum % 2 != 0)
    throw std::invalid_argument("eta product: exponent sum must be positive and even");
  return static_cast<int>(sum / 2);
}

long EtaProduct::leading_exponent() const {
  long sum = 0;
  for (const auto& f : factors) {
    if (f.divisor < 1) throw std::invalid_argument("eta product: divisor must be positive");
    if (f.exponent == 0) throw std::invalid_argument("eta product: zero exponent");
    sum += f.divisor * f.exponent;
  }
  if (sum <= 0 || sum % 24 != 0)
    throw std::domain_error("eta product: leading exponent sum(m*e)/24 is not a positive integer");
  return sum / 24;
}

std::vector<Int> eta_expand(const EtaProduct& product, long bound) {
  if (bound < 1) throw std::invalid_argument("eta_expand: bound must be >= 1");
  if (product.factors.empty()) throw std::invalid_argument("eta_expand: empty product");
  const long lead = product.leading_exponent();

  std::vector<Int> a(bound + 1, Int(0));
  if (lead > bound) return a;
  const long len = bound - lead + 1;

  // Attempt in 128-bit arithmetic; any overflow restarts in big integers.
  std::vector<__int128> fast;
  if (expand_product(product, len, fast)) {
    for (long i = 0; i < len; ++i) a[lead + i] = to_int(fast[i]);
    return a;
  }
  std::vector<Int> wide;
  expand_product(product, len, wide);
  for (long i = 0; i < len; ++i) a[lead + i] = wide[i];
  return a;
}

}  // namespace signlab::coeffs
