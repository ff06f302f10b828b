#include <stdexcept>

#include "signlab/lll.hpp"

namespace signlab::lattice {

namespace {

using Rat = mpq_class;

Rat dot(const Row& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

struct GramSchmidt {
  std::vector<std::vector<Rat>> star;  // orthogonalized rows
  std::vector<std::vector<Rat>> mu;    // mu[i][j], j < i
  std::vector<Rat> norm;               // |b*_i|^2

  void compute(const Basis& b) {
    size_t n = b.size();
    star.assign(n, {});
    mu.assign(n, std::vector<Rat>(n, 0));
    norm.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      std::vector<Rat> v(b[i].size());
      for (size_t c = 0; c < b[i].size(); ++c) v[c] = Rat(b[i][c]);
      for (size_t j = 0; j < i; ++j) {
        if (norm[j] == 0) throw std::invalid_argument("lll: dependent basis rows");
        mu[i][j] = dot(b[i], star[j]) / norm[j];
        for (size_t c = 0; c < v.size(); ++c) v[c] -= mu[i][j] * star[j][c];
      }
      star[i] = std::move(v);
      norm[i] = 0;
      for (const auto& c : star[i]) norm[i] += c * c;
    }
  }
};

Int nearest_int(const Rat& q) {
  // round half away from zero
  Rat two_q = 2 * q;
  Int num = two_q.get_num(), den = two_q.get_den();
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // floor(2q)
  Int r = (fl + 1);
  mpz_fdiv_q(r.get_mpz_t(), r.get_mpz_t(), Int(2).get_mpz_t());  // floor((floor(2q)+1)/2)
  return r;
}

}  // namespace

void lll_reduce(Basis& basis, long delta_num, long delta_den) {
  if (basis.empty()) return;
  const size_t n = basis.size();
  for (const auto& row : basis)
    if (row.size() != basis[0].size())
      throw std::invalid_argument("lll: ragged basis");

  GramSchmidt gs;
  gs.compute(basis);
  const Rat delta(delta_num, delta_den);

  size_t k = 1;
  long iterations = 0;
  while (k < n) {
    if (++iterations > 1000000) throw std::runtime_error("lll: iteration limit exceeded");
    // size-reduce b_k against b_{k-1}, ..., b_0
    for (size_t j = k; j-- > 0;) {
      Int q = nearest_int(gs.mu[k][j]);
      if (q != 0) {
        for (size_t c = 0; c < basis[k].size(); ++c) basis[k][c] -= q * basis[j][c];
        gs.compute(basis);
      }
    }
    // Lovasz condition
    Rat lhs = gs.norm[k];
    Rat rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      gs.compute(basis);
      k = k > 1 ? k - 1 : 1;
    }
  }
  (void)dot_int;
}

}  // namespace signlab::lll
