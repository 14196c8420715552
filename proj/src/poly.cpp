#include "coxeter/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cox {

namespace {

// Rows/columns touched by a monomial, as a pair of n-bit masks; ~0 marks a
// repeated row or column (monomial can be discarded).
inline bool rowcol(std::uint64_t mask, int n, std::uint32_t* rows,
                   std::uint32_t* cols) {
  std::uint32_t r = 0, c = 0;
  while (mask) {
    int b = std::countr_zero(mask);
    mask &= mask - 1;
    std::uint32_t rb = 1u << (b / n), cb = 1u << (b % n);
    if ((r & rb) || (c & cb)) return false;
    r |= rb;
    c |= cb;
  }
  *rows = r;
  *cols = c;
  return true;
}

}  // namespace

SparsePolynomial SparsePolynomial::constant(int n, const Rat& c) {
  SparsePolynomial p(n);
  p.add_term(0, c);
  return p;
}

void SparsePolynomial::add_term(std::uint64_t mask, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat SparsePolynomial::coeff(std::uint64_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rat(0) : it->second;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePolynomial SparsePolynomial::mul(const SparsePolynomial& o,
                                       int max_degree) const {
  SparsePolynomial r(n_);
  for (auto& [ma, ca] : terms_) {
    int da = std::popcount(ma);
    for (auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;  // squared variable
      std::uint64_t m = ma | mb;
      if (std::popcount(m) != da + std::popcount(mb)) continue;
      if (std::popcount(m) > max_degree) continue;
      std::uint32_t rows, cols;
      if (!rowcol(m, n_, &rows, &cols)) continue;  // repeated row or column
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

SparsePolynomial SparsePolynomial::det_submatrix(int n,
                                                 const std::vector<int>& I) {
  SparsePolynomial p(n);
  int k = (int)I.size();
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (pos[i] > pos[j]) ++inv;
    std::uint64_t mask = 0;
    for (int i = 0; i < k; ++i) mask |= 1ull << (I[i] * n + I[pos[i]]);
    p.add_term(mask, Rat(inv % 2 ? -1 : 1));
  } while (std::next_permutation(pos.begin(), pos.end()));
  return p;
}

std::uint64_t SparsePolynomial::perm_monomial(int n, const std::vector<int>& w) {
  if ((int)w.size() != n) throw std::invalid_argument("bad permutation length");
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    if (w[i] < 1 || w[i] > n) throw std::invalid_argument("bad permutation");
    mask |= 1ull << (i * n + (w[i] - 1));
  }
  return mask;
}

}  // namespace cox
