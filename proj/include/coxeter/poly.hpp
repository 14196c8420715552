#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coxeter/rational.hpp"

namespace cox {

// Multivariate polynomial in the n*n variables x_{ij}, restricted to the
// monomials that can still divide a permutation monomial: every variable has
// degree <= 1 and no two variables share a row or a column.  Anything else is
// pruned eagerly during multiplication (it can never contribute to the
// coefficients we extract).  Monomials are bitmasks: bit i*n+j <-> x_{i+1,j+1}.
class SparsePolynomial {
public:
  explicit SparsePolynomial(int n) : n_(n) {}
  static SparsePolynomial constant(int n, const Rat& c);

  int n() const { return n_; }
  const std::map<std::uint64_t, Rat>& terms() const { return terms_; }

  void add_term(std::uint64_t mask, const Rat& c);
  Rat coeff(std::uint64_t mask) const;

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  // Product, dropping monomials of total degree > max_degree.
  SparsePolynomial mul(const SparsePolynomial& o, int max_degree) const;

  // Determinant of the submatrix X_I with rows and columns I (0-based).
  static SparsePolynomial det_submatrix(int n, const std::vector<int>& I);

  // Bitmask of the permutation monomial x_{1w(1)} ... x_{nw(n)} for a
  // permutation given in 1-based one-line form.
  static std::uint64_t perm_monomial(int n, const std::vector<int>& w);

private:
  int n_;
  std::map<std::uint64_t, Rat> terms_;
};

}  // namespace cox
