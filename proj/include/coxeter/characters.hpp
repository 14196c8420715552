#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxeter/conjugacy.hpp"
#include "coxeter/poly.hpp"
#include "coxeter/system.hpp"

namespace cox {

struct CharacterValueTable {
  // pi[class][J.bits]; eps[class] = (-1)^l(rep).
  std::vector<std::vector<std::uint64_t>> pi;
  std::vector<int> eps;
};

// #{x in X_J : x w x^{-1} in W_J}, straight from the definition.
std::uint64_t pi_J(const CoxeterSystem& sys, std::uint32_t w, SubsetJ J);

// Same values for all classes and subsets at once, via
// pi_J(w) = |C_W(w)| * |class meet W_J| / |W_J|.
CharacterValueTable character_table(const CoxeterSystem& sys,
                                    const ConjClassTable& t);

std::string character_table_csv(const CoxeterSystem& sys,
                                const ConjClassTable& t,
                                const CharacterValueTable& tab);

// sum_J (-1)^{|J|} pi_J = eps on every class; also spot-checked on random
// non-minimal class elements against the definition (fixed seed).
bool solomon_check(const CoxeterSystem& sys);

struct Theorem3Witness {
  bool ok = false;
  std::uint32_t v_descent = 0;  // the unique v with J(w^v) = D(v^{-1})
  std::uint32_t v_ascent = 0;   // the unique v with J(w^v) = A(v^{-1})
};

// Exhaustive scan over all v in W; w must be minimal in its class.
Theorem3Witness theorem3_check(const CoxeterSystem& sys, std::uint32_t w_min);

// Coefficient of x_{1w(1)}...x_{nw(n)} in the order-truncated geometric
// series for 1/det(Id-X); the master theorem says this is always 1.
Rat macmahon_series_coefficient(int n, const std::vector<int>& w, int order);

// Coefficient of the same monomial in
// sum det X_{I_1} ... det X_{I_k} over ordered set partitions with
// |I_j| = comp_j.
long long merris_watkins_coefficient(int n, const std::vector<int>& comp,
                                     const std::vector<int>& w);

// sum over compositions of (-1)^{n-#parts} merris_watkins == 1 for every
// permutation (all of S_n for n <= 4, a fixed 20-element sample for n = 5).
bool macmahon_solomon_bridge(int n);

// J with W_J = S_{c_1} x S_{c_2} x ... inside A_{n-1}.
SubsetJ composition_to_J(int n, const std::vector<int>& comp);

}  // namespace cox
