#pragma once

#include "coxeter/system.hpp"

namespace cox {

// w = u . x with u in W_J, x in X_J and additive lengths.
struct CosetDecomposition {
  Element u;
  Element x;
};

// The standard parabolic subgroup W_J as a set of store indices.
IndexSet parabolic_elements(const CoxeterSystem& sys, SubsetJ J);

// Minimal-length right coset representatives X_J = {w : J subset of A(w)}.
std::vector<std::uint32_t> min_coset_reps(const CoxeterSystem& sys, SubsetJ J);

CosetDecomposition decompose(const Element& w, SubsetJ J);

// Index of the minimal coset representative of W_J w (strip J-descents).
std::uint32_t coset_rep_index(const ElementStore& st, std::uint32_t w, SubsetJ J);

// Minimal-length W_J-W_K double coset representatives X_JK.
std::vector<std::uint32_t> double_coset_reps(const CoxeterSystem& sys, SubsetJ J,
                                             SubsetJ K);

// Conjugate of the subset J by x: defined when every s^x (s in J) is again a
// simple generator; returns false otherwise.
bool conjugate_subset(const ElementStore& st, SubsetJ J, std::uint32_t x,
                      SubsetJ* out);

// L = J^x intersect K for x in X_JK (Coxeter-class parabolic intersection).
SubsetJ parabolic_intersection(const CoxeterSystem& sys, SubsetJ J,
                               const Element& x, SubsetJ K);

// Set of generators appearing in any reduced word of w.
SubsetJ J_of(const Element& w);

// w = w_J . x with J = D(w).
CosetDecomposition descent_decompose(const Element& w);

}  // namespace cox
