#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxeter/conjugacy.hpp"
#include "coxeter/signed_perm.hpp"
#include "coxeter/system.hpp"

namespace cox {

enum class SearchOutcome { exists, not_exists, unknown };

struct InvolutionGenerators {
  std::vector<std::uint32_t> gens;
  bool all_involutions = true;  // false only if the involution fallback fired
};

struct ComplementResult {
  bool found = false;
  std::vector<std::uint32_t> generators;  // store indices, generators of M
  std::vector<std::uint32_t> M;           // sorted element indices of M
  std::uint64_t quotient = 1;             // |C_W(w) : C_{W_J}(w)|
  bool nonexistence_certified = false;
  std::string certificate;  // "no-involution-in-coset" or "subgroup-search"
  std::uint64_t steps = 0;  // generator tuples examined
};

// J(w) for a single element (union of inversion-root supports).
SubsetJ support_of(const ElementStore& st, std::uint32_t w);

// lambda+ a single odd part, lambda- a nonempty even partition of even length.
bool is_non_compliant_partition(const DoublePartition& lam);

// Ambient type D: the parity criterion on the class label.  Types E: scan of
// standard parabolics with an irreducible D_k component (k odd, > 4) and the
// projected cycle type.  All other families: false.
bool class_is_non_compliant(const CoxeterSystem& sys, const ConjClassTable& t,
                            std::size_t ci);

// Constructive complements for the classical types; elements of the ambient
// store.  All are certified externally (order, centralizing, intersection).
IndexSet complement_type_A(const CoxeterSystem& sys,
                           const std::vector<int>& lambda);
IndexSet complement_type_B(const CoxeterSystem& sys, const DoublePartition& lam);
// Cases: lambda+ even -> N_lambda; lambda- empty -> N_lambda meet W+;
// lambda- not even -> the t(0,k)-twisted generators.  The leftover case
// (lambda+ not even, lambda- nonempty and even) is rejected.
IndexSet complement_type_D(const CoxeterSystem& sys, const DoublePartition& lam);

// Involutions generating N_J, greedily selected and pruned.
InvolutionGenerators involution_generators_of_NJ(const CoxeterSystem& sys,
                                                 SubsetJ J);

// The search algorithm; w is pre-normalized to the minimal-length class
// representative.  A found result is always certified before returning; on
// fail, non-existence is certified independently when possible.
ComplementResult centralizer_complement(const CoxeterSystem& sys,
                                        std::uint32_t w);

// |C_W(w):C_{W_J}(w)| must be 2; true iff the nontrivial coset contains no
// involution (which proves no complement exists).
bool certify_no_complement_order2(const CoxeterSystem& sys, std::uint32_t w,
                                  SubsetJ J);

// Bounded bottom-up enumeration of subgroups of C_W(w) of order
// |C_W(w):C_{W_J}(w)| with trivial intersection with C_{W_J}(w).
SearchOutcome exhaustive_complement_search(const CoxeterSystem& sys,
                                           std::uint32_t w, SubsetJ J,
                                           std::uint64_t budget);

// The three complement conditions, checked by enumeration.
bool certify_complement(const CoxeterSystem& sys, std::uint32_t w, SubsetJ J,
                        const std::vector<std::uint32_t>& M_elems);

}  // namespace cox
