#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/parabolic.hpp"
#include "coxeter/signed_perm.hpp"
#include "coxeter/system.hpp"

namespace cox {

inline constexpr const char* kEngineVersion = "1.0.0";

struct ConjClassRecord {
  std::uint32_t rep_min = 0;  // store index; globally minimal (length, lex)
  std::uint64_t class_size = 0;
  SubsetJ J;  // J(rep_min)
  bool cuspidal = false;
  std::optional<DoublePartition> label;  // types A, B, D
  bool primed = false;                   // split type-D classes only
  bool non_compliant = false;            // filled by the complement layer
  std::vector<std::uint32_t> members;    // sorted store indices
};

struct ConjClassTable {
  std::vector<ConjClassRecord> classes;   // ordered by rep_min
  std::vector<std::uint32_t> class_of;    // element index -> class index
};

// Minimal J with w in W_J, as a bitmask, for every element at once.  Equals
// J(w) (the letter set of any reduced word).
std::vector<SubsetJ> support_masks(const ElementStore& st);

ConjClassTable conjugacy_classes(const CoxeterSystem& sys);

IndexSet centralizer(const ElementStore& st, std::uint32_t w);
IndexSet centralizer_in_parabolic(const ElementStore& st, std::uint32_t w,
                                  SubsetJ J);

// {x : W_J^x = W_J}.
IndexSet normalizer_of_parabolic(const CoxeterSystem& sys, SubsetJ J);
// N_J = {x in X_J : J^x = J}.
IndexSet normalizer_complement(const CoxeterSystem& sys, SubsetJ J);

// Minimal-index (hence minimal-length, lex-smallest) element v of the class
// of w, together with x such that v = x^{-1} w x.
std::pair<std::uint32_t, std::uint32_t> min_length_class_element(
    const ElementStore& st, std::uint32_t w);

// C_W(w) . W_{J(w)} = N_W(W_{J(w)}) as element sets; w must be minimal in
// its class.
bool verify_theorem2(const CoxeterSystem& sys, std::uint32_t w_min);

// Deterministic JSON for one class table (rep as 1-based reduced word).
std::string class_table_json(const CoxeterSystem& sys, const ConjClassTable& t);

}  // namespace cox
