#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "coxeter/algebraic.hpp"
#include "coxeter/coxeter_type.hpp"

namespace cox {

// Subset of the simple generators, bitset semantics.
struct SubsetJ {
  std::uint32_t bits = 0;

  SubsetJ() = default;
  explicit SubsetJ(std::uint32_t b) : bits(b) {}
  static SubsetJ full(int rank) { return SubsetJ((1u << rank) - 1); }
  static SubsetJ of(std::initializer_list<int> gens) {
    SubsetJ j;
    for (int s : gens) j.add(s);
    return j;
  }

  bool contains(int s) const { return (bits >> s) & 1u; }
  void add(int s) { bits |= 1u << s; }
  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(SubsetJ o) const { return (bits & ~o.bits) == 0; }
  SubsetJ operator&(SubsetJ o) const { return SubsetJ(bits & o.bits); }
  SubsetJ operator|(SubsetJ o) const { return SubsetJ(bits | o.bits); }
  SubsetJ complement(int rank) const { return SubsetJ(full(rank).bits & ~bits); }
  std::vector<int> members() const {
    std::vector<int> v;
    for (int s = 0; s < 32; ++s)
      if (contains(s)) v.push_back(s);
    return v;
  }
  friend bool operator==(SubsetJ a, SubsetJ b) { return a.bits == b.bits; }
  friend bool operator!=(SubsetJ a, SubsetJ b) { return a.bits != b.bits; }
  friend bool operator<(SubsetJ a, SubsetJ b) { return a.bits < b.bits; }
};

struct BudgetExceeded : std::runtime_error {
  std::uint64_t group_order;
  explicit BudgetExceeded(std::uint64_t o)
      : std::runtime_error("group order " + std::to_string(o) +
                           " exceeds the enumeration budget"),
        group_order(o) {}
};

class CoxeterSystem;

// A group element, represented as a permutation of the root indices.
// Roots are indexed 0..2N-1 with the N positive roots first (simple roots at
// 0..rank-1) and root i+N the negative of root i.
class Element {
public:
  Element() = default;
  Element(const CoxeterSystem* sys, std::vector<std::uint16_t> perm)
      : sys_(sys), perm_(std::move(perm)) {}

  const CoxeterSystem& system() const { return *sys_; }
  const CoxeterSystem* system_ptr() const { return sys_; }
  const std::vector<std::uint16_t>& perm() const { return perm_; }
  bool is_identity() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.sys_ == b.sys_ && a.perm_ == b.perm_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
  const CoxeterSystem* sys_ = nullptr;
  std::vector<std::uint16_t> perm_;
};

// Cached full enumeration of a system: every element gets a dense index.
// Index 0 is the identity; order is BFS by length with ties broken by the
// lexicographically smallest reduced word.
class ElementStore {
public:
  std::uint32_t size() const { return count_; }
  const CoxeterSystem& system() const { return *sys_; }
  int perm_len() const { return perm_len_; }
  const std::uint16_t* perm(std::uint32_t i) const { return &perms_[(std::size_t)i * perm_len_]; }
  Element element(std::uint32_t i) const;
  std::uint16_t length(std::uint32_t i) const { return len_[i]; }
  std::uint32_t inverse(std::uint32_t i) const { return inv_[i]; }
  std::uint32_t gen_index(int s) const { return gen_idx_[s]; }

  std::uint32_t index_of_perm(const std::uint16_t* p) const;
  std::uint32_t index_of(const Element& w) const { return index_of_perm(w.perm().data()); }

  std::uint32_t mul_gen_left(int s, std::uint32_t w) const { return gen_left_[(std::size_t)w * rank_ + s]; }
  std::uint32_t mul_gen_right(std::uint32_t w, int s) const { return gen_right_[(std::size_t)w * rank_ + s]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;  // index of a*b
  std::uint32_t conj(std::uint32_t w, std::uint32_t x) const  // x^{-1} w x
  { return mul(inv_[x], mul(w, x)); }
  std::uint32_t conj_gen(std::uint32_t w, int s) const { return mul_gen_right(mul_gen_left(s, w), s); }

private:
  friend class CoxeterSystem;
  void build(const CoxeterSystem& sys);

  const CoxeterSystem* sys_ = nullptr;
  int rank_ = 0;
  int perm_len_ = 0;
  std::uint32_t count_ = 0;
  std::vector<std::uint16_t> perms_;
  std::vector<std::uint16_t> len_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> gen_idx_;
  std::vector<std::uint32_t> gen_left_, gen_right_;
  std::unordered_map<std::uint64_t, std::uint32_t> first_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> overflow_;
  void insert_index(std::uint64_t h, std::uint32_t idx);
};

// Immutable context for one finite Coxeter group: Coxeter matrix, root table
// (built by closing the simple roots under the reflection action, with exact
// coordinates in Q(2cos(pi/m))), generator actions, and a lazily built
// element store.
class CoxeterSystem {
public:
  explicit CoxeterSystem(const CoxeterType& t,
                         std::uint64_t budget = kDefaultBudget);

  static constexpr std::uint64_t kDefaultBudget = 1'000'000;

  const CoxeterType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::uint64_t order() const { return order_; }
  std::uint64_t budget() const { return budget_; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return cox_; }

  int num_positive_roots() const { return npos_; }
  int num_roots() const { return 2 * npos_; }
  const std::vector<std::uint16_t>& simple_action(int s) const { return simple_action_[s]; }
  // Simple generators whose coordinates enter root i (support in the basis of
  // simple roots).
  SubsetJ root_support(int i) const { return root_support_[i % npos_]; }

  Element identity() const;
  Element generator(int s) const;

  // Full enumeration; throws BudgetExceeded when order() > budget().
  const ElementStore& store() const;

private:
  void build_roots();

  CoxeterType type_;
  std::uint64_t budget_;
  std::uint64_t order_;
  std::vector<std::vector<int>> cox_;
  std::unique_ptr<NumberField> field_;
  int npos_ = 0;
  std::vector<std::vector<std::uint16_t>> simple_action_;
  std::vector<SubsetJ> root_support_;

  mutable std::unique_ptr<ElementStore> store_;
  mutable std::once_flag store_once_;
};

// ---- element arithmetic ----

Element operator*(const Element& a, const Element& b);
Element inverse(const Element& w);
int length(const Element& w);
// Left descents: {s : l(sw) < l(w)}.
SubsetJ descent_set(const Element& w);
SubsetJ ascent_set(const Element& w);
// Right descents: {s : l(ws) < l(w)} (cheap; used internally).
SubsetJ right_descent_set(const Element& w);
// Lexicographically smallest reduced word (greedy smallest left descent).
std::vector<int> reduce_word(const Element& w);
Element word_to_element(const CoxeterSystem& sys, const std::vector<int>& word);
// Longest element of the standard parabolic W_J.
Element longest_element(const CoxeterSystem& sys, SubsetJ J);
// Membership in W_J without enumeration (inversion-set test).
bool in_parabolic(const Element& w, SubsetJ J);

// ---- index sets and subgroup closure ----

struct IndexSet {
  std::vector<std::uint32_t> elems;  // sorted
  std::vector<bool> mask;
  bool truncated = false;  // closure stopped at a cap

  std::size_t size() const { return elems.size(); }
  bool contains(std::uint32_t i) const { return mask[i]; }
};

IndexSet make_index_set(std::vector<std::uint32_t> elems, std::uint32_t universe);
// Subgroup generated by the given element indices.  If cap > 0 the closure
// stops (with truncated = true) once more than cap elements are found.
IndexSet generated_subgroup(const ElementStore& st,
                            const std::vector<std::uint32_t>& gens,
                            std::uint64_t cap = 0);

}  // namespace cox
