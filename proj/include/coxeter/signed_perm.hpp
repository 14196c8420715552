#pragma once

#include <string>
#include <vector>

#include "coxeter/system.hpp"

namespace cox {

// Pair of partitions (plus, minus), parts weakly increasing.  Indexes the
// conjugacy classes of the hyperoctahedral groups; minus stays empty in the
// symmetric-group case.
struct DoublePartition {
  std::vector<int> plus;
  std::vector<int> minus;

  int total() const;
  std::string str() const;
  // "1,1,2;2,3" -> plus (1,1,2), minus (2,3).  No ';' means minus is empty.
  static DoublePartition parse(const std::string& text);

  friend bool operator==(const DoublePartition& a, const DoublePartition& b) {
    return a.plus == b.plus && a.minus == b.minus;
  }
  friend bool operator<(const DoublePartition& a, const DoublePartition& b) {
    return a.plus != b.plus ? a.plus < b.plus : a.minus < b.minus;
  }
};

// One signed cycle.  entries[0] is positive and has the smallest magnitude;
// a trailing minus means the cycle closes up with a sign flip:
// w(entries.back()) = -entries[0].
struct Cycle {
  std::vector<int> entries;
  bool negative = false;

  int len() const { return (int)entries.size(); }
  std::string str() const;
};

class SignedPermutation {
public:
  explicit SignedPermutation(int n);
  explicit SignedPermutation(std::vector<int> images);

  int n() const { return (int)img_.size(); }
  const std::vector<int>& images() const { return img_; }
  // Signed image; accepts a signed argument, so image(-i) == -image(i).
  int image(int i) const;

  bool is_identity() const;
  int num_negatives() const;

  SignedPermutation operator*(const SignedPermutation& o) const;
  SignedPermutation inverse() const;

  std::vector<Cycle> cycles() const;
  DoublePartition cycle_type() const;
  std::string cycle_str() const;
  // Inverse of cycle_str; also accepts signed entries like "(1,-2)".
  // Letters not mentioned are fixed.
  static SignedPermutation parse_cycles(int n, const std::string& text);

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
    return !(a == b);
  }

private:
  std::vector<int> img_;  // img_[i-1] = w(i), sign included
};

// Block operations on consecutive letters, all with 1-based offsets:
//   block_swap(n,o,m)    exchanges {o+1..o+m} with {o+m+1..o+2m} in order
//   block_reverse(n,o,m) reverses {o+1..o+m}
//   block_negate(n,o,m)  negates {o+1..o+m}
SignedPermutation block_swap(int n, int o, int m);
SignedPermutation block_reverse(int n, int o, int m);
SignedPermutation block_negate(int n, int o, int m);

// Canonical representative of the class with cycle type lam: negative cycles
// laid out first on 1..|minus|, then positive cycles, consecutive letters,
// parts in weakly increasing order.
SignedPermutation w_lambda(const DoublePartition& lam);
// w_lambda conjugated by the sign change at letter 1 (the representative of
// the other half of a split class in the even-rotation subgroup).
SignedPermutation w_lambda_primed(const DoublePartition& lam);

// Bridges to the abstract group, for types A, B, D.  Type A uses n = rank+1
// letters and rejects sign changes; type D rejects an odd number of sign
// changes.
SignedPermutation from_element(const Element& w);
Element to_element(const CoxeterSystem& sys, const SignedPermutation& sp);

}  // namespace cox
