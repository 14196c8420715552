#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cox {

enum class Family { A, B, D, I2, E6, E7, E8, F4, H3, H4 };

// A finite Coxeter group type: family plus rank (and bond order m for I2).
//
// Node numbering (1-based in all text I/O, 0-based internally):
//   A_n : s_1 - s_2 - ... - s_n
//   B_n : t_1 =4= s_1 - s_2 - ... - s_{n-1}   (node 1 is the sign flip t_1)
//   D_n : u, s_1, ..., s_{n-1}; u - s_2, s_i - s_{i+1}  (node 1 is u = (1,-2))
//   E_n : Bourbaki labels (node 2 attached to node 4; 1-3-4-5-6[-7-8] chain)
//   F_4 : 1 - 2 =4= 3 - 4
//   H_3/H_4 : 1 =5= 2 - 3 [- 4]
//   I2(m) : 1 =m= 2
struct CoxeterType {
  Family family;
  int rank;
  int m = 0;  // bond order, I2 only

  static CoxeterType parse(const std::string& spec);  // "A3", "B4", "I2:7", ...
  std::string str() const;

  void validate() const;  // throws std::invalid_argument on bad rank/family
  std::vector<std::vector<int>> coxeter_matrix() const;
  // Degrees d_1,...,d_n of the basic invariants; the product of the degrees
  // equals the group order.
  std::vector<int> degrees() const;
  std::uint64_t order() const;
  // Largest Coxeter matrix entry (>= 3); determines the coefficient field.
  int max_bond() const;

  friend bool operator==(const CoxeterType& a, const CoxeterType& b) {
    return a.family == b.family && a.rank == b.rank && a.m == b.m;
  }
};

}  // namespace cox
