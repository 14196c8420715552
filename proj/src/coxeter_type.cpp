#include "coxeter/coxeter_type.hpp"

#include <stdexcept>

namespace cox {

CoxeterType CoxeterType::parse(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty group spec");
  auto num = [&](size_t pos) {
    if (pos >= spec.size()) throw std::invalid_argument("bad group spec: " + spec);
    return std::stoi(spec.substr(pos));
  };
  CoxeterType t{};
  char c = spec[0];
  if ((c == 'I' || c == 'i') && spec.size() >= 2 && spec[1] == '2') {
    t.family = Family::I2;
    t.rank = 2;
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("I2 spec needs a bond, e.g. I2:7");
    t.m = num(colon + 1);
  } else {
    switch (c) {
      case 'A': case 'a': t.family = Family::A; t.rank = num(1); break;
      case 'B': case 'b': t.family = Family::B; t.rank = num(1); break;
      case 'D': case 'd': t.family = Family::D; t.rank = num(1); break;
      case 'F': case 'f': t.family = Family::F4; t.rank = num(1); break;
      case 'H': case 'h':
        t.rank = num(1);
        t.family = t.rank == 3 ? Family::H3 : Family::H4;
        break;
      case 'E': case 'e': {
        int r = num(1);
        t.rank = r;
        t.family = r == 6 ? Family::E6 : r == 7 ? Family::E7 : Family::E8;
        break;
      }
      default:
        throw std::invalid_argument("unknown family in group spec: " + spec);
    }
  }
  t.validate();
  return t;
}

std::string CoxeterType::str() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::I2: return "I2:" + std::to_string(m);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
  }
  return "?";
}

void CoxeterType::validate() const {
  auto fail = [&](const char* why) {
    throw std::invalid_argument("invalid Coxeter type " + str() + ": " + why);
  };
  switch (family) {
    case Family::A: if (rank < 1) fail("type A needs rank >= 1"); break;
    case Family::B: if (rank < 2) fail("type B needs rank >= 2"); break;
    case Family::D: if (rank < 4) fail("type D needs rank >= 4"); break;
    case Family::I2:
      if (rank != 2) fail("type I2 has rank 2");
      if (m < 3) fail("I2 bond must be >= 3");
      break;
    case Family::E6: if (rank != 6) fail("E6 has rank 6"); break;
    case Family::E7: if (rank != 7) fail("E7 has rank 7"); break;
    case Family::E8: if (rank != 8) fail("E8 has rank 8"); break;
    case Family::F4: if (rank != 4) fail("F4 has rank 4"); break;
    case Family::H3: if (rank != 3) fail("H3 has rank 3"); break;
    case Family::H4: if (rank != 4) fail("H4 has rank 4"); break;
  }
}

std::vector<std::vector<int>> CoxeterType::coxeter_matrix() const {
  int n = rank;
  std::vector<std::vector<int>> mm(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) mm[i][i] = 1;
  auto bond = [&](int i, int j, int v) { mm[i][j] = mm[j][i] = v; };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1, 3);
  };
  switch (family) {
    case Family::A: chain(0, n - 1); break;
    case Family::B: bond(0, 1, 4); chain(1, n - 1); break;
    case Family::D:
      // node 0 is u, attached to s_2 (internal node 2); s_i chain follows.
      bond(0, 2, 3);
      chain(1, n - 1);
      break;
    case Family::I2: bond(0, 1, m); break;
    case Family::F4: bond(0, 1, 3); bond(1, 2, 4); bond(2, 3, 3); break;
    case Family::H3: bond(0, 1, 5); bond(1, 2, 3); break;
    case Family::H4: bond(0, 1, 5); bond(1, 2, 3); bond(2, 3, 3); break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // Bourbaki: 1-3-4-5-6[-7-8], node 2 on node 4.
      bond(0, 2, 3);
      bond(1, 3, 3);
      for (int i = 2; i < n - 1; ++i) bond(i, i + 1, 3);
      break;
  }
  return mm;
}

std::vector<int> CoxeterType::degrees() const {
  std::vector<int> d;
  switch (family) {
    case Family::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
    case Family::I2: d = {2, m}; break;
    case Family::E6: d = {2, 5, 6, 8, 9, 12}; break;
    case Family::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
    case Family::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
    case Family::F4: d = {2, 6, 8, 12}; break;
    case Family::H3: d = {2, 6, 10}; break;
    case Family::H4: d = {2, 12, 20, 30}; break;
  }
  return d;
}

std::uint64_t CoxeterType::order() const {
  std::uint64_t o = 1;
  for (int d : degrees()) o *= (std::uint64_t)d;
  return o;
}

int CoxeterType::max_bond() const {
  int b = 3;
  auto mm = coxeter_matrix();
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (mm[i][j] > b) b = mm[i][j];
  return b;
}

}  // namespace cox
