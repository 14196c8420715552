#pragma once

#include <memory>
#include <vector>

#include "coxeter/rational.hpp"

namespace cox {

// The real number field Q(2cos(pi/bond)).  Elements are polynomial residues
// modulo the minimal polynomial of 2cos(pi/bond), which is computed exactly
// from the cyclotomic polynomial of order 2*bond.  For bond = 3 the minimal
// polynomial is x - 1 and the field degenerates to the plain rationals, which
// covers all crystallographic simply-laced cases.
class NumberField {
public:
  explicit NumberField(int bond);

  int bond() const { return bond_; }
  int degree() const { return (int)minpoly_.size() - 1; }
  // Monic with integer coefficients, constant term first.
  const std::vector<long long>& minpoly() const { return minpoly_; }

private:
  int bond_;
  std::vector<long long> minpoly_;
};

// An element of a NumberField: coefficient vector of length degree().
class AlgNum {
public:
  AlgNum() : field_(nullptr) {}
  AlgNum(const NumberField* f, Rat constant);
  static AlgNum zero(const NumberField* f) { return AlgNum(f, Rat(0)); }
  static AlgNum one(const NumberField* f) { return AlgNum(f, Rat(1)); }
  // The field generator x = 2cos(pi/bond).
  static AlgNum generator(const NumberField* f);
  // The value 2cos(pi/m) for a Coxeter matrix entry m.  Supports m = 2, 3 and
  // m = bond; no finite Coxeter group needs two distinct bonds above 3.
  static AlgNum two_cos(const NumberField* f, int m);

  const NumberField* field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  AlgNum operator-() const;
  AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
  AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
  AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }
  friend bool operator==(const AlgNum& a, const AlgNum& b);
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  std::string str() const;

private:
  const NumberField* field_;
  std::vector<Rat> c_;
};

}  // namespace cox
