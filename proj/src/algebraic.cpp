#include "coxeter/algebraic.hpp"

#include <stdexcept>

namespace cox {

namespace {

// Integer polynomials, constant term first.
using IPoly = std::vector<long long>;

// Exact division a / b for monic-ish integer polynomials where the division
// is known to be exact (cyclotomic factor removal).
IPoly exact_div(const IPoly& a, const IPoly& b) {
  IPoly rem = a;
  IPoly q(a.size() - b.size() + 1, 0);
  for (int k = (int)q.size() - 1; k >= 0; --k) {
    long long lead = rem[k + b.size() - 1];
    long long blead = b.back();
    if (lead % blead != 0) throw std::logic_error("exact_div: not exact");
    long long c = lead / blead;
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
  }
  for (long long r : rem)
    if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

// Cyclotomic polynomial Phi_n, by dividing x^n - 1 by all lower Phi_d, d | n.
IPoly cyclotomic(int n) {
  IPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = exact_div(p, cyclotomic(d));
  }
  return p;
}

}  // namespace

NumberField::NumberField(int bond) : bond_(bond) {
  if (bond < 3) throw std::invalid_argument("NumberField: bond must be >= 3");
  // Phi_{2m}(y) is palindromic of degree 2d; writing y^k + y^{-k} = p_k(x)
  // with x = y + 1/y gives the minimal polynomial of x = 2cos(pi/m).
  IPoly phi = cyclotomic(2 * bond);
  int d = ((int)phi.size() - 1) / 2;
  // p_k as integer polynomials in x: p_0 = 2, p_1 = x, p_{k+1} = x p_k - p_{k-1}.
  std::vector<IPoly> p(d + 1);
  p[0] = {2};
  if (d >= 1) p[1] = {0, 1};
  for (int k = 2; k <= d; ++k) {
    IPoly next(k + 1, 0);
    for (size_t i = 0; i < p[k - 1].size(); ++i) next[i + 1] += p[k - 1][i];
    for (size_t i = 0; i < p[k - 2].size(); ++i) next[i] -= p[k - 2][i];
    p[k] = next;
  }
  IPoly mp(d + 1, 0);
  mp[0] = phi[d];
  for (int k = 1; k <= d; ++k)
    for (size_t i = 0; i < p[k].size(); ++i) mp[i] += phi[d + k] * p[k][i];
  if (mp.back() != 1) throw std::logic_error("NumberField: minpoly not monic");
  minpoly_ = mp;
}

AlgNum::AlgNum(const NumberField* f, Rat constant) : field_(f) {
  c_.assign(f->degree(), Rat(0));
  c_[0] = constant;
}

AlgNum AlgNum::generator(const NumberField* f) {
  AlgNum a(f, Rat(0));
  if (f->degree() == 1) {
    // minpoly x - c: the generator is the rational root c.
    a.c_[0] = Rat(-f->minpoly()[0]);
  } else {
    a.c_[1] = Rat(1);
  }
  return a;
}

AlgNum AlgNum::two_cos(const NumberField* f, int m) {
  if (m == 2) return AlgNum(f, Rat(0));
  if (m == 3) return AlgNum(f, Rat(1));
  if (m == f->bond()) return generator(f);
  throw std::logic_error("AlgNum::two_cos: bond not represented in field");
}

bool AlgNum::is_zero() const {
  for (const Rat& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  AlgNum r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) {
  AlgNum r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  int d = (int)a.c_.size();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  // Reduce modulo the monic minimal polynomial.
  const auto& mp = a.field_->minpoly();
  for (int k = 2 * d - 2; k >= d; --k) {
    Rat lead = prod[k];
    if (lead.is_zero()) continue;
    prod[k] = Rat(0);
    for (int i = 0; i < d; ++i) prod[k - d + i] -= lead * Rat(mp[i]);
  }
  AlgNum r;
  r.field_ = a.field_;
  r.c_.assign(prod.begin(), prod.begin() + d);
  return r;
}

bool operator==(const AlgNum& a, const AlgNum& b) { return a.c_ == b.c_; }

std::string AlgNum::str() const {
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].str();
  }
  return s + "]";
}

}  // namespace cox
