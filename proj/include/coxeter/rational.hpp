#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cox {

// Exact rational number on 64-bit words, always normalized (gcd 1, positive
// denominator).  Intermediate products go through __int128; if a normalized
// result no longer fits in 64 bits we throw instead of silently wrapping.
class Rat {
public:
  Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    normalize(nn, dd);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rat: division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

  std::size_t hash() const {
    return std::hash<long long>()(num_) * 1000003u ^ std::hash<long long>()(den_);
  }

private:
  static Rat from128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    Rat r;
    r.normalize(n, d);
    return r;
  }
  void normalize(__int128 n, __int128 d) {
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    n /= a;
    d /= a;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rat: 64-bit overflow");
    num_ = (long long)n;
    den_ = (long long)d;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace cox
