#include "coxeter/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cox {

int DoublePartition::total() const {
  return std::accumulate(plus.begin(), plus.end(), 0) +
         std::accumulate(minus.begin(), minus.end(), 0);
}

std::string DoublePartition::str() const {
  auto join = [](const std::vector<int>& v) {
    if (v.empty()) return std::string("-");
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "(" + join(plus) + " ; " + join(minus) + ")";
}

DoublePartition DoublePartition::parse(const std::string& text) {
  auto parts = [](const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      int p = std::stoi(tok);
      if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
      v.push_back(p);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  DoublePartition lam;
  size_t semi = text.find(';');
  if (semi == std::string::npos) {
    lam.plus = parts(text);
  } else {
    lam.plus = parts(text.substr(0, semi));
    lam.minus = parts(text.substr(semi + 1));
  }
  return lam;
}

std::string Cycle::str() const {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries[i]);
  }
  s += ')';
  if (negative) s += '-';
  return s;
}

SignedPermutation::SignedPermutation(int n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 1);
}

SignedPermutation::SignedPermutation(std::vector<int> images)
    : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    int a = std::abs(v);
    if (a < 1 || a > n() || seen[a - 1])
      throw std::invalid_argument("not a signed permutation");
    seen[a - 1] = true;
  }
}

int SignedPermutation::image(int i) const {
  return i > 0 ? img_[i - 1] : -img_[-i - 1];
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

int SignedPermutation::num_negatives() const {
  int c = 0;
  for (int v : img_)
    if (v < 0) ++c;
  return c;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("size mismatch");
  std::vector<int> r(n());
  for (int i = 1; i <= n(); ++i) r[i - 1] = image(o.image(i));
  return SignedPermutation(std::move(r));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> r(n());
  for (int i = 1; i <= n(); ++i) {
    int v = img_[i - 1];
    r[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(r));
}

std::vector<Cycle> SignedPermutation::cycles() const {
  std::vector<Cycle> cs;
  std::vector<bool> seen(n(), false);
  for (int a = 1; a <= n(); ++a) {
    if (seen[a - 1]) continue;
    Cycle c;
    int cur = a;
    do {
      seen[std::abs(cur) - 1] = true;
      c.entries.push_back(cur);
      cur = image(cur);
    } while (std::abs(cur) != a);
    c.negative = cur < 0;
    cs.push_back(std::move(c));
  }
  return cs;
}

DoublePartition SignedPermutation::cycle_type() const {
  DoublePartition lam;
  for (const Cycle& c : cycles())
    (c.negative ? lam.minus : lam.plus).push_back(c.len());
  std::sort(lam.plus.begin(), lam.plus.end());
  std::sort(lam.minus.begin(), lam.minus.end());
  return lam;
}

std::string SignedPermutation::cycle_str() const {
  std::string s;
  for (const Cycle& c : cycles()) s += c.str();
  return s;
}

SignedPermutation SignedPermutation::parse_cycles(int n, const std::string& text) {
  std::vector<int> img(n, 0);
  std::vector<bool> used(n, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle form");
    ++i;
    std::vector<int> entries;
    for (;;) {
      skip_ws();
      size_t end;
      int v = std::stoi(text.substr(i), &end);
      i += end;
      int a = std::abs(v);
      if (a < 1 || a > n) throw std::invalid_argument("cycle entry out of range");
      if (used[a - 1]) throw std::invalid_argument("repeated letter in cycle form");
      used[a - 1] = true;
      entries.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ')') { ++i; break; }
      throw std::invalid_argument("malformed cycle form");
    }
    bool neg = false;
    if (i < text.size() && text[i] == '-') { neg = true; ++i; }
    int k = (int)entries.size();
    for (int j = 0; j < k; ++j) {
      int from = entries[j];
      int to = j + 1 < k ? entries[j + 1] : (neg ? -entries[0] : entries[0]);
      img[std::abs(from) - 1] = from > 0 ? to : -to;
    }
    skip_ws();
  }
  for (int a = 1; a <= n; ++a)
    if (img[a - 1] == 0) img[a - 1] = a;
  return SignedPermutation(std::move(img));
}

static void check_block(int n, int o, int m, int span, const char* what) {
  if (m < 1 || o < 0 || o + span > n)
    throw std::invalid_argument(std::string(what) + ": block out of range");
}

SignedPermutation block_swap(int n, int o, int m) {
  check_block(n, o, m, 2 * m, "block_swap");
  SignedPermutation w(n);
  std::vector<int> img = w.images();
  for (int i = 1; i <= m; ++i) {
    img[o + i - 1] = o + m + i;
    img[o + m + i - 1] = o + i;
  }
  return SignedPermutation(std::move(img));
}

SignedPermutation block_reverse(int n, int o, int m) {
  check_block(n, o, m, m, "block_reverse");
  SignedPermutation w(n);
  std::vector<int> img = w.images();
  for (int i = 1; i <= m; ++i) img[o + i - 1] = o + m + 1 - i;
  return SignedPermutation(std::move(img));
}

SignedPermutation block_negate(int n, int o, int m) {
  check_block(n, o, m, m, "block_negate");
  SignedPermutation w(n);
  std::vector<int> img = w.images();
  for (int i = 1; i <= m; ++i) img[o + i - 1] = -(o + i);
  return SignedPermutation(std::move(img));
}

SignedPermutation w_lambda(const DoublePartition& lam) {
  for (int p : lam.plus)
    if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
  for (int p : lam.minus)
    if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
  int n = lam.total();
  std::vector<int> img(n);
  int pos = 1;
  auto lay = [&](int len, bool neg) {
    for (int p = pos; p < pos + len - 1; ++p) img[p - 1] = p + 1;
    img[pos + len - 2] = neg ? -pos : pos;
    pos += len;
  };
  std::vector<int> minus = lam.minus, plus = lam.plus;
  std::sort(minus.begin(), minus.end());
  std::sort(plus.begin(), plus.end());
  for (int len : minus) lay(len, true);
  for (int len : plus) lay(len, false);
  return SignedPermutation(std::move(img));
}

SignedPermutation w_lambda_primed(const DoublePartition& lam) {
  SignedPermutation w = w_lambda(lam);
  SignedPermutation t1 = block_negate(w.n(), 0, 1);
  return t1 * w * t1;
}

SignedPermutation from_element(const Element& w) {
  const CoxeterSystem& sys = w.system();
  Family fam = sys.type().family;
  int rank = sys.rank();
  int n = fam == Family::A ? rank + 1 : rank;
  if (fam != Family::A && fam != Family::B && fam != Family::D)
    throw std::invalid_argument("one-line form only defined for types A, B, D");
  SignedPermutation sp(n);
  for (int s : reduce_word(w)) {
    std::vector<int> img = sp.images();
    if (fam == Family::A) {
      std::swap(img[s], img[s + 1]);  // right mult by s_{s+1}
    } else if (s == 0) {
      if (fam == Family::B) {
        img[0] = -img[0];
      } else {  // u = (1,-2)
        int a = img[0], b = img[1];
        img[0] = -b;
        img[1] = -a;
      }
    } else {
      std::swap(img[s - 1], img[s]);
    }
    sp = SignedPermutation(std::move(img));
  }
  return sp;
}

Element to_element(const CoxeterSystem& sys, const SignedPermutation& sp) {
  Family fam = sys.type().family;
  int rank = sys.rank();
  int n = fam == Family::A ? rank + 1 : rank;
  if (fam != Family::A && fam != Family::B && fam != Family::D)
    throw std::invalid_argument("one-line form only defined for types A, B, D");
  if (sp.n() != n) throw std::invalid_argument("wrong number of letters");

  std::vector<int> img = sp.images();
  std::vector<int> right;  // generator nodes, applied by right multiplication
  // s_i as a node index.
  auto snode = [&](int i) { return fam == Family::A ? i - 1 : i; };

  if (fam == Family::A) {
    for (int v : img)
      if (v < 0) throw std::invalid_argument("sign changes not allowed in type A");
  } else if (fam == Family::B) {
    // t_p = s_{p-1}..s_1 t_1 s_1..s_{p-1} clears the sign at position p.
    for (int p = 1; p <= n; ++p) {
      if (img[p - 1] >= 0) continue;
      for (int j = p - 1; j >= 1; --j) right.push_back(snode(j));
      right.push_back(0);
      for (int j = 1; j <= p - 1; ++j) right.push_back(snode(j));
      img[p - 1] = -img[p - 1];
    }
  } else {
    std::vector<int> neg;
    for (int p = 1; p <= n; ++p)
      if (img[p - 1] < 0) neg.push_back(p);
    if (neg.size() % 2)
      throw std::invalid_argument("odd number of sign changes: not an element here");
    // T(k) negates positions 1 and k: T(2) = u s_1, T(k) = s_{k-1} T(k-1) s_{k-1}.
    auto emit_T = [&](int k) {
      std::vector<int> pre;
      while (k > 2) {
        pre.push_back(snode(k - 1));
        --k;
      }
      for (int g : pre) right.push_back(g);
      right.push_back(0);
      right.push_back(snode(1));
      for (auto it = pre.rbegin(); it != pre.rend(); ++it) right.push_back(*it);
    };
    for (size_t i = 0; i < neg.size(); i += 2) {
      int p = neg[i], q = neg[i + 1];
      if (p > 1) emit_T(p);
      emit_T(q);
      img[p - 1] = -img[p - 1];
      img[q - 1] = -img[q - 1];
    }
  }
  // Bubble sort what is now an honest permutation.
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (img[i - 1] > img[i]) {
        std::swap(img[i - 1], img[i]);
        right.push_back(snode(i));
        moved = true;
      }
    }
  }
  // sp * (right word) = e, all generators involutive.
  std::reverse(right.begin(), right.end());
  return word_to_element(sys, right);
}

}  // namespace cox
