#include "coxeter/system.hpp"

#include <algorithm>
#include <cstring>
#include <map>

namespace cox {

namespace {

using Perm = std::vector<std::uint16_t>;

inline void compose_into(const std::uint16_t* a, const std::uint16_t* b,
                         std::uint16_t* out, int n) {
  for (int i = 0; i < n; ++i) out[i] = a[b[i]];
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  compose_into(a.data(), b.data(), r.data(), (int)a.size());
  return r;
}

inline Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = (std::uint16_t)i;
  return r;
}

inline std::uint64_t perm_hash(const std::uint16_t* p, int n) {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Greedy smallest-left-descent reduced word, working on raw permutations.
std::vector<int> word_of_perm(const CoxeterSystem& sys, Perm cur) {
  int npos = sys.num_positive_roots();
  int rank = sys.rank();
  std::vector<int> word;
  for (;;) {
    Perm inv = invert(cur);
    int s = -1;
    for (int t = 0; t < rank; ++t)
      if (inv[t] >= npos) { s = t; break; }
    if (s < 0) break;
    cur = compose(sys.simple_action(s), cur);
    word.push_back(s);
  }
  return word;
}

}  // namespace

// ---------------------------------------------------------------- system

CoxeterSystem::CoxeterSystem(const CoxeterType& t, std::uint64_t budget)
    : type_(t), budget_(budget) {
  type_.validate();
  order_ = type_.order();
  cox_ = type_.coxeter_matrix();
  field_ = std::make_unique<NumberField>(type_.max_bond());
  build_roots();
}

void CoxeterSystem::build_roots() {
  int n = rank();
  const NumberField* f = field_.get();

  std::vector<std::vector<AlgNum>> tc(n, std::vector<AlgNum>(n, AlgNum::zero(f)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) tc[i][j] = AlgNum::two_cos(f, cox_[i][j]);

  // Coordinates in the basis of simple roots; reflection s changes only the
  // s-th coordinate: c_s' = -c_s + sum_j c_j * 2cos(pi/m(s,j)).
  auto reflect = [&](int s, const std::vector<AlgNum>& c) {
    std::vector<AlgNum> r = c;
    AlgNum acc = -c[s];
    for (int j = 0; j < n; ++j)
      if (j != s && !c[j].is_zero()) acc += c[j] * tc[s][j];
    r[s] = acc;
    return r;
  };

  auto key_of = [&](const std::vector<AlgNum>& c) {
    std::vector<long long> k;
    for (const AlgNum& a : c)
      for (const Rat& q : a.coeffs()) {
        k.push_back(q.num());
        k.push_back(q.den());
      }
    return k;
  };

  std::vector<std::vector<AlgNum>> roots;
  std::map<std::vector<long long>, int> index;
  for (int s = 0; s < n; ++s) {
    std::vector<AlgNum> e(n, AlgNum::zero(f));
    e[s] = AlgNum::one(f);
    index[key_of(e)] = s;
    roots.push_back(std::move(e));
  }
  // Closing the simple roots under the simple reflections, skipping the one
  // negative image s(alpha_s), produces exactly the positive roots.
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (int s = 0; s < n; ++s) {
      if ((int)i == s) continue;
      auto r = reflect(s, roots[i]);
      auto k = key_of(r);
      if (!index.count(k)) {
        index[k] = (int)roots.size();
        roots.push_back(std::move(r));
      }
    }
  }
  npos_ = (int)roots.size();
  if (2 * npos_ > 65535) throw std::runtime_error("root system too large");

  root_support_.resize(npos_);
  for (int i = 0; i < npos_; ++i) {
    SubsetJ sup;
    for (int j = 0; j < n; ++j)
      if (!roots[i][j].is_zero()) sup.add(j);
    root_support_[i] = sup;
  }

  simple_action_.assign(n, std::vector<std::uint16_t>(2 * npos_));
  for (int s = 0; s < n; ++s) {
    auto& act = simple_action_[s];
    for (int i = 0; i < npos_; ++i) {
      int j;
      if (i == s) {
        j = s + npos_;  // s(alpha_s) = -alpha_s
      } else {
        auto r = reflect(s, roots[i]);
        auto it = index.find(key_of(r));
        if (it == index.end()) throw std::logic_error("root closure incomplete");
        j = it->second;
      }
      act[i] = (std::uint16_t)j;
      act[i + npos_] = (std::uint16_t)((j + npos_) % (2 * npos_));
    }
  }
}

Element CoxeterSystem::identity() const {
  std::vector<std::uint16_t> p(2 * npos_);
  for (int i = 0; i < 2 * npos_; ++i) p[i] = (std::uint16_t)i;
  return Element(this, std::move(p));
}

Element CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank()) throw std::invalid_argument("generator index out of range");
  return Element(this, simple_action_[s]);
}

const ElementStore& CoxeterSystem::store() const {
  std::call_once(store_once_, [this] {
    if (order_ > budget_) throw BudgetExceeded(order_);
    auto st = std::make_unique<ElementStore>();
    st->build(*this);
    store_ = std::move(st);
  });
  if (!store_) throw BudgetExceeded(order_);
  return *store_;
}

// ---------------------------------------------------------------- store

void ElementStore::insert_index(std::uint64_t h, std::uint32_t idx) {
  auto [it, fresh] = first_.try_emplace(h, idx);
  if (!fresh) overflow_.emplace(h, idx);
}

std::uint32_t ElementStore::index_of_perm(const std::uint16_t* p) const {
  std::uint64_t h = perm_hash(p, perm_len_);
  auto it = first_.find(h);
  if (it != first_.end() &&
      std::memcmp(perm(it->second), p, perm_len_ * sizeof(std::uint16_t)) == 0)
    return it->second;
  auto [lo, hi] = overflow_.equal_range(h);
  for (auto j = lo; j != hi; ++j)
    if (std::memcmp(perm(j->second), p, perm_len_ * sizeof(std::uint16_t)) == 0)
      return j->second;
  throw std::logic_error("index_of_perm: element not in store");
}

std::uint32_t ElementStore::mul(std::uint32_t a, std::uint32_t b) const {
  Perm r(perm_len_);
  compose_into(perm(a), perm(b), r.data(), perm_len_);
  return index_of_perm(r.data());
}

Element ElementStore::element(std::uint32_t i) const {
  return Element(sys_, Perm(perm(i), perm(i) + perm_len_));
}

void ElementStore::build(const CoxeterSystem& sys) {
  sys_ = &sys;
  rank_ = sys.rank();
  perm_len_ = sys.num_roots();

  auto push = [&](const Perm& p, int len) {
    std::uint32_t idx = count_++;
    perms_.insert(perms_.end(), p.begin(), p.end());
    len_.push_back((std::uint16_t)len);
    insert_index(perm_hash(p.data(), perm_len_), idx);
    return idx;
  };

  Perm id(perm_len_);
  for (int i = 0; i < perm_len_; ++i) id[i] = (std::uint16_t)i;
  push(id, 0);

  auto known = [&](const Perm& p) {
    std::uint64_t h = perm_hash(p.data(), perm_len_);
    auto it = first_.find(h);
    if (it != first_.end() &&
        std::memcmp(perm(it->second), p.data(), perm_len_ * 2) == 0)
      return true;
    auto [lo, hi] = overflow_.equal_range(h);
    for (auto j = lo; j != hi; ++j)
      if (std::memcmp(perm(j->second), p.data(), perm_len_ * 2) == 0) return true;
    return false;
  };

  std::vector<std::uint32_t> level = {0};
  int len = 0;
  while (!level.empty()) {
    ++len;
    // Collect the next level, then sort it by lexicographic reduced word so
    // the enumeration order is reproducible.
    std::vector<std::pair<std::vector<int>, Perm>> next;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;
    for (std::uint32_t w : level) {
      Perm base(perm(w), perm(w) + perm_len_);
      for (int s = 0; s < rank_; ++s) {
        Perm p = compose(sys.simple_action(s), base);
        if (known(p)) continue;
        std::uint64_t h = perm_hash(p.data(), perm_len_);
        bool dup = false;
        for (std::uint32_t k : seen[h])
          if (next[k].second == p) { dup = true; break; }
        if (dup) continue;
        seen[h].push_back((std::uint32_t)next.size());
        next.emplace_back(word_of_perm(sys, p), std::move(p));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [word, p] : next) level.push_back(push(p, len));
  }
  if (count_ != sys.order())
    throw std::logic_error("enumeration count disagrees with group order");

  gen_idx_.resize(rank_);
  for (int s = 0; s < rank_; ++s) gen_idx_[s] = index_of_perm(sys.simple_action(s).data());

  inv_.resize(count_);
  for (std::uint32_t i = 0; i < count_; ++i) {
    Perm p(perm(i), perm(i) + perm_len_);
    inv_[i] = index_of_perm(invert(p).data());
  }

  gen_left_.resize((std::size_t)count_ * rank_);
  gen_right_.resize((std::size_t)count_ * rank_);
  Perm tmp(perm_len_);
  for (std::uint32_t i = 0; i < count_; ++i) {
    for (int s = 0; s < rank_; ++s) {
      compose_into(sys.simple_action(s).data(), perm(i), tmp.data(), perm_len_);
      gen_left_[(std::size_t)i * rank_ + s] = index_of_perm(tmp.data());
      compose_into(perm(i), sys.simple_action(s).data(), tmp.data(), perm_len_);
      gen_right_[(std::size_t)i * rank_ + s] = index_of_perm(tmp.data());
    }
  }
}

// ---------------------------------------------------------------- elements

bool Element::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

Element operator*(const Element& a, const Element& b) {
  if (a.system_ptr() != b.system_ptr())
    throw std::invalid_argument("cannot multiply elements of different systems");
  return Element(a.system_ptr(), compose(a.perm(), b.perm()));
}

Element inverse(const Element& w) {
  return Element(w.system_ptr(), invert(w.perm()));
}

int length(const Element& w) {
  int npos = w.system().num_positive_roots();
  int l = 0;
  for (int i = 0; i < npos; ++i)
    if (w.perm()[i] >= npos) ++l;
  return l;
}

SubsetJ descent_set(const Element& w) {
  int npos = w.system().num_positive_roots();
  Perm inv = invert(w.perm());
  SubsetJ d;
  for (int s = 0; s < w.system().rank(); ++s)
    if (inv[s] >= npos) d.add(s);
  return d;
}

SubsetJ ascent_set(const Element& w) {
  return descent_set(w).complement(w.system().rank());
}

SubsetJ right_descent_set(const Element& w) {
  int npos = w.system().num_positive_roots();
  SubsetJ d;
  for (int s = 0; s < w.system().rank(); ++s)
    if (w.perm()[s] >= npos) d.add(s);
  return d;
}

std::vector<int> reduce_word(const Element& w) {
  return word_of_perm(w.system(), w.perm());
}

Element word_to_element(const CoxeterSystem& sys, const std::vector<int>& word) {
  Element acc = sys.identity();
  for (int s : word) acc = acc * sys.generator(s);
  return acc;
}

Element longest_element(const CoxeterSystem& sys, SubsetJ J) {
  Element x = sys.identity();
  int npos = sys.num_positive_roots();
  for (;;) {
    Perm inv = invert(x.perm());
    int pick = -1;
    for (int s = 0; s < sys.rank(); ++s)
      if (J.contains(s) && inv[s] < npos) { pick = s; break; }
    if (pick < 0) break;
    x = sys.generator(pick) * x;
  }
  return x;
}

bool in_parabolic(const Element& w, SubsetJ J) {
  int npos = w.system().num_positive_roots();
  for (int i = 0; i < npos; ++i)
    if (w.perm()[i] >= npos && !w.system().root_support(i).subset_of(J))
      return false;
  return true;
}

// ---------------------------------------------------------------- sets

IndexSet make_index_set(std::vector<std::uint32_t> elems, std::uint32_t universe) {
  IndexSet s;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.mask.assign(universe, false);
  for (std::uint32_t i : elems) s.mask[i] = true;
  s.elems = std::move(elems);
  return s;
}

IndexSet generated_subgroup(const ElementStore& st,
                            const std::vector<std::uint32_t>& gens,
                            std::uint64_t cap) {
  IndexSet s;
  s.mask.assign(st.size(), false);
  std::vector<std::uint32_t> queue = {0};
  s.mask[0] = true;
  std::vector<std::uint32_t> out = {0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint32_t x = queue[q];
    for (std::uint32_t g : gens) {
      std::uint32_t y = st.mul(x, g);
      if (!s.mask[y]) {
        s.mask[y] = true;
        out.push_back(y);
        queue.push_back(y);
        if (cap > 0 && out.size() > cap) {
          s.truncated = true;
          std::sort(out.begin(), out.end());
          s.elems = std::move(out);
          return s;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  s.elems = std::move(out);
  return s;
}

}  // namespace cox
