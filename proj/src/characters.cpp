#include "coxeter/characters.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "coxeter/complement.hpp"
#include "coxeter/parabolic.hpp"

namespace cox {

std::uint64_t pi_J(const CoxeterSystem& sys, std::uint32_t w, SubsetJ J) {
  const ElementStore& st = sys.store();
  std::uint64_t count = 0;
  for (std::uint32_t x : min_coset_reps(sys, J)) {
    std::uint32_t c = st.mul(st.mul(x, w), st.inverse(x));
    if (support_of(st, c).subset_of(J)) ++count;
  }
  return count;
}

CharacterValueTable character_table(const CoxeterSystem& sys,
                                    const ConjClassTable& t) {
  const ElementStore& st = sys.store();
  int rank = sys.rank();
  std::vector<SubsetJ> masks = support_masks(st);
  std::uint32_t nsub = 1u << rank;
  std::vector<std::uint64_t> wj_order(nsub);
  for (std::uint32_t jb = 0; jb < nsub; ++jb)
    wj_order[jb] = parabolic_elements(sys, SubsetJ(jb)).size();

  CharacterValueTable tab;
  for (const ConjClassRecord& rec : t.classes) {
    std::uint64_t cw = sys.order() / rec.class_size;
    std::vector<std::uint64_t> row(nsub);
    for (std::uint32_t jb = 0; jb < nsub; ++jb) {
      SubsetJ J(jb);
      std::uint64_t inside = 0;
      for (std::uint32_t m : rec.members)
        if (masks[m].subset_of(J)) ++inside;
      row[jb] = cw * inside / wj_order[jb];
    }
    tab.pi.push_back(std::move(row));
    tab.eps.push_back(st.length(rec.rep_min) % 2 ? -1 : 1);
  }
  return tab;
}

std::string character_table_csv(const CoxeterSystem& sys,
                                const ConjClassTable& t,
                                const CharacterValueTable& tab) {
  const ElementStore& st = sys.store();
  std::uint32_t nsub = 1u << sys.rank();
  std::ostringstream out;
  out << "rep_word";
  for (std::uint32_t jb = 0; jb < nsub; ++jb) out << ",pi_J" << jb;
  out << ",eps\n";
  for (std::size_t ci = 0; ci < t.classes.size(); ++ci) {
    std::string word;
    for (int s : reduce_word(st.element(t.classes[ci].rep_min)))
      word += std::to_string(s + 1);
    out << (word.empty() ? "e" : word);
    for (std::uint32_t jb = 0; jb < nsub; ++jb) out << "," << tab.pi[ci][jb];
    out << "," << tab.eps[ci] << "\n";
  }
  return out.str();
}

bool solomon_check(const CoxeterSystem& sys) {
  ConjClassTable t = conjugacy_classes(sys);
  CharacterValueTable tab = character_table(sys, t);
  std::uint32_t nsub = 1u << sys.rank();
  for (std::size_t ci = 0; ci < t.classes.size(); ++ci) {
    long long sum = 0;
    for (std::uint32_t jb = 0; jb < nsub; ++jb) {
      int sign = std::popcount(jb) % 2 ? -1 : 1;
      sum += sign * (long long)tab.pi[ci][jb];
    }
    if (sum != tab.eps[ci]) return false;
  }
  // class-function spot check on random (usually non-minimal) elements
  std::mt19937 rng(12345);
  for (std::size_t ci = 0; ci < t.classes.size(); ++ci) {
    const auto& mem = t.classes[ci].members;
    std::uint32_t w = mem[rng() % mem.size()];
    for (int trial = 0; trial < 2; ++trial) {
      SubsetJ J(rng() % nsub);
      if (pi_J(sys, w, J) != tab.pi[ci][J.bits]) return false;
    }
  }
  return true;
}

Theorem3Witness theorem3_check(const CoxeterSystem& sys, std::uint32_t w_min) {
  const ElementStore& st = sys.store();
  int npos = sys.num_positive_roots();
  int rank = sys.rank();
  std::vector<SubsetJ> masks = support_masks(st);
  SubsetJ J = masks[w_min];
  std::uint32_t expect_d = st.index_of(longest_element(sys, J));
  std::uint32_t w0 = st.index_of(longest_element(sys, SubsetJ::full(rank)));
  std::uint32_t expect_a = st.mul(expect_d, w0);

  Theorem3Witness res;
  int nd = 0, na = 0;
  for (std::uint32_t v = 0; v < st.size(); ++v) {
    SubsetJ jwv = masks[st.conj(w_min, v)];
    // D(v^{-1}) = right descents of v; read off the permutation directly.
    SubsetJ dv;
    const std::uint16_t* p = st.perm(v);
    for (int s = 0; s < rank; ++s)
      if (p[s] >= npos) dv.add(s);
    if (jwv == dv) {
      ++nd;
      res.v_descent = v;
    }
    if (jwv == dv.complement(rank)) {
      ++na;
      res.v_ascent = v;
    }
  }
  res.ok = nd == 1 && na == 1 && res.v_descent == expect_d &&
           res.v_ascent == expect_a;
  return res;
}

namespace {

SparsePolynomial macmahon_base(int n) {
  SparsePolynomial P(n);
  for (std::uint32_t ib = 1; ib < (1u << n); ++ib) {
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if ((ib >> i) & 1) I.push_back(i);
    SparsePolynomial d = SparsePolynomial::det_submatrix(n, I);
    Rat sign(I.size() % 2 ? 1 : -1);  // (-1)^{|I|-1}
    for (auto& [m, c] : d.terms()) P.add_term(m, c * sign);
  }
  return P;
}

}  // namespace

Rat macmahon_series_coefficient(int n, const std::vector<int>& w, int order) {
  if (n < 1 || n > 6) throw std::invalid_argument("n out of range");
  if (order < n) throw std::invalid_argument("truncation order below n");
  SparsePolynomial P = macmahon_base(n);
  SparsePolynomial acc = SparsePolynomial::constant(n, Rat(1));
  SparsePolynomial pk = SparsePolynomial::constant(n, Rat(1));
  for (int k = 1; k <= order; ++k) {
    pk = pk.mul(P, n);
    acc = acc + pk;
  }
  return acc.coeff(SparsePolynomial::perm_monomial(n, w));
}

namespace {

void partition_sum(int n, const std::vector<int>& comp, std::size_t j,
                   std::uint32_t remaining, const SparsePolynomial& prod,
                   std::uint64_t target, Rat* total) {
  if (j == comp.size()) {
    *total += prod.coeff(target);
    return;
  }
  // all subsets of `remaining` of size comp[j]
  std::vector<int> rem;
  for (int i = 0; i < n; ++i)
    if ((remaining >> i) & 1) rem.push_back(i);
  int k = comp[j];
  if ((int)rem.size() < k) return;
  std::vector<int> pick(k);
  std::function<void(int, int)> choose = [&](int from, int depth) {
    if (depth == k) {
      std::vector<int> I(pick);
      std::uint32_t used = 0;
      for (int i : I) used |= 1u << i;
      SparsePolynomial next =
          prod.mul(SparsePolynomial::det_submatrix(n, I), n);
      partition_sum(n, comp, j + 1, remaining & ~used, next, target, total);
      return;
    }
    for (int i = from; i <= (int)rem.size() - (k - depth); ++i) {
      pick[depth] = rem[i];
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
}

}  // namespace

long long merris_watkins_coefficient(int n, const std::vector<int>& comp,
                                     const std::vector<int>& w) {
  if (n < 1 || n > 6) throw std::invalid_argument("n out of range");
  int sum = 0;
  for (int c : comp) {
    if (c < 1) throw std::invalid_argument("composition parts must be >= 1");
    sum += c;
  }
  if (sum != n) throw std::invalid_argument("composition does not sum to n");
  Rat total(0);
  partition_sum(n, comp, 0, (1u << n) - 1,
                SparsePolynomial::constant(n, Rat(1)),
                SparsePolynomial::perm_monomial(n, w), &total);
  if (!total.is_integer()) throw std::logic_error("non-integer coefficient");
  return total.num();
}

namespace {

void all_compositions(int n, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= n; ++p) {
    cur.push_back(p);
    all_compositions(n - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool macmahon_solomon_bridge(int n) {
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  all_compositions(n, cur, comps);

  std::vector<std::vector<int>> perms;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  if (n <= 4) {
    std::vector<int> p = id;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    std::mt19937 rng(20240917);
    for (int i = 0; i < 20; ++i) {
      std::vector<int> p = id;
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(p);
    }
  }
  for (const std::vector<int>& w : perms) {
    long long sum = 0;
    for (const std::vector<int>& comp : comps) {
      int sign = (n - (int)comp.size()) % 2 ? -1 : 1;
      sum += sign * merris_watkins_coefficient(n, comp, w);
    }
    if (sum != 1) return false;
  }
  return true;
}

SubsetJ composition_to_J(int n, const std::vector<int>& comp) {
  SubsetJ J = SubsetJ::full(n - 1);
  int acc = 0;
  for (std::size_t j = 0; j + 1 < comp.size(); ++j) {
    acc += comp[j];
    J.bits &= ~(1u << (acc - 1));
  }
  return J;
}

}  // namespace cox
