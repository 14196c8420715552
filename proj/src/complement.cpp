#include "coxeter/complement.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <unordered_set>

namespace cox {

SubsetJ support_of(const ElementStore& st, std::uint32_t w) {
  const CoxeterSystem& sys = st.system();
  int npos = sys.num_positive_roots();
  SubsetJ m;
  const std::uint16_t* p = st.perm(w);
  for (int r = 0; r < npos; ++r)
    if (p[r] >= npos) m = m | sys.root_support(r);
  return m;
}

bool is_non_compliant_partition(const DoublePartition& lam) {
  if (lam.plus.size() != 1 || lam.plus[0] % 2 == 0) return false;
  if (lam.minus.empty() || lam.minus.size() % 2) return false;
  for (int p : lam.minus)
    if (p % 2) return false;
  return true;
}

namespace {

// multiplicities a_m and offsets o_m (eq. for type A has base 0, B/D base
// |lambda-|).
struct PartLayout {
  int m;
  int mult;
  int offset;
};

std::vector<PartLayout> layouts(const std::vector<int>& plus, int base) {
  std::map<int, int> mult;
  for (int p : plus) ++mult[p];
  std::vector<PartLayout> out;
  int off = base;
  for (auto [m, a] : mult) {
    out.push_back({m, a, off});
    off += m * a;
  }
  return out;
}

std::uint32_t sp_index(const CoxeterSystem& sys, const SignedPermutation& sp) {
  return sys.store().index_of(to_element(sys, sp));
}

std::vector<SignedPermutation> sp_closure(std::vector<SignedPermutation> gens,
                                          int n) {
  std::map<std::vector<int>, bool> seen;
  std::deque<SignedPermutation> q;
  std::vector<SignedPermutation> out;
  SignedPermutation id(n);
  seen[id.images()] = true;
  q.push_back(id);
  out.push_back(id);
  while (!q.empty()) {
    SignedPermutation w = q.front();
    q.pop_front();
    for (const SignedPermutation& g : gens) {
      SignedPermutation v = w * g;
      if (seen.emplace(v.images(), true).second) {
        q.push_back(v);
        out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

IndexSet complement_type_A(const CoxeterSystem& sys,
                           const std::vector<int>& lambda) {
  if (sys.type().family != Family::A)
    throw std::invalid_argument("complement_type_A needs an ambient type A");
  int n = sys.rank() + 1;
  std::vector<int> plus = lambda;
  std::sort(plus.begin(), plus.end());
  DoublePartition lam{plus, {}};
  if (lam.total() != n) throw std::invalid_argument("partition does not sum to n");
  std::vector<std::uint32_t> gens;
  for (const PartLayout& pl : layouts(plus, 0))
    for (int k = 0; k + 1 < pl.mult; ++k)
      gens.push_back(sp_index(sys, block_swap(n, pl.offset + k * pl.m, pl.m)));
  return generated_subgroup(sys.store(), gens);
}

IndexSet complement_type_B(const CoxeterSystem& sys, const DoublePartition& lam) {
  if (sys.type().family != Family::B)
    throw std::invalid_argument("complement_type_B needs an ambient type B");
  int n = sys.rank();
  if (lam.total() != n) throw std::invalid_argument("partition does not sum to n");
  int base = 0;
  for (int p : lam.minus) base += p;
  std::vector<std::uint32_t> gens;
  for (const PartLayout& pl : layouts(lam.plus, base)) {
    gens.push_back(sp_index(sys, block_negate(n, pl.offset, pl.m)));
    for (int k = 0; k + 1 < pl.mult; ++k)
      gens.push_back(sp_index(sys, block_swap(n, pl.offset + k * pl.m, pl.m)));
  }
  return generated_subgroup(sys.store(), gens);
}

IndexSet complement_type_D(const CoxeterSystem& sys, const DoublePartition& lam) {
  if (sys.type().family != Family::D)
    throw std::invalid_argument("complement_type_D needs an ambient type D");
  int n = sys.rank();
  if (lam.total() != n) throw std::invalid_argument("partition does not sum to n");
  if (lam.minus.size() % 2)
    throw std::invalid_argument("lambda- needs an even number of parts");
  bool plus_even = true;
  for (int p : lam.plus)
    if (p % 2) plus_even = false;
  bool minus_even = true;
  for (int p : lam.minus)
    if (p % 2) minus_even = false;
  int base = 0;
  for (int p : lam.minus) base += p;
  auto parts = layouts(lam.plus, base);

  if (plus_even) {  // case (i): N_lambda, already inside W+
    std::vector<std::uint32_t> gens;
    for (const PartLayout& pl : parts) {
      gens.push_back(sp_index(sys, block_negate(n, pl.offset, pl.m)));
      for (int k = 0; k + 1 < pl.mult; ++k)
        gens.push_back(sp_index(sys, block_swap(n, pl.offset + k * pl.m, pl.m)));
    }
    return generated_subgroup(sys.store(), gens);
  }
  if (lam.minus.empty()) {  // case (ii): N_lambda meet W+
    std::vector<SignedPermutation> gens;
    for (const PartLayout& pl : parts) {
      gens.push_back(block_negate(n, pl.offset, pl.m));
      for (int k = 0; k + 1 < pl.mult; ++k)
        gens.push_back(block_swap(n, pl.offset + k * pl.m, pl.m));
    }
    std::vector<std::uint32_t> elems;
    for (const SignedPermutation& sp : sp_closure(gens, n))
      if (sp.num_negatives() % 2 == 0) elems.push_back(sp_index(sys, sp));
    return make_index_set(std::move(elems), sys.store().size());
  }
  if (!minus_even) {  // case (iii): twisted generators
    int k = 0, acc = 0;
    std::vector<int> minus = lam.minus;
    std::sort(minus.begin(), minus.end());
    for (int p : minus) {
      acc += p;
      if (acc % 2) { k = acc; break; }
    }
    SignedPermutation t0k = block_negate(n, 0, k);
    std::vector<std::uint32_t> gens;
    for (const PartLayout& pl : parts) {
      SignedPermutation t = block_negate(n, pl.offset, pl.m);
      gens.push_back(sp_index(sys, pl.m % 2 ? t0k * t : t));
      for (int kk = 0; kk + 1 < pl.mult; ++kk)
        gens.push_back(sp_index(sys, block_swap(n, pl.offset + kk * pl.m, pl.m)));
    }
    return generated_subgroup(sys.store(), gens);
  }
  throw std::invalid_argument(
      "no constructive complement: class is non-compliant");
}

InvolutionGenerators involution_generators_of_NJ(const CoxeterSystem& sys,
                                                 SubsetJ J) {
  const ElementStore& st = sys.store();
  IndexSet nj = normalizer_complement(sys, J);
  InvolutionGenerators out;
  if (nj.size() == 1) return out;
  std::vector<std::uint32_t> invols;
  for (std::uint32_t x : nj.elems)
    if (x != 0 && st.mul(x, x) == 0) invols.push_back(x);
  IndexSet cur = generated_subgroup(st, {});
  auto grow = [&](const std::vector<std::uint32_t>& pool) {
    for (std::uint32_t x : pool) {
      if (cur.size() == nj.size()) break;
      if (cur.contains(x)) continue;
      out.gens.push_back(x);
      cur = generated_subgroup(st, out.gens);
    }
  };
  grow(invols);
  if (cur.size() != nj.size()) {
    out.all_involutions = false;
    grow(nj.elems);
  }
  // prune pass
  for (std::size_t i = 0; i < out.gens.size();) {
    std::vector<std::uint32_t> trial = out.gens;
    trial.erase(trial.begin() + i);
    if (generated_subgroup(st, trial).size() == nj.size())
      out.gens = std::move(trial);
    else
      ++i;
  }
  return out;
}

bool certify_complement(const CoxeterSystem& sys, std::uint32_t w, SubsetJ J,
                        const std::vector<std::uint32_t>& M_elems) {
  const ElementStore& st = sys.store();
  for (std::uint32_t m : M_elems) {
    if (m != 0 && support_of(st, m).subset_of(J)) return false;  // meets W_J
    if (st.conj(w, m) != w) return false;  // not centralizing
  }
  IndexSet c = centralizer(st, w);
  IndexSet cj = centralizer_in_parabolic(st, w, J);
  if ((std::uint64_t)cj.size() * M_elems.size() != c.size()) return false;
  std::vector<bool> hit(st.size(), false);
  std::uint64_t count = 0;
  for (std::uint32_t a : cj.elems)
    for (std::uint32_t m : M_elems) {
      std::uint32_t p = st.mul(a, m);
      if (!c.contains(p)) return false;
      if (!hit[p]) { hit[p] = true; ++count; }
    }
  return count == c.size();
}

ComplementResult centralizer_complement(const CoxeterSystem& sys,
                                        std::uint32_t w) {
  const ElementStore& st = sys.store();
  w = min_length_class_element(st, w).first;
  SubsetJ J = support_of(st, w);
  ComplementResult res;
  {
    IndexSet c = centralizer(st, w);
    IndexSet cj = centralizer_in_parabolic(st, w, J);
    res.quotient = c.size() / cj.size();
  }

  InvolutionGenerators ig = involution_generators_of_NJ(sys, J);
  std::size_t r = ig.gens.size();

  // W_J-class of w with conjugators (v = w^x, x in W_J).
  std::unordered_map<std::uint32_t, std::uint32_t> conj_by;
  conj_by[w] = 0;
  std::deque<std::uint32_t> q{w};
  std::vector<int> jmem = J.members();
  while (!q.empty()) {
    std::uint32_t v = q.front();
    q.pop_front();
    for (int s : jmem) {
      std::uint32_t v2 = st.conj_gen(v, s);
      if (conj_by.emplace(v2, st.mul_gen_right(conj_by[v], s)).second)
        q.push_back(v2);
    }
  }
  std::uint16_t minlen = st.length(w);
  std::vector<std::uint32_t> vmins;
  for (auto& [v, x] : conj_by)
    if (st.length(v) == minlen) vmins.push_back(v);
  std::sort(vmins.begin(), vmins.end());

  // w_L for all L subset of J, ordered by (|L|, bits).
  std::vector<std::pair<SubsetJ, std::uint32_t>> wls;
  {
    std::vector<SubsetJ> subs;
    std::uint32_t jb = J.bits;
    for (std::uint32_t sub = 0;; sub = (sub - jb) & jb) {
      subs.push_back(SubsetJ(sub));
      if (sub == jb) break;
    }
    std::sort(subs.begin(), subs.end(), [](SubsetJ a, SubsetJ b) {
      return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
    });
    for (SubsetJ L : subs)
      wls.emplace_back(L, st.index_of(longest_element(sys, L)));
  }

  IndexSet nj = normalizer_complement(sys, J);
  auto meets_wj = [&](const IndexSet& g) {
    for (std::uint32_t m : g.elems)
      if (m != 0 && support_of(st, m).subset_of(J)) return true;
    return false;
  };

  for (std::uint32_t v : vmins) {
    std::uint32_t u = st.inverse(conj_by[v]);
    std::vector<std::vector<std::uint32_t>> Y(r);
    bool viable = true;
    for (std::size_t i = 0; i < r && viable; ++i) {
      std::uint32_t xi = ig.gens[i];
      std::uint32_t vxi = st.conj(v, xi);
      if (vxi == v) {
        Y[i] = {xi};
      } else {
        for (auto& [L, wL] : wls)
          if (st.conj(xi, wL) == xi && st.conj(v, wL) == vxi)
            Y[i].push_back(st.mul(wL, xi));
        if (Y[i].empty()) viable = false;
      }
    }
    if (!viable) continue;

    std::vector<std::uint32_t> picked;
    std::vector<std::uint32_t> found_M;
    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
      if (depth == r) {
        IndexSet g = generated_subgroup(st, picked, nj.size());
        if (g.truncated || meets_wj(g)) return false;
        found_M = g.elems;
        return true;
      }
      for (std::uint32_t y : Y[depth]) {
        picked.push_back(y);
        ++res.steps;
        IndexSet g = generated_subgroup(st, picked, nj.size());
        if (!g.truncated && !meets_wj(g) && dfs(depth + 1)) return true;
        picked.pop_back();
      }
      return false;
    };
    if (!dfs(0)) continue;

    std::vector<std::uint32_t> Mu, gensu;
    for (std::uint32_t m : found_M) Mu.push_back(st.conj(m, u));
    for (std::uint32_t g : picked) gensu.push_back(st.conj(g, u));
    std::sort(Mu.begin(), Mu.end());
    if (certify_complement(sys, w, J, Mu)) {
      res.found = true;
      res.generators = std::move(gensu);
      res.M = std::move(Mu);
      return res;
    }
  }

  // fail: certify non-existence
  if (res.quotient == 2) {
    if (certify_no_complement_order2(sys, w, J)) {
      res.nonexistence_certified = true;
      res.certificate = "no-involution-in-coset";
    }
  } else if (res.quotient > 1) {
    SearchOutcome o = exhaustive_complement_search(sys, w, J, 5'000'000);
    if (o == SearchOutcome::not_exists) {
      res.nonexistence_certified = true;
      res.certificate = "subgroup-search";
    }
  }
  return res;
}

bool certify_no_complement_order2(const CoxeterSystem& sys, std::uint32_t w,
                                  SubsetJ J) {
  const ElementStore& st = sys.store();
  IndexSet c = centralizer(st, w);
  IndexSet cj = centralizer_in_parabolic(st, w, J);
  if (c.size() != 2 * cj.size())
    throw std::invalid_argument("certify_no_complement_order2: index is not 2");
  for (std::uint32_t x : c.elems)
    if (!cj.contains(x) && st.mul(x, x) == 0) return false;
  return true;
}

SearchOutcome exhaustive_complement_search(const CoxeterSystem& sys,
                                           std::uint32_t w, SubsetJ J,
                                           std::uint64_t budget) {
  const ElementStore& st = sys.store();
  IndexSet c = centralizer(st, w);
  IndexSet cj = centralizer_in_parabolic(st, w, J);
  std::uint64_t q = c.size() / cj.size();
  if (q == 1) return SearchOutcome::exists;

  std::vector<std::uint32_t> cands;
  for (std::uint32_t x : c.elems)
    if (x != 0 && !cj.contains(x)) cands.push_back(x);

  auto key = [](const std::vector<std::uint32_t>& v) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  };
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::vector<std::uint32_t>> bfs;
  bfs.push_back({0});
  seen.insert(key({0}));
  std::uint64_t steps = 0;
  while (!bfs.empty()) {
    std::vector<std::uint32_t> H = std::move(bfs.front());
    bfs.pop_front();
    for (std::uint32_t cand : cands) {
      if (std::binary_search(H.begin(), H.end(), cand)) continue;
      if (++steps > budget) return SearchOutcome::unknown;
      std::vector<std::uint32_t> gens = H;
      gens.push_back(cand);
      IndexSet g = generated_subgroup(st, gens, q);
      if (g.truncated) continue;
      bool clean = true;
      for (std::uint32_t m : g.elems)
        if (m != 0 && (cj.contains(m) || !c.contains(m))) { clean = false; break; }
      if (!clean) continue;
      if ((std::uint64_t)g.size() == q) return SearchOutcome::exists;
      if (seen.insert(key(g.elems)).second) bfs.push_back(std::move(g.elems));
    }
  }
  return SearchOutcome::not_exists;
}

namespace {

std::vector<std::vector<int>> diagram_components(const CoxeterSystem& sys,
                                                 SubsetJ M) {
  const auto& cm = sys.coxeter_matrix();
  std::vector<int> nodes = M.members();
  std::vector<std::vector<int>> comps;
  std::vector<bool> done(sys.rank(), false);
  for (int start : nodes) {
    if (done[start]) continue;
    std::vector<int> comp;
    std::deque<int> q{start};
    done[start] = true;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      comp.push_back(a);
      for (int b : nodes)
        if (!done[b] && cm[a][b] >= 3) {
          done[b] = true;
          q.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// If the induced diagram on comp is of type D_k, fill out[i] with the S-node
// playing standard D node i (0 = u, 1 = s_1, 2 = s_2, ...).
bool d_mapping(const CoxeterSystem& sys, const std::vector<int>& comp,
               std::vector<int>* out) {
  const auto& cm = sys.coxeter_matrix();
  int k = (int)comp.size();
  if (k < 4) return false;
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && cm[comp[i]][comp[j]] >= 3) {
        if (cm[comp[i]][comp[j]] != 3) return false;
        adj[i].push_back(j);
      }
  int fork = -1;
  for (int i = 0; i < k; ++i) {
    if (adj[i].size() > 3) return false;
    if (adj[i].size() == 3) {
      if (fork >= 0) return false;
      fork = i;
    }
  }
  if (fork < 0) return false;
  std::vector<int> leaves, tail;
  for (int nb : adj[fork])
    (adj[nb].size() == 1 ? leaves : tail).push_back(nb);
  if (k == 4) {
    if (leaves.size() != 3) return false;
    tail.push_back(leaves.back());
    leaves.pop_back();
  }
  if (leaves.size() != 2 || tail.size() != 1) return false;
  std::vector<int> order = {comp[leaves[0]], comp[leaves[1]], comp[fork]};
  int prev = fork, cur = tail[0];
  for (;;) {
    order.push_back(comp[cur]);
    int next = -1;
    for (int nb : adj[cur])
      if (nb != prev) {
        if (next >= 0) return false;  // branch in the tail
        next = nb;
      }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  if ((int)order.size() != k) return false;
  *out = std::move(order);
  return true;
}

}  // namespace

bool class_is_non_compliant(const CoxeterSystem& sys, const ConjClassTable& t,
                            std::size_t ci) {
  Family fam = sys.type().family;
  const ConjClassRecord& rec = t.classes[ci];
  if (fam == Family::D) {
    const DoublePartition& lam = *rec.label;
    bool plus_even = true;
    for (int p : lam.plus)
      if (p % 2) plus_even = false;
    bool minus_even = true;
    for (int p : lam.minus)
      if (p % 2) minus_even = false;
    return !plus_even && !lam.minus.empty() && minus_even;
  }
  if (fam != Family::E6 && fam != Family::E7 && fam != Family::E8) return false;

  const ElementStore& st = sys.store();
  int rank = sys.rank();
  std::map<int, std::unique_ptr<CoxeterSystem>> dsys;
  for (std::uint32_t mb = 0; mb < (1u << rank); ++mb) {
    SubsetJ M(mb);
    for (const std::vector<int>& comp : diagram_components(sys, M)) {
      int k = (int)comp.size();
      if (k <= 4 || k % 2 == 0) continue;
      std::vector<int> order;
      if (!d_mapping(sys, comp, &order)) continue;
      std::vector<int> inv(rank, -1);
      for (int i = 0; i < k; ++i) inv[order[i]] = i;
      auto& dk = dsys[k];
      if (!dk) dk = std::make_unique<CoxeterSystem>(CoxeterType{Family::D, k, 0});
      for (std::uint32_t m : rec.members) {
        if (!support_of(st, m).subset_of(M)) continue;
        std::vector<int> word;
        for (int s : reduce_word(st.element(m)))
          if (inv[s] >= 0) word.push_back(inv[s]);
        DoublePartition lam =
            from_element(word_to_element(*dk, word)).cycle_type();
        if (is_non_compliant_partition(lam)) return true;
      }
    }
  }
  return false;
}

}  // namespace cox
