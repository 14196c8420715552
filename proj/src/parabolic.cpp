#include "coxeter/parabolic.hpp"

namespace cox {

namespace {

inline bool is_left_descent(const ElementStore& st, int npos, std::uint32_t w, int s) {
  return st.perm(st.inverse(w))[s] >= npos;
}

}  // namespace

IndexSet parabolic_elements(const CoxeterSystem& sys, SubsetJ J) {
  const ElementStore& st = sys.store();
  std::vector<std::uint32_t> gens;
  for (int s : J.members()) gens.push_back(st.gen_index(s));
  return generated_subgroup(st, gens);
}

std::vector<std::uint32_t> min_coset_reps(const CoxeterSystem& sys, SubsetJ J) {
  const ElementStore& st = sys.store();
  int npos = sys.num_positive_roots();
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < st.size(); ++x) {
    bool ok = true;
    for (int s : J.members())
      if (is_left_descent(st, npos, x, s)) { ok = false; break; }
    if (ok) reps.push_back(x);
  }
  return reps;
}

CosetDecomposition decompose(const Element& w, SubsetJ J) {
  const CoxeterSystem& sys = w.system();
  Element u = sys.identity();
  Element x = w;
  for (;;) {
    SubsetJ d = descent_set(x) & J;
    if (d.empty()) break;
    int s = d.members().front();
    u = u * sys.generator(s);
    x = sys.generator(s) * x;
  }
  return {u, x};
}

std::uint32_t coset_rep_index(const ElementStore& st, std::uint32_t w, SubsetJ J) {
  int npos = st.system().num_positive_roots();
  for (;;) {
    int pick = -1;
    for (int s : J.members())
      if (is_left_descent(st, npos, w, s)) { pick = s; break; }
    if (pick < 0) return w;
    w = st.mul_gen_left(pick, w);
  }
}

std::vector<std::uint32_t> double_coset_reps(const CoxeterSystem& sys, SubsetJ J,
                                             SubsetJ K) {
  const ElementStore& st = sys.store();
  int npos = sys.num_positive_roots();
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x : min_coset_reps(sys, J)) {
    bool ok = true;
    for (int s : K.members())
      if (st.perm(x)[s] >= npos) { ok = false; break; }  // x^{-1} not in X_K
    if (ok) reps.push_back(x);
  }
  return reps;
}

bool conjugate_subset(const ElementStore& st, SubsetJ J, std::uint32_t x,
                      SubsetJ* out) {
  SubsetJ r;
  int rank = st.system().rank();
  for (int s : J.members()) {
    std::uint32_t y = st.conj(st.gen_index(s), x);
    int t = -1;
    for (int g = 0; g < rank; ++g)
      if (st.gen_index(g) == y) { t = g; break; }
    if (t < 0) return false;
    r.add(t);
  }
  *out = r;
  return true;
}

SubsetJ parabolic_intersection(const CoxeterSystem& sys, SubsetJ J,
                               const Element& x, SubsetJ K) {
  const ElementStore& st = sys.store();
  std::uint32_t xi = st.index_of(x);
  int npos = sys.num_positive_roots();
  for (int s : J.members())
    if (is_left_descent(st, npos, xi, s))
      throw std::invalid_argument("parabolic_intersection: x not in X_J");
  for (int s : K.members())
    if (st.perm(xi)[s] >= npos)
      throw std::invalid_argument("parabolic_intersection: x^{-1} not in X_K");
  SubsetJ L;
  for (int s : J.members()) {
    std::uint32_t y = st.conj(st.gen_index(s), xi);
    for (int t : K.members())
      if (st.gen_index(t) == y) L.add(t);
  }
  return L;
}

SubsetJ J_of(const Element& w) {
  SubsetJ j;
  for (int s : reduce_word(w)) j.add(s);
  return j;
}

CosetDecomposition descent_decompose(const Element& w) {
  SubsetJ J = descent_set(w);
  Element wj = longest_element(w.system(), J);
  return {wj, wj * w};  // w_J is an involution, so w_J * w = w_J^{-1} w
}

}  // namespace cox
