#include "coxeter/conjugacy.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

namespace cox {

std::vector<SubsetJ> support_masks(const ElementStore& st) {
  const CoxeterSystem& sys = st.system();
  int npos = sys.num_positive_roots();
  std::vector<SubsetJ> masks(st.size());
  for (std::uint32_t i = 0; i < st.size(); ++i) {
    SubsetJ m;
    const std::uint16_t* p = st.perm(i);
    for (int r = 0; r < npos; ++r)
      if (p[r] >= npos) m = m | sys.root_support(r);
    masks[i] = m;
  }
  return masks;
}

ConjClassTable conjugacy_classes(const CoxeterSystem& sys) {
  const ElementStore& st = sys.store();
  int rank = sys.rank();
  Family fam = sys.type().family;
  bool classical = fam == Family::A || fam == Family::B || fam == Family::D;
  SubsetJ full = SubsetJ::full(rank);
  std::vector<SubsetJ> masks = support_masks(st);

  ConjClassTable t;
  t.class_of.assign(st.size(), UINT32_MAX);
  for (std::uint32_t start = 0; start < st.size(); ++start) {
    if (t.class_of[start] != UINT32_MAX) continue;
    std::uint32_t ci = (std::uint32_t)t.classes.size();
    ConjClassRecord rec;
    std::deque<std::uint32_t> q{start};
    t.class_of[start] = ci;
    rec.members.push_back(start);
    bool cusp = true;
    while (!q.empty()) {
      std::uint32_t w = q.front();
      q.pop_front();
      if (masks[w] != full) cusp = false;
      for (int s = 0; s < rank; ++s) {
        std::uint32_t v = st.conj_gen(w, s);
        if (t.class_of[v] == UINT32_MAX) {
          t.class_of[v] = ci;
          rec.members.push_back(v);
          q.push_back(v);
        }
      }
    }
    std::sort(rec.members.begin(), rec.members.end());
    rec.rep_min = rec.members.front();  // store order is (length, lex word)
    rec.class_size = rec.members.size();
    rec.J = masks[rec.rep_min];
    rec.cuspidal = cusp;
    t.classes.push_back(std::move(rec));
  }

  if (classical) {
    for (ConjClassRecord& rec : t.classes) {
      DoublePartition lam = from_element(st.element(rec.rep_min)).cycle_type();
      rec.label = lam;
      if (fam == Family::D && lam.minus.empty()) {
        bool all_even = true;
        for (int p : lam.plus)
          if (p % 2) all_even = false;
        if (all_even) {
          std::uint32_t wl = st.index_of(to_element(sys, w_lambda(lam)));
          rec.primed = t.class_of[wl] != (std::uint32_t)(&rec - t.classes.data());
        }
      }
    }
  }
  return t;
}

IndexSet centralizer(const ElementStore& st, std::uint32_t w) {
  std::vector<std::uint32_t> elems;
  for (std::uint32_t x = 0; x < st.size(); ++x)
    if (st.conj(w, x) == w) elems.push_back(x);
  return make_index_set(std::move(elems), st.size());
}

IndexSet centralizer_in_parabolic(const ElementStore& st, std::uint32_t w,
                                  SubsetJ J) {
  IndexSet wj = parabolic_elements(st.system(), J);
  std::vector<std::uint32_t> elems;
  for (std::uint32_t x : wj.elems)
    if (st.conj(w, x) == w) elems.push_back(x);
  return make_index_set(std::move(elems), st.size());
}

IndexSet normalizer_of_parabolic(const CoxeterSystem& sys, SubsetJ J) {
  const ElementStore& st = sys.store();
  IndexSet wj = parabolic_elements(sys, J);
  std::vector<std::uint32_t> elems;
  for (std::uint32_t x = 0; x < st.size(); ++x) {
    bool ok = true;
    for (int s : J.members())
      if (!wj.contains(st.conj(st.gen_index(s), x))) { ok = false; break; }
    if (ok) elems.push_back(x);
  }
  return make_index_set(std::move(elems), st.size());
}

IndexSet normalizer_complement(const CoxeterSystem& sys, SubsetJ J) {
  const ElementStore& st = sys.store();
  std::vector<std::uint32_t> elems;
  for (std::uint32_t x : min_coset_reps(sys, J)) {
    SubsetJ out;
    if (conjugate_subset(st, J, x, &out) && out == J) elems.push_back(x);
  }
  return make_index_set(std::move(elems), st.size());
}

std::pair<std::uint32_t, std::uint32_t> min_length_class_element(
    const ElementStore& st, std::uint32_t w) {
  int rank = st.system().rank();
  std::unordered_map<std::uint32_t, std::uint32_t> conj_by;  // v -> x, v = w^x
  conj_by[w] = 0;
  std::deque<std::uint32_t> q{w};
  std::uint32_t best = w;
  while (!q.empty()) {
    std::uint32_t v = q.front();
    q.pop_front();
    for (int s = 0; s < rank; ++s) {
      std::uint32_t v2 = st.conj_gen(v, s);
      if (conj_by.emplace(v2, st.mul_gen_right(conj_by[v], s)).second) {
        q.push_back(v2);
        if (v2 < best) best = v2;
      }
    }
  }
  return {best, conj_by[best]};
}

bool verify_theorem2(const CoxeterSystem& sys, std::uint32_t w_min) {
  const ElementStore& st = sys.store();
  SubsetJ J = support_masks(st)[w_min];
  IndexSet cw = centralizer(st, w_min);
  IndexSet wj = parabolic_elements(sys, J);
  IndexSet nw = normalizer_of_parabolic(sys, J);
  std::vector<bool> prod(st.size(), false);
  std::uint64_t count = 0;
  for (std::uint32_t c : cw.elems)
    for (std::uint32_t u : wj.elems) {
      std::uint32_t p = st.mul(c, u);
      if (!prod[p]) { prod[p] = true; ++count; }
    }
  if (count != nw.size()) return false;
  for (std::uint32_t x : nw.elems)
    if (!prod[x]) return false;
  return true;
}

std::string class_table_json(const CoxeterSystem& sys, const ConjClassTable& t) {
  const ElementStore& st = sys.store();
  nlohmann::ordered_json out;
  out["schema_version"] = 1;
  out["engine_version"] = kEngineVersion;
  out["group"] = sys.type().str();
  out["order"] = sys.order();
  auto& cls = out["classes"] = nlohmann::ordered_json::array();
  for (const ConjClassRecord& rec : t.classes) {
    nlohmann::ordered_json c;
    std::vector<int> word;
    for (int s : reduce_word(st.element(rec.rep_min))) word.push_back(s + 1);
    c["rep_word"] = word;
    c["size"] = rec.class_size;
    std::vector<int> jm;
    for (int s : rec.J.members()) jm.push_back(s + 1);
    c["J"] = jm;
    c["cuspidal"] = rec.cuspidal;
    if (rec.label) {
      c["label_plus"] = rec.label->plus;
      c["label_minus"] = rec.label->minus;
      if (rec.primed) c["primed"] = true;
    }
    c["non_compliant"] = rec.non_compliant;
    cls.push_back(std::move(c));
  }
  return out.dump(2) + "\n";
}

}  // namespace cox
