#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "coxeter/parabolic.hpp"
#include "helpers.hpp"

using namespace cox;

TEST_CASE("coset representatives partition the group") {
  for (const char* spec : {"A3", "B3"}) {
    const CoxeterSystem& sys = sys_of(spec);
    const ElementStore& st = sys.store();
    CAPTURE(spec);
    for (std::uint32_t jb = 0; jb < (1u << sys.rank()); ++jb) {
      SubsetJ J(jb);
      IndexSet wj = parabolic_elements(sys, J);
      std::vector<std::uint32_t> reps = min_coset_reps(sys, J);
      CHECK(reps.size() * wj.size() == st.size());
      std::set<std::uint32_t> covered;
      for (std::uint32_t x : reps) {
        CHECK((descent_set(st.element(x)) & J).empty());
        for (std::uint32_t u : wj.elems) {
          std::uint32_t w = st.mul(u, x);
          CHECK(st.length(w) == st.length(u) + st.length(x));
          covered.insert(w);
        }
      }
      CHECK(covered.size() == st.size());
    }
  }
}

TEST_CASE("unique reduced decomposition w = u.x") {
  const CoxeterSystem& sys = sys_of("B3");
  const ElementStore& st = sys.store();
  for (std::uint32_t jb = 0; jb < (1u << sys.rank()); ++jb) {
    SubsetJ J(jb);
    for (std::uint32_t i = 0; i < st.size(); ++i) {
      Element w = st.element(i);
      CosetDecomposition d = decompose(w, J);
      CHECK(in_parabolic(d.u, J));
      CHECK((descent_set(d.x) & J).empty());
      CHECK(d.u * d.x == w);
      CHECK(length(d.u) + length(d.x) == length(w));
      CHECK(coset_rep_index(st, i, J) == st.index_of(d.x));
    }
  }
}

TEST_CASE("double coset representatives") {
  const CoxeterSystem& a3 = sys_of("A3");
  SubsetJ J = SubsetJ::of({0, 2});
  CHECK(double_coset_reps(a3, J, J).size() == 3);
  // every element lies in exactly one double coset W_J x W_K
  const CoxeterSystem& b3 = sys_of("B3");
  const ElementStore& st = b3.store();
  SubsetJ K = SubsetJ::of({1, 2});
  for (std::uint32_t jb = 0; jb < 8; ++jb) {
    SubsetJ Jb(jb);
    std::vector<std::uint32_t> reps = double_coset_reps(b3, Jb, K);
    IndexSet wj = parabolic_elements(b3, Jb);
    IndexSet wk = parabolic_elements(b3, K);
    std::set<std::uint32_t> covered;
    for (std::uint32_t x : reps) {
      std::uint32_t best = x;
      for (std::uint32_t u : wj.elems)
        for (std::uint32_t v : wk.elems) {
          std::uint32_t w = st.mul(st.mul(u, x), v);
          covered.insert(w);
          best = std::min(best, w);  // the rep is minimal, hence index-minimal
        }
      CHECK(best == x);
    }
    CHECK(covered.size() == st.size());
  }
}

TEST_CASE("conjugating a subset of the generators") {
  const CoxeterSystem& sys = sys_of("A3");
  const ElementStore& st = sys.store();
  SubsetJ out;
  CHECK(conjugate_subset(st, SubsetJ::of({0, 1}), 0, &out));
  CHECK(out == SubsetJ::of({0, 1}));
  // w0 realizes the diagram flip of A3
  std::uint32_t w0 = st.index_of(longest_element(sys, SubsetJ::full(3)));
  CHECK(conjugate_subset(st, SubsetJ::of({0}), w0, &out));
  CHECK(out == SubsetJ::of({2}));
  CHECK(conjugate_subset(st, SubsetJ::of({1}), w0, &out));
  CHECK(out == SubsetJ::of({1}));
  // a generic conjugate of {s1} is a non-simple reflection
  bool found_bad = false;
  for (std::uint32_t x = 0; x < st.size() && !found_bad; ++x)
    if (!conjugate_subset(st, SubsetJ::of({0, 1}), x, &out)) found_bad = true;
  CHECK(found_bad);
}

TEST_CASE("intersection of parabolic subgroups along a double coset") {
  for (const char* spec : {"A3", "B3"}) {
    const CoxeterSystem& sys = sys_of(spec);
    const ElementStore& st = sys.store();
    CAPTURE(spec);
    for (std::uint32_t jb = 0; jb < (1u << sys.rank()); ++jb)
      for (std::uint32_t kb = 0; kb < (1u << sys.rank()); ++kb) {
        SubsetJ J(jb), K(kb);
        IndexSet wj = parabolic_elements(sys, J);
        IndexSet wk = parabolic_elements(sys, K);
        for (std::uint32_t x : double_coset_reps(sys, J, K)) {
          SubsetJ L = parabolic_intersection(sys, J, st.element(x), K);
          std::vector<std::uint32_t> brute;
          for (std::uint32_t u : wj.elems)
            if (wk.contains(st.conj(u, x))) brute.push_back(st.conj(u, x));
          std::sort(brute.begin(), brute.end());
          CHECK(brute == parabolic_elements(sys, L).elems);
        }
      }
  }
}

TEST_CASE("letter sets match inversion supports") {
  const CoxeterSystem& sys = sys_of("D4");
  const ElementStore& st = sys.store();
  int npos = sys.num_positive_roots();
  for (std::uint32_t i = 0; i < st.size(); ++i) {
    SubsetJ mask;
    const std::uint16_t* p = st.perm(i);
    for (int r = 0; r < npos; ++r)
      if (p[r] >= npos) mask = mask | sys.root_support(r);
    CHECK(J_of(st.element(i)) == mask);
  }
}

TEST_CASE("descent decomposition") {
  const CoxeterSystem& sys = sys_of("B3");
  const ElementStore& st = sys.store();
  for (std::uint32_t i = 0; i < st.size(); ++i) {
    Element w = st.element(i);
    CosetDecomposition d = descent_decompose(w);
    CHECK(d.u == longest_element(sys, descent_set(w)));
    CHECK(d.u * d.x == w);
    CHECK(length(d.u) + length(d.x) == length(w));
  }
}
