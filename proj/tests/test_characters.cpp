#include <bit>
#include <random>
#include <vector>

#include "doctest.h"

#include "coxeter/characters.hpp"
#include "coxeter/complement.hpp"
#include "helpers.hpp"

using namespace cox;

TEST_CASE("fixed-point counts from the definition") {
  const CoxeterSystem& a1 = sys_of("A1");
  CHECK(pi_J(a1, 0, SubsetJ(0)) == 2);
  CHECK(pi_J(a1, 1, SubsetJ(0)) == 0);
  CHECK(pi_J(a1, 0, SubsetJ(1)) == 1);
  CHECK(pi_J(a1, 1, SubsetJ(1)) == 1);

  const CoxeterSystem& b3 = sys_of("B3");
  const ElementStore& st = b3.store();
  SubsetJ full = SubsetJ::full(3);
  for (std::uint32_t w = 0; w < st.size(); w += 5) CHECK(pi_J(b3, w, full) == 1);
  for (std::uint32_t jb = 0; jb < 8; ++jb)
    CHECK(pi_J(b3, 0, SubsetJ(jb)) ==
          st.size() / parabolic_elements(b3, SubsetJ(jb)).size());
}

TEST_CASE("tabulated values match the definition and are class functions") {
  const CoxeterSystem& sys = sys_of("B3");
  ConjClassTable t = conjugacy_classes(sys);
  CharacterValueTable tab = character_table(sys, t);
  std::mt19937 rng(777);
  for (std::size_t ci = 0; ci < t.classes.size(); ++ci) {
    const ConjClassRecord& rec = t.classes[ci];
    for (std::uint32_t jb = 0; jb < 8; ++jb)
      CHECK(tab.pi[ci][jb] == pi_J(sys, rec.rep_min, SubsetJ(jb)));
    // and on an arbitrary (generally non-minimal) member
    std::uint32_t other = rec.members[rng() % rec.members.size()];
    for (std::uint32_t jb = 0; jb < 8; ++jb)
      CHECK(tab.pi[ci][jb] == pi_J(sys, other, SubsetJ(jb)));
    CHECK(tab.eps[ci] == (sys.store().length(rec.rep_min) % 2 ? -1 : 1));
  }
}

TEST_CASE("alternating sums collapse to the sign character") {
  for (const char* spec :
       {"A1", "A3", "B3", "D4", "H3", "F4", "I2:3", "I2:5", "I2:7", "I2:8"}) {
    CAPTURE(spec);
    CHECK(solomon_check(sys_of(spec)));
  }
}

TEST_CASE("binomial collapse over subset intervals") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + rng() % 10;
    std::uint32_t A = rng() & ((1u << n) - 1);
    std::uint32_t B = A | (rng() & ((1u << n) - 1));
    long long sum = 0;
    std::uint32_t extra = B & ~A;
    for (std::uint32_t sub = 0;; sub = (sub - extra) & extra) {
      sum += std::popcount(A | sub) % 2 ? -1 : 1;
      if (sub == extra) break;
    }
    long long expect = A == B ? (std::popcount(A) % 2 ? -1 : 1) : 0;
    CHECK(sum == expect);
  }
}

TEST_CASE("letter-set parity of minimal representatives") {
  for (const char* spec : {"B3", "D4", "H3"}) {
    const CoxeterSystem& sys = sys_of(spec);
    const ElementStore& st = sys.store();
    ConjClassTable t = conjugacy_classes(sys);
    std::uint32_t w0 = st.index_of(longest_element(sys, SubsetJ::full(sys.rank())));
    CAPTURE(spec);
    for (const ConjClassRecord& rec : t.classes) {
      CHECK(rec.J.size() % 2 == st.length(rec.rep_min) % 2);
      // |A(w0 * w_J)| = |J| -- the final count in the alternating-sum proof
      std::uint32_t wj = st.index_of(longest_element(sys, rec.J));
      CHECK(ascent_set(st.element(st.mul(w0, wj))).size() == rec.J.size());
    }
  }
}

TEST_CASE("descent and ascent witnesses are unique") {
  const CoxeterSystem& sys = sys_of("B3");
  const ElementStore& st = sys.store();
  std::uint32_t w0 = st.index_of(longest_element(sys, SubsetJ::full(3)));
  Theorem3Witness id = theorem3_check(sys, 0);
  CHECK(id.ok);
  CHECK(id.v_descent == 0);
  CHECK(id.v_ascent == w0);
  Theorem3Witness top = theorem3_check(sys, w0);  // -1 is central in B3
  CHECK(top.ok);
  CHECK(top.v_descent == w0);
  CHECK(top.v_ascent == 0);
  ConjClassTable t = conjugacy_classes(sys);
  for (const ConjClassRecord& rec : t.classes)
    CHECK(theorem3_check(sys, rec.rep_min).ok);
  for (const ConjClassRecord& rec : conjugacy_classes(sys_of("D4")).classes)
    CHECK(theorem3_check(sys_of("D4"), rec.rep_min).ok);
}

TEST_CASE("series coefficients of permutation monomials") {
  CHECK(macmahon_series_coefficient(1, {1}, 1) == Rat(1));
  CHECK(macmahon_series_coefficient(2, {2, 1}, 2) == Rat(1));
  CHECK(macmahon_series_coefficient(2, {2, 1}, 5) == Rat(1));  // stable in order
  std::vector<int> p = {1, 2, 3};
  do CHECK(macmahon_series_coefficient(3, p, 3) == Rat(1));
  while (std::next_permutation(p.begin(), p.end()));
  CHECK_THROWS_AS(macmahon_series_coefficient(3, {1, 2, 3}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(macmahon_series_coefficient(7, {1, 2, 3, 4, 5, 6, 7}, 7),
                  std::invalid_argument);
}

TEST_CASE("restricted determinant sums against coset fixed points") {
  CHECK(merris_watkins_coefficient(3, {3}, {1, 2, 3}) == 1);
  CHECK_THROWS_AS(merris_watkins_coefficient(3, {1, 1}, {1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(merris_watkins_coefficient(3, {0, 3}, {1, 2, 3}),
                  std::invalid_argument);

  const CoxeterSystem& a3 = sys_of("A3");
  const ElementStore& st = a3.store();
  std::vector<std::vector<int>> comps = {{4}, {1, 3}, {3, 1}, {2, 2},
                                         {1, 1, 2}, {1, 2, 1}, {2, 1, 1},
                                         {1, 1, 1, 1}};
  std::vector<int> w = {1, 2, 3, 4};
  do {
    std::uint32_t wi = st.index_of(to_element(a3, SignedPermutation(w)));
    int sign = st.length(wi) % 2 ? -1 : 1;
    for (const auto& comp : comps) {
      SubsetJ J = composition_to_J(4, comp);
      CHECK(merris_watkins_coefficient(4, comp, w) ==
            sign * (long long)pi_J(a3, wi, J));
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("the bridge back to the alternating sum") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(macmahon_solomon_bridge(n));
  }
}
