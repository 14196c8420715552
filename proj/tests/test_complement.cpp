#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "coxeter/complement.hpp"
#include "helpers.hpp"

using namespace cox;

namespace {

std::uint32_t class_index_of(const CoxeterSystem& sys, const ConjClassTable& t,
                             const SignedPermutation& sp) {
  return t.class_of[sys.store().index_of(to_element(sys, sp))];
}

}  // namespace

TEST_CASE("the partition criterion") {
  auto nc = [](const char* lam) {
    return is_non_compliant_partition(DoublePartition::parse(lam));
  };
  CHECK(nc("1;2,2"));
  CHECK(nc("3;2,4"));
  CHECK(nc("5;2,2,4,4"));
  CHECK_FALSE(nc("2;2,2"));      // even positive part
  CHECK_FALSE(nc("1,1;2,2"));    // two positive parts
  CHECK_FALSE(nc("1;2"));        // odd number of negative parts
  CHECK_FALSE(nc("1;2,3"));      // odd negative part
  CHECK_FALSE(nc("3"));          // no negative parts
  CHECK_FALSE(nc(";2,2"));       // no positive part
}

TEST_CASE("non-compliant classes are exactly where expected") {
  for (const char* spec : {"A4", "B3", "B4", "D4", "H3", "F4"}) {
    const CoxeterSystem& sys = sys_of(spec);
    ConjClassTable t = conjugacy_classes(sys);
    CAPTURE(spec);
    for (std::size_t ci = 0; ci < t.classes.size(); ++ci)
      CHECK_FALSE(class_is_non_compliant(sys, t, ci));
  }
  const CoxeterSystem& d5 = sys_of("D5");
  ConjClassTable t5 = conjugacy_classes(d5);
  std::uint32_t bad =
      class_index_of(d5, t5, w_lambda(DoublePartition::parse("1;2,2")));
  for (std::size_t ci = 0; ci < t5.classes.size(); ++ci)
    CHECK(class_is_non_compliant(d5, t5, ci) == (ci == bad));
}

TEST_CASE("the order-32 centralizer over its order-16 parabolic part") {
  const CoxeterSystem& sys = sys_of("D5");
  const ElementStore& st = sys.store();
  std::uint32_t w =
      st.index_of(to_element(sys, w_lambda(DoublePartition::parse("1;2,2"))));
  w = min_length_class_element(st, w).first;
  SubsetJ J = support_of(st, w);
  CHECK(centralizer_in_parabolic(st, w, J).size() == 16);
  CHECK(centralizer(st, w).size() == 32);
  CHECK(certify_no_complement_order2(sys, w, J));
  CHECK(exhaustive_complement_search(sys, w, J, 1'000'000) ==
        SearchOutcome::not_exists);

  ComplementResult res = centralizer_complement(sys, w);
  CHECK_FALSE(res.found);
  CHECK(res.quotient == 2);
  CHECK(res.nonexistence_certified);
  CHECK(res.certificate == "no-involution-in-coset");
}

TEST_CASE("an index-2 coset that does contain an involution") {
  const CoxeterSystem& sys = sys_of("B2");
  const ElementStore& st = sys.store();
  std::uint32_t w = st.index_of(to_element(sys, block_negate(2, 0, 1)));
  w = min_length_class_element(st, w).first;
  SubsetJ J = support_of(st, w);
  CHECK(J == SubsetJ::of({0}));
  CHECK(centralizer(st, w).size() ==
        2 * centralizer_in_parabolic(st, w, J).size());
  CHECK_FALSE(certify_no_complement_order2(sys, w, J));
  CHECK(exhaustive_complement_search(sys, w, J, 1'000'000) ==
        SearchOutcome::exists);
  ComplementResult res = centralizer_complement(sys, w);
  CHECK(res.found);
  CHECK(res.M.size() == 2);
  CHECK(certify_complement(sys, w, J, res.M));
}

TEST_CASE("the order-2 certificate requires index 2") {
  const CoxeterSystem& sys = sys_of("A2");
  CHECK_THROWS_AS(certify_no_complement_order2(sys, 0, SubsetJ(0)),
                  std::invalid_argument);
}

TEST_CASE("involution generators of the normalizer complement") {
  for (const char* spec : {"B3", "D4"}) {
    const CoxeterSystem& sys = sys_of(spec);
    const ElementStore& st = sys.store();
    CAPTURE(spec);
    for (std::uint32_t jb = 0; jb < (1u << sys.rank()); ++jb) {
      SubsetJ J(jb);
      IndexSet nj = normalizer_complement(sys, J);
      InvolutionGenerators ig = involution_generators_of_NJ(sys, J);
      IndexSet gen = generated_subgroup(st, ig.gens);
      CHECK(gen.elems == nj.elems);
      if (ig.all_involutions)
        for (std::uint32_t x : ig.gens) CHECK(st.mul(x, x) == 0);
    }
  }
}

TEST_CASE("complement search across whole groups") {
  for (const char* spec : {"A4", "B3", "D4", "H3", "I2:5", "I2:6", "I2:8"}) {
    const CoxeterSystem& sys = sys_of(spec);
    const ElementStore& st = sys.store();
    ConjClassTable t = conjugacy_classes(sys);
    CAPTURE(spec);
    for (const ConjClassRecord& rec : t.classes) {
      ComplementResult res = centralizer_complement(sys, rec.rep_min);
      CAPTURE(rec.rep_min);
      CHECK(res.found);
      CHECK(res.M.size() == res.quotient);
      CHECK(certify_complement(sys, rec.rep_min, support_of(st, rec.rep_min),
                               res.M));
    }
  }
}

TEST_CASE("constructive complements, small spot checks") {
  {
    const CoxeterSystem& sys = sys_of("A3");
    const ElementStore& st = sys.store();
    std::vector<int> lam = {1, 1, 2};
    std::uint32_t w =
        st.index_of(to_element(sys, w_lambda(DoublePartition{lam, {}})));
    SubsetJ J = support_of(st, w);
    IndexSet M = complement_type_A(sys, lam);
    CHECK(M.size() == normalizer_complement(sys, J).size());
    for (std::uint32_t m : M.elems) {
      CHECK(st.conj(w, m) == w);
      if (m != 0) CHECK_FALSE(support_of(st, m).subset_of(J));
    }
    CHECK_THROWS_AS(complement_type_A(sys, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(complement_type_B(sys, DoublePartition{{1, 2}, {}}),
                    std::invalid_argument);
  }
  {
    const CoxeterSystem& sys = sys_of("B3");
    const ElementStore& st = sys.store();
    DoublePartition lam = DoublePartition::parse("1;2");
    std::uint32_t w = st.index_of(to_element(sys, w_lambda(lam)));
    SubsetJ J = support_of(st, w);
    IndexSet M = complement_type_B(sys, lam);
    CHECK(M.size() == normalizer_complement(sys, J).size());
    for (std::uint32_t m : M.elems) CHECK(st.conj(w, m) == w);
  }
  {
    // the rejected type-D case never touches the element store
    CoxeterSystem d6(CoxeterType::parse("D6"));
    CHECK_THROWS_AS(complement_type_D(d6, DoublePartition::parse("1,1;2,2")),
                    std::invalid_argument);
  }
}

TEST_CASE("twisted type-D generators, odd negative blocks") {
  const CoxeterSystem& sys = sys_of("D4");
  const ElementStore& st = sys.store();
  DoublePartition lam = DoublePartition::parse("2;1,1");
  std::uint32_t w = st.index_of(to_element(sys, w_lambda(lam)));
  SubsetJ J = support_of(st, w);
  IndexSet M = complement_type_D(sys, lam);
  CHECK(M.size() == normalizer_complement(sys, J).size());
  for (std::uint32_t m : M.elems) {
    CHECK(st.conj(w, m) == w);
    if (m != 0) CHECK_FALSE(support_of(st, m).subset_of(J));
  }
}
