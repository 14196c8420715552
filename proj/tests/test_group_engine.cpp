#include <numeric>
#include <vector>

#include "doctest.h"

#include "coxeter/coxeter_type.hpp"
#include "coxeter/parabolic.hpp"
#include "coxeter/system.hpp"
#include "helpers.hpp"

using namespace cox;

TEST_CASE("group orders from degrees match full enumeration") {
  for (const char* spec :
       {"A1", "A3", "A4", "B2", "B3", "D4", "H3", "F4", "I2:7", "I2:12"}) {
    const CoxeterSystem& sys = sys_of(spec);
    CAPTURE(spec);
    std::uint64_t prod = 1;
    for (int d : sys.type().degrees()) prod *= d;
    CHECK(prod == sys.order());
    CHECK(sys.store().size() == sys.order());
  }
  CHECK(CoxeterType::parse("A3").order() == 24);
  CHECK(CoxeterType::parse("B3").order() == 48);
  CHECK(CoxeterType::parse("D4").order() == 192);
  CHECK(CoxeterType::parse("H3").order() == 120);
  CHECK(CoxeterType::parse("H4").order() == 14400);
  CHECK(CoxeterType::parse("F4").order() == 1152);
  CHECK(CoxeterType::parse("E6").order() == 51840);
  CHECK(CoxeterType::parse("E7").order() == 2903040);
  CHECK(CoxeterType::parse("I2:7").order() == 14);
}

TEST_CASE("type parsing errors") {
  CHECK_THROWS_AS(CoxeterType::parse("Q9"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterType::parse("I2:1"), std::invalid_argument);
  CHECK(CoxeterType::parse("I2:5").str() == "I2:5");
}

TEST_CASE("enumeration budget") {
  CoxeterSystem e7(CoxeterType::parse("E7"));
  CHECK(e7.order() == 2903040);  // order known without enumeration
  CHECK_THROWS_AS(e7.store(), BudgetExceeded);
  try {
    e7.store();
  } catch (const BudgetExceeded& e) {
    CHECK(e.group_order == 2903040);
  }
  // a generous explicit budget admits what the default refuses
  CoxeterSystem b2(CoxeterType::parse("B2"), 8);
  CHECK(b2.store().size() == 8);
  CHECK_THROWS_AS(CoxeterSystem(CoxeterType::parse("B2"), 7).store(),
                  BudgetExceeded);
}

TEST_CASE("store order: identity first, BFS by length, lex tie-break") {
  const CoxeterSystem& sys = sys_of("B3");
  const ElementStore& st = sys.store();
  CHECK(st.length(0) == 0);
  CHECK(st.element(0).is_identity());
  for (std::uint32_t i = 1; i < st.size(); ++i) {
    CHECK(st.length(i - 1) <= st.length(i));
    if (st.length(i - 1) == st.length(i))
      CHECK(reduce_word(st.element(i - 1)) < reduce_word(st.element(i)));
  }
}

TEST_CASE("longest element") {
  for (const char* spec : {"A3", "B3", "D4", "H3", "I2:5"}) {
    const CoxeterSystem& sys = sys_of(spec);
    CAPTURE(spec);
    Element w0 = longest_element(sys, SubsetJ::full(sys.rank()));
    CHECK(length(w0) == sys.num_positive_roots());
    CHECK((w0 * w0).is_identity());
    CHECK(descent_set(w0) == SubsetJ::full(sys.rank()));
  }
}

TEST_CASE("braid and involution relations") {
  for (const char* spec : {"B3", "F4", "H3", "I2:7"}) {
    const CoxeterSystem& sys = sys_of(spec);
    CAPTURE(spec);
    const auto& cm = sys.coxeter_matrix();
    for (int s = 0; s < sys.rank(); ++s)
      for (int t = 0; t < sys.rank(); ++t) {
        if (s == t) continue;
        Element p = sys.identity();
        for (int k = 0; k < cm[s][t]; ++k)
          p = p * sys.generator(s) * sys.generator(t);
        CHECK(p.is_identity());
      }
  }
}

TEST_CASE("multiplication tables, inverses, conjugation") {
  const CoxeterSystem& sys = sys_of("D4");
  const ElementStore& st = sys.store();
  for (std::uint32_t i = 0; i < st.size(); ++i) {
    CHECK(st.mul(i, st.inverse(i)) == 0);
    CHECK(st.mul(st.inverse(i), i) == 0);
  }
  // the index-level product agrees with element arithmetic on a grid
  for (std::uint32_t a = 0; a < st.size(); a += 17)
    for (std::uint32_t b = 0; b < st.size(); b += 23) {
      CHECK(st.mul(a, b) == st.index_of(st.element(a) * st.element(b)));
      CHECK(st.conj(a, b) ==
            st.index_of(inverse(st.element(b)) * st.element(a) * st.element(b)));
    }
  for (int s = 0; s < sys.rank(); ++s) {
    CHECK(st.mul_gen_left(s, 0) == st.gen_index(s));
    CHECK(st.length(st.gen_index(s)) == 1);
  }
}

TEST_CASE("descents, reduced words, lengths") {
  const CoxeterSystem& sys = sys_of("B3");
  const ElementStore& st = sys.store();
  for (std::uint32_t i = 0; i < st.size(); ++i) {
    Element w = st.element(i);
    std::vector<int> word = reduce_word(w);
    CHECK((int)word.size() == length(w));
    CHECK(word_to_element(sys, word) == w);
    for (int s = 0; s < sys.rank(); ++s) {
      bool drops = length(sys.generator(s) * w) < length(w);
      CHECK(descent_set(w).contains(s) == drops);
      CHECK(ascent_set(w).contains(s) == !drops);
      bool drops_r = length(w * sys.generator(s)) < length(w);
      CHECK(right_descent_set(w).contains(s) == drops_r);
    }
  }
}

TEST_CASE("parabolic membership without enumeration") {
  const CoxeterSystem& sys = sys_of("A3");
  const ElementStore& st = sys.store();
  for (std::uint32_t jb = 0; jb < 8; ++jb) {
    SubsetJ J(jb);
    IndexSet wj = parabolic_elements(sys, J);
    for (std::uint32_t i = 0; i < st.size(); ++i)
      CHECK(in_parabolic(st.element(i), J) == wj.contains(i));
  }
}

TEST_CASE("subgroup closure") {
  const CoxeterSystem& sys = sys_of("B3");
  const ElementStore& st = sys.store();
  std::vector<std::uint32_t> gens;
  for (int s = 0; s < sys.rank(); ++s) gens.push_back(st.gen_index(s));
  IndexSet all = generated_subgroup(st, gens);
  CHECK(all.size() == st.size());
  CHECK_FALSE(all.truncated);
  CHECK(generated_subgroup(st, {}).size() == 1);
  IndexSet capped = generated_subgroup(st, gens, 10);
  CHECK(capped.truncated);
  CHECK(capped.size() > 10);
}
