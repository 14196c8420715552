#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "coxeter/algebraic.hpp"
#include "coxeter/rational.hpp"

using namespace cox;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1) / Rat(1, 5) == Rat(5));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(7, 2).str() == "7/2");
  CHECK(Rat(-3).str() == "-3");
  CHECK(Rat(4, 2).is_integer());
}

TEST_CASE("rational error paths") {
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
  // products that no longer fit in 64 bits must throw, not wrap
  CHECK_THROWS_AS(Rat(INT64_MAX) * Rat(2, 3), std::overflow_error);
  CHECK_THROWS_AS(Rat(INT64_MAX) + Rat(1), std::overflow_error);
}

TEST_CASE("minimal polynomials of 2cos(pi/m)") {
  // constant term first, monic
  CHECK(NumberField(3).minpoly() == std::vector<long long>{-1, 1});
  CHECK(NumberField(4).minpoly() == std::vector<long long>{-2, 0, 1});
  CHECK(NumberField(5).minpoly() == std::vector<long long>{-1, -1, 1});
  CHECK(NumberField(6).minpoly() == std::vector<long long>{-3, 0, 1});
  CHECK(NumberField(7).minpoly() == std::vector<long long>{1, -2, -1, 1});
  CHECK(NumberField(12).minpoly() == std::vector<long long>{1, 0, -4, 0, 1});
  CHECK(NumberField(3).degree() == 1);
  CHECK(NumberField(5).degree() == 2);
  CHECK(NumberField(7).degree() == 3);
}

TEST_CASE("field arithmetic satisfies the defining relation") {
  NumberField f5(5);
  AlgNum g = AlgNum::generator(&f5);  // the golden ratio: g^2 = g + 1
  CHECK(g * g == g + AlgNum::one(&f5));
  CHECK(AlgNum::two_cos(&f5, 3) == AlgNum::one(&f5));
  CHECK(AlgNum::two_cos(&f5, 2) == AlgNum::zero(&f5));
  CHECK(AlgNum::two_cos(&f5, 5) == g);

  NumberField f4(4);
  AlgNum r = AlgNum::generator(&f4);  // sqrt(2)
  CHECK(r * r == AlgNum(&f4, Rat(2)));
  CHECK(-r + r == AlgNum::zero(&f4));

  NumberField f7(7);
  AlgNum c = AlgNum::generator(&f7);  // c^3 = c^2 + 2c - 1
  CHECK(c * c * c == c * c + c + c - AlgNum::one(&f7));
  CHECK_FALSE(c.is_zero());
}
