#include <doctest.h>

#include "foldhecke/errors.hpp"
#include "foldhecke/rat.hpp"
#include "foldhecke/scalar.hpp"

using namespace fh;

TEST_CASE("rationals normalize and compare exactly") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(1, -2).str() == "-1/2");
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat(7, 2).floor() == Rat(3));
  CHECK(Rat(-7, 2).floor() == Rat(-4));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("rationals promote to big integers instead of overflowing") {
  Rat big(1LL << 62);
  Rat sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
}

TEST_CASE("malformed fractions are validation errors") {
  CHECK_THROWS_AS(Rat::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), ValidationError);
  CHECK_THROWS_AS(Rat::parse("x"), ValidationError);
  CHECK_THROWS_AS(Rat::parse(""), ValidationError);
  CHECK_THROWS_AS(CScalar::parse(""), ValidationError);
  CHECK_THROWS_AS(CScalar::parse("1/2+q"), ValidationError);
}

TEST_CASE("complex literals") {
  CHECK(CScalar::parse("1/2+1/3i") == CScalar(Rat(1, 2), Rat(1, 3)));
  CHECK(CScalar::parse("-1/4i") == CScalar(Rat(0), Rat(-1, 4)));
  CHECK(CScalar::parse("3") == CScalar(Rat(3)));
  CScalar i(Rat(0), Rat(1));
  CHECK(i * i == CScalar(Rat(-1)));
  CHECK(CScalar::parse("1/2-1/3i").str() == CScalar(Rat(1, 2), Rat(-1, 3)).str());
}
