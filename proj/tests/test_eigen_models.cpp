#include <doctest.h>

#include <random>

#include "foldhecke/eigen_models.hpp"
#include "foldhecke/errors.hpp"

using namespace fh;

TEST_CASE("eigenvalue multisets round trip on dominant inputs") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> n(0, 9);
  EigenModel sl{"sl", 2, 3, 0, {}};
  EigenModel sp{"sp", 0, 0, 2, cuspidal_parts("sp", 2)};
  for (int trial = 0; trial < 30; ++trial) {
    // sl: x sums to zero, sorted descending by real part
    std::vector<int> a = {n(rng), n(rng), n(rng)};
    std::sort(a.rbegin(), a.rend());
    int s = a[0] + a[1] + a[2];
    std::vector<CScalar> x;
    for (int v : a) x.push_back(CScalar(Rat(3 * v - s, 3)));
    for (int z : {0, 1}) {
      auto Y = eigen_multiset(sl, x, CScalar(z));
      CHECK(dominant_from_multiset(sl, Y, CScalar(z)) == x);
    }
    std::vector<int> b = {n(rng), n(rng)};
    std::sort(b.rbegin(), b.rend());
    std::vector<CScalar> y = {CScalar(Rat(b[0])), CScalar(Rat(b[1]))};
    auto Y = eigen_multiset(sp, y, CScalar(1));
    CHECK(dominant_from_multiset(sp, Y, CScalar(1)) == y);
  }
}

TEST_CASE("cuspidal Jordan types") {
  CHECK(cuspidal_parts("sp", 2) == std::vector<int>{2, 4});
  CHECK(cuspidal_parts("so", 2) == std::vector<int>{1, 3});
}

TEST_CASE("multisets outside the image are rejected") {
  EigenModel sl{"sl", 2, 2, 0, {}};
  CHECK(model_arity(sl) == 2);
  Multiset junk = make_multiset({CScalar(7), CScalar(-3), CScalar(11), CScalar(5)});
  CHECK_THROWS_AS(dominant_from_multiset(sl, junk, CScalar(0)), ValidationError);
}
