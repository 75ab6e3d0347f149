#include <doctest.h>

#include <random>

#include "foldhecke/alcove.hpp"
#include "foldhecke/errors.hpp"
#include "foldhecke/folding.hpp"
#include "foldhecke/rootdata.hpp"

using namespace fh;

namespace {

const std::vector<std::pair<std::string, int>> kFolds = {{"A2", 1}, {"A2", 2}, {"A3", 2}, {"A4", 2}, {"A5", 2},
                                                         {"D4", 2}, {"D4", 3}, {"D5", 2}, {"E6", 2}};

AlcovePoint random_point(const Alcove& al, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  AlcovePoint x;
  x.c.resize(al.num_nodes());
  for (int i = 1; i < al.num_nodes(); ++i) x.c[i] = CScalar(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  x.c[0] = CScalar(0);
  CScalar rest = al.level(x);
  x.c[0] = (CScalar(1) - rest) / CScalar(Rat(al.folded().marks()[0]));
  return x;
}

}  // namespace

TEST_CASE("sum of marks equals the Coxeter number of the folded system") {
  for (auto [type, d] : kFolds) {
    CAPTURE(type);
    CAPTURE(d);
    auto f = FoldedRootDatum::standard(type, d);
    long long sum = 0;
    for (auto m : f.marks()) sum += m;
    CHECK(sum == f.reduced().coxeter_number());
    CHECK(f.num_nodes() == f.r() + 1);
    CHECK(f.psi_check());
  }
}

TEST_CASE("folded ranks and known restricted types") {
  CHECK(FoldedRootDatum::standard("E6", 2).r() == 4);
  CHECK(FoldedRootDatum::standard("D4", 3).r() == 2);
  CHECK(FoldedRootDatum::standard("A5", 2).r() == 3);
  CHECK(FoldedRootDatum::standard("A4", 2).non_reduced());
  CHECK_FALSE(FoldedRootDatum::standard("A5", 2).non_reduced());
  CHECK(type_string(classify_cartan(FoldedRootDatum::standard("E6", 2).reduced().cartan())) == "F4");
  CHECK(type_string(classify_cartan(FoldedRootDatum::standard("D4", 3).reduced().cartan())) == "G2");
}

TEST_CASE("incompatible folds are validation errors") {
  CHECK_THROWS_AS(FoldedRootDatum::standard("E7", 2), ValidationError);
  CHECK_THROWS_AS(FoldedRootDatum::standard("D5", 3), ValidationError);
  CHECK_THROWS_AS(FoldedRootDatum::standard("B3", 1), ValidationError);
  CHECK_THROWS_AS(FoldedRootDatum::standard("A1", 2), ValidationError);
}

TEST_CASE("reduction is idempotent and constant on affine Weyl orbits") {
  std::mt19937_64 rng(7);
  for (auto [type, d] : kFolds) {
    CAPTURE(type);
    CAPTURE(d);
    Alcove al(FoldedRootDatum::standard(type, d));
    std::uniform_int_distribution<int> node(0, al.num_nodes() - 1), len(0, 12);
    for (int trial = 0; trial < 15; ++trial) {
      auto x = random_point(al, rng);
      REQUIRE(al.level(x) == CScalar(1));
      auto r = al.reduce(x);
      CHECK(al.reduce(r.canonical).canonical.c == r.canonical.c);
      CHECK(al.reduce(r.canonical).w.word.empty());
      CHECK(al.apply_word(r.w.word, x).c == r.canonical.c);
      for (const auto& c : r.canonical.c) CHECK(c.re.sign() >= 0);
      std::vector<int> w(len(rng));
      for (auto& s : w) s = node(rng);
      CHECK(al.reduce(al.apply_word(w, x)).canonical.c == r.canonical.c);
    }
  }
}

TEST_CASE("batch reduction matches the serial reference") {
  std::mt19937_64 rng(11);
  Alcove al(FoldedRootDatum::standard("E6", 2));
  std::vector<AlcovePoint> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_point(al, rng));
  auto par = al.reduce_batch(xs);
  auto ser = al.reduce_batch_serial(xs);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(par[i].canonical.c == ser[i].canonical.c);
    CHECK(par[i].w.word == ser[i].w.word);
    CHECK(par[i].S == ser[i].S);
  }
}

TEST_CASE("reduction rejects points off the level-1 hyperplane") {
  Alcove al(FoldedRootDatum::standard("A3", 2));
  CHECK_THROWS_AS(al.reduce(Alcove::parse_point("1/2,1/4,1/4")), ValidationError);
  CHECK_THROWS_AS(al.reduce(Alcove::parse_point("1/2,1/4,0,1/4")), ValidationError);
  CHECK_THROWS_AS(al.reduce_batch({Alcove::parse_point("1,1,1")}), ValidationError);
  CHECK_THROWS_AS(Alcove::parse_point("1/2,,1/4"), ValidationError);
}

TEST_CASE("alcove vertices are fixed points with stabilizer I minus k") {
  for (auto [type, d] : kFolds) {
    Alcove al(FoldedRootDatum::standard(type, d));
    for (int k = 0; k < al.num_nodes(); ++k) {
      auto v = al.vertex(k);
      CHECK(al.level(v) == CScalar(1));
      CHECK(al.reduce(v).canonical.c == v.c);
      CHECK(al.stabilizer(v).size() == static_cast<std::size_t>(al.num_nodes() - 1));
    }
  }
}
