#include <doctest.h>

#include "foldhecke/errors.hpp"
#include "foldhecke/lie_engine.hpp"

using namespace fh;

TEST_CASE("Chevalley algebras have the classical dimensions") {
  CHECK(ChevalleyAlgebra("A1", 1).dim() == 3);
  CHECK(ChevalleyAlgebra("A3", 2).dim() == 15);
  CHECK(ChevalleyAlgebra("D4", 3).dim() == 28);
  CHECK(ChevalleyAlgebra("E6", 2).dim() == 78);
}

TEST_CASE("Jacobi identity holds and the OpenMP check agrees with the serial reference") {
  for (auto [type, d] : std::vector<std::pair<std::string, int>>{{"A2", 2}, {"A4", 2}, {"D4", 3}, {"D5", 2}}) {
    CAPTURE(type);
    ChevalleyAlgebra g(type, d);
    CHECK(g.check_antisymmetry());
    bool par = g.check_jacobi();
    CHECK(par);
    CHECK(par == g.check_jacobi_serial());
  }
}

TEST_CASE("the diagram automorphism has order d and preserves the bracket") {
  for (auto [type, d] : std::vector<std::pair<std::string, int>>{{"A3", 2}, {"D4", 3}, {"E6", 2}}) {
    CAPTURE(type);
    ChevalleyAlgebra g(type, d);
    CHECK(g.check_tau_automorphism());
    CHECK(g.check_tau_order());
    CHECK(g.check_pieces());
  }
}

TEST_CASE("graded pieces decompose the whole algebra") {
  ChevalleyAlgebra g("D4", 3);
  std::size_t total = 0;
  for (const auto& p : g.pieces()) total += p.basis.size();
  CHECK(static_cast<int>(total) == g.dim());
}

TEST_CASE("weighted Dynkin diagrams of classical nilpotents") {
  // regular nilpotent: all weights 2
  CHECK(wdd_from_partition('C', 2, {4}) == std::vector<int>{2, 2});
  CHECK(wdd_from_partition('B', 2, {5}) == std::vector<int>{2, 2});
  // zero orbit
  CHECK(wdd_from_partition('D', 4, {1, 1, 1, 1, 1, 1, 1, 1}) == std::vector<int>{0, 0, 0, 0});
  CHECK_THROWS_AS(wdd_from_partition('C', 2, {3}), ValidationError);
}
