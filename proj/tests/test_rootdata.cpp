#include <doctest.h>

#include "foldhecke/errors.hpp"
#include "foldhecke/rootdata.hpp"

using namespace fh;

TEST_CASE("root counts and Coxeter numbers of simple types") {
  struct Row {
    const char* type;
    int roots, coxeter;
  };
  for (auto [t, roots, h] : {Row{"A1", 2, 2}, Row{"A4", 20, 5}, Row{"B3", 18, 6}, Row{"C4", 32, 8},
                             Row{"D4", 24, 6}, Row{"D6", 60, 10}, Row{"G2", 12, 6}, Row{"F4", 48, 12},
                             Row{"E6", 72, 12}, Row{"E7", 126, 18}, Row{"E8", 240, 30}}) {
    CAPTURE(t);
    auto c = CartanDatum::from_type(t);
    CHECK(static_cast<int>(c.roots().size()) == roots);
    CHECK(c.coxeter_number() == h);
  }
}

TEST_CASE("Weyl group orders and longest elements") {
  struct Row {
    const char* type;
    std::size_t order;
  };
  for (auto [t, order] : {Row{"A3", 24}, Row{"B2", 8}, Row{"G2", 12}, Row{"D4", 192}, Row{"F4", 1152}}) {
    CAPTURE(t);
    auto c = CartanDatum::from_type(t);
    CHECK(generate_weyl(c).size() == order);
    auto w0 = longest_word(c.cartan());
    CHECK(static_cast<int>(w0.size()) == c.num_positive());
    auto full = longest_element(c, [&] {
      std::vector<int> all(c.rank());
      for (int i = 0; i < c.rank(); ++i) all[i] = i;
      return all;
    }());
    CHECK(inversion_count(c, full.matrix) == c.num_positive());
  }
}

TEST_CASE("reflections preserve the root set") {
  auto c = CartanDatum::from_type("E6");
  for (int i = 0; i < c.rank(); ++i)
    for (const auto& r : c.roots()) CHECK(c.root_index(c.simple_reflect(r, i)).has_value());
}

TEST_CASE("classification of Cartan matrices and low-rank coincidences") {
  auto c = CartanDatum::from_type("D5");
  CHECK(type_string(classify_cartan(c.cartan())) == "D5");
  CHECK(type_string(classify_cartan(submatrix(c.cartan(), {0, 3, 4}))) == "A1xA1xA1");
  CHECK(canonical_type("D3") == "A3");
  CHECK(canonical_type("C2") == canonical_type("B2"));
  CHECK(canonical_type("B1") == "A1");
  CHECK(canonical_type("C1xB4") == canonical_type("B4xA1"));
}

TEST_CASE("unknown type codes are rejected") {
  CHECK_THROWS_AS(CartanDatum::from_type("Z9"), ValidationError);
  CHECK_THROWS_AS(CartanDatum::from_type("E9"), ValidationError);
  CHECK_THROWS_AS(CartanDatum::from_type("D3x"), ValidationError);
}
