#include <doctest.h>

#include <algorithm>

#include "foldhecke/errors.hpp"
#include "foldhecke/hecke_params.hpp"
#include "foldhecke/lie_engine.hpp"

using namespace fh;

namespace {

TableRow row_for(const std::string& type, int d, const std::string& id) {
  for (const auto& c : enumerate_cases(type, d))
    if (c.id == id) return table_row_auto(c);
  FAIL("no case " << id);
  return {};
}

}  // namespace

TEST_CASE("E6 twisted Iwahori row") {
  auto r = row_for("E6", 2, "e6-iwahori");
  CHECK(r.flat_sharp == "♯^{2×1×2}—♯^{2×1×2}—♯^{2×1×2}⇒♯^{2×1×1}—♯^{2×1×1}");
  CHECK(r.ha == "2—2⇐1—1—1");
  CHECK(r.hecke.root_type == "F4");
  CHECK(r.discrepancies.empty());
  CHECK(r.checks_failed.empty());
}

TEST_CASE("D4 triality Iwahori row") {
  auto r = row_for("D4", 3, "d4-iwahori");
  CHECK(r.flat_sharp == "♯^{2×1×3}—♯^{2×1×3}≡>♯^{2×1×1}");
  CHECK(r.ha == "3<≡1—1");
  CHECK(r.checks_failed.empty());
}

TEST_CASE("tables enumerate rows in a fixed order") {
  auto cases = enumerate_cases("D4", 3);
  REQUIRE(cases.size() == 3);
  CHECK(cases[0].id == "d4-g2");
  CHECK(cases[1].id == "d4-a1a1");
  CHECK(cases[2].id == "d4-iwahori");
}

TEST_CASE("parallel table generation matches the serial order and content") {
  auto cases = enumerate_cases("E6", 2);
  auto par = table_rows(cases, true);
  auto ser = table_rows(cases, false);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i].to_json() == ser[i].to_json());
}

TEST_CASE("an-even family branch and boxes") {
  auto r = table_row_auto(family_case("an-even", 0, 1, 2));
  CHECK(r.input.branch == "a-b=-1, |a+b+1|=2");
  CHECK(r.flat_sharp_subscripted == "♭₂^{2×1/2×4}∞♭₁^{2×1/2×2}");
  auto r2 = table_row_auto(family_case("an-even", 4, 1, 1));
  CHECK(r2.beta_graph == "[∘]⇒∘₁—[∘—∘—∘⇒∘]");
  std::vector<std::string> names;
  for (const auto& b : r2.input.boxes) names.push_back(std::string(1, b.letter) + std::to_string(b.rank));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"B4", "C1"});
}

TEST_CASE("dn-orthogonal flat ends carry 2a and 2b") {
  auto r = table_row_auto(family_case("dn-orthogonal", 1, 2, 2));
  REQUIRE_FALSE(r.hecke.lambda.empty());
  std::vector<long long> ends;
  for (std::size_t i = 0; i < r.hecke.lambda.size(); ++i)
    if (r.hecke.lambda_star[i]) ends = {r.hecke.lambda[i], *r.hecke.lambda_star[i]};
  std::sort(ends.begin(), ends.end());
  CHECK(ends == std::vector<long long>{2, 4});
}

TEST_CASE("family congruences are enforced") {
  CHECK_THROWS_AS(family_case("an-even", 1, 1, 1), ValidationError);
  CHECK_THROWS_AS(family_case("an-even", 0, 1, -1), ValidationError);
  CHECK_THROWS_AS(family_case("no-such-family", 0, 0, 0), ValidationError);
  CHECK_THROWS_AS(enumerate_cases("Z9", 1), ValidationError);
}

TEST_CASE("E6 with three A1 boxes: computed u-bar and verbatim H.A.") {
  auto c = [] {
    for (const auto& c : enumerate_cases("E6", 2))
      if (c.id == "e6-a1a1a1") return c;
    return CuspidalCase{};
  }();
  REQUIRE(c.id == "e6-a1a1a1");
  ChevalleyAlgebra g("E6", 2);
  auto r = table_row(c, &g);
  std::vector<int> ubar;
  for (const auto& n : r.nodes) {
    ubar.push_back(n.ubar);
    CHECK(n.ubar_source == "computed");
  }
  std::sort(ubar.begin(), ubar.end());
  CHECK(ubar == std::vector<int>{4, 5});
  CHECK(r.ha == "1∞9");
  CHECK_FALSE(r.discrepancies.empty());
}

TEST_CASE("graph rendering glyphs") {
  IMat a2 = {{2, -1}, {-1, 2}};
  CHECK(render_graph(a2, {0, 1}, {"∘", "∘"}) == "∘—∘");
  IMat b2 = {{2, -2}, {-1, 2}};
  std::string s = render_graph(b2, {0, 1}, {"∘", "∘"});
  CHECK((s == "∘⇒∘" || s == "∘⇐∘"));
  IMat g2 = {{2, -3}, {-1, 2}};
  std::string t = render_graph(g2, {0, 1}, {"∘", "∘"});
  CHECK((t == "∘≡>∘" || t == "∘<≡∘"));
}
