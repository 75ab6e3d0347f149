#include <doctest.h>

#include <random>

#include "foldhecke/errors.hpp"
#include "foldhecke/hecke_algebra.hpp"

using namespace fh;

namespace {

const HeckeRootDatum kSL2{{{2}}, {{1}}};
const HeckeRootDatum kPGL2{{{1}}, {{2}}};
const HeckeRootDatum kB2{{{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}};

LaurentPoly v(int e) { return LaurentPoly::monomial(e); }

// (T_s + 1)(T_s - v^{2λ}) for every simple s.
bool quadratic_holds(const AffineHecke& H) {
  for (int i = 0; i < H.datum().num_simple(); ++i) {
    HeckeElement s = H.T(H.weyl().right(0, i));
    if (!H.multiply(s + H.one(), s - scale(H.one(), v(2 * H.lambda(i)))).is_zero()) return false;
  }
  return true;
}

int associativity_failures(const AffineHecke& H, int trials, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> wd(0, H.weyl().size() - 1), ex(-3, 3);
  auto rnd = [&] {
    IVec x(H.datum().rank());
    for (auto& c : x) c = ex(rng);
    return H.multiply(H.T(wd(rng)), H.theta(x));
  };
  int fails = 0;
  for (int t = 0; t < trials; ++t) {
    auto a = rnd(), b = rnd(), c = rnd();
    fails += H.multiply(H.multiply(a, b), c) != H.multiply(a, H.multiply(b, c));
  }
  return fails;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  LaurentPoly p = v(1) + LaurentPoly(1), q = v(1) - LaurentPoly(1);
  CHECK(p * q == v(2) - LaurentPoly(1));
  CHECK((p - p).is_zero());
  CHECK((v(-2) * v(2)) == LaurentPoly(1));
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK(LaurentPoly::from_json((v(-1) * LaurentPoly(3) + v(4)).to_json()) == v(-1) * LaurentPoly(3) + v(4));
  CHECK_THROWS_AS(LaurentPoly::from_json(nlohmann::json{{1}}), ValidationError);
  LaurentPoly big(1LL << 62);
  CHECK_THROWS_AS(big * big, InvariantError);
}

TEST_CASE("Bernstein cross term for SL2 at the fundamental weight") {
  // θ_x(T_s+1) - (T_s+1)θ_{sx} with q = v^2 and x = α/2: (q-1)θ_x + θ_x - θ_{-x}.
  AffineHecke H(kSL2, {1}, {});
  ThetaPoly expect{{IVec{1}, v(2)}, {IVec{-1}, LaurentPoly(-1)}};
  CHECK(H.bernstein_cross({1}, 0) == expect);
  CHECK(H.bernstein_cross({0}, 0).empty());
}

TEST_CASE("affine Hecke relations hold for the consistent reading") {
  for (auto* H : {new AffineHecke(kSL2, {1}, {}), new AffineHecke(kPGL2, {2}, {1}),
                  new AffineHecke(kB2, {1, 3}, {std::nullopt, 1})}) {
    CHECK(quadratic_holds(*H));
    CHECK(associativity_failures(*H, 30, 5) == 0);
    CHECK(H->center_check({H->orbit_sum(IVec(H->datum().rank(), 1))}));
    delete H;
  }
}

TEST_CASE("the literal exponent layout breaks the relations") {
  AffineHecke P(kPGL2, {2}, {1}, GammaReading::literal);
  AffineHecke B(kB2, {1, 3}, {std::nullopt, 1}, GammaReading::literal);
  CHECK((!quadratic_holds(P) || associativity_failures(P, 30, 5) > 0));
  CHECK((!quadratic_holds(B) || associativity_failures(B, 30, 5) > 0));
}

TEST_CASE("T_w products follow the braid relations") {
  AffineHecke H(kB2, {1, 3}, {std::nullopt, 1});
  const auto& W = H.weyl();
  CHECK(W.size() == 8);
  int w0 = W.from_word({0, 1, 0, 1});
  CHECK(w0 == W.from_word({1, 0, 1, 0}));
  CHECK(W.length(w0) == 4);
  CHECK(H.multiply(H.T(W.from_word({0, 1})), H.T(W.from_word({0, 1}))) == H.T(w0));
}

TEST_CASE("Hecke element JSON round trip") {
  AffineHecke H(kB2, {1, 3}, {std::nullopt, 1});
  auto e = H.multiply(H.theta({1, 0}), H.T(3)) + scale(H.T(1), v(-2));
  CHECK(H.from_json(H.to_json(e)) == e);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(AffineHecke(kPGL2, {2}, {}), ValidationError);     // λ* missing on 2Y
  CHECK_THROWS_AS(AffineHecke(kSL2, {1}, {1}), ValidationError);     // λ* off 2Y
  CHECK_THROWS_AS(AffineHecke(kSL2, {-1}, {}), ValidationError);
  HeckeRootDatum a2{{{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}};
  CHECK_THROWS_AS(AffineHecke(a2, {1, 2}, {}), ValidationError);     // conjugate roots need equal λ
  HeckeRootDatum bad{{{2, 0}}, {{1}}};
  CHECK_THROWS_AS(AffineHecke(bad, {1}, {}), ValidationError);
}

TEST_CASE("graded cross term on the root itself is 2μr") {
  GradedHecke G(kSL2, {3});
  GradedPoly alpha = G.root_form(0);
  GradedPoly r2mu = {{{0, 1}, Rat(6)}};
  CHECK(G.multiply(G.poly(alpha), G.t(1)) == G.multiply(G.t(1), G.poly(G.reflect(alpha, 0))) + G.poly(r2mu));
  CHECK(G.divide_by_root(poly_mul(alpha, G.variable(0)), 0) == G.variable(0));
  CHECK_THROWS_AS(G.divide_by_root(G.variable(1), 0), InvariantError);
}

TEST_CASE("graded symmetric polynomials are central") {
  GradedHecke G(kB2, {2, 3});
  auto sym = G.orbit_sum(poly_mul(G.variable(0), G.variable(0)));
  CHECK(G.center_check({sym}));
  CHECK_FALSE(G.center_check({G.variable(0)}));
}

TEST_CASE("tempered and square-integrable predicates") {
  IMat gens = {{1}};  // X+ of SL2 with X = Z: generated by the fundamental weight
  WeightDatum pos{{{Rat(0), Rat(1)}}}, zero{{{Rat(1, 2), Rat(0)}}}, neg{{{Rat(0), Rat(-1)}}};
  CHECK(tempered_predicate({pos, zero}, gens, kSL2));
  CHECK_FALSE(tempered_predicate({pos, neg}, gens, kSL2));
  CHECK(square_integrable_predicate({pos}, gens, kSL2));
  CHECK_FALSE(square_integrable_predicate({pos, zero}, gens, kSL2));
  // dropping weights never breaks temperedness; square-integrable implies tempered
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<WeightDatum> ws;
    for (int k = 0; k < 4; ++k) ws.push_back({{{Rat(0), Rat(e(rng), 2)}}});
    bool t = tempered_predicate(ws, gens, kSL2);
    std::vector<WeightDatum> fewer(ws.begin(), ws.end() - 1);
    if (t) CHECK(tempered_predicate(fewer, gens, kSL2));
    if (square_integrable_predicate(ws, gens, kSL2)) CHECK(t);
  }
  CHECK_THROWS_AS(tempered_predicate({pos}, {{-1}}, kSL2), ValidationError);
}
