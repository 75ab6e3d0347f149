#include "foldhecke/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "foldhecke/alcove.hpp"
#include "foldhecke/eigen_models.hpp"
#include "foldhecke/errors.hpp"
#include "foldhecke/hecke_algebra.hpp"
#include "foldhecke/hecke_params.hpp"
#include "foldhecke/lie_engine.hpp"

namespace fh {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxMessages = 8;

struct Tally {
  SuiteResult* r;
  void check(bool ok, const std::string& what) {
    ++r->checks;
    if (ok) return;
    ++r->failures;
    if (r->messages.size() < kMaxMessages) r->messages.push_back(what);
  }
  void note(const std::string& what) { r->messages.push_back(what); }
};

Rat rand_rat(std::mt19937_64& rng, int num_span, int den_max) {
  std::uniform_int_distribution<int> num(-num_span, num_span), den(1, den_max);
  return Rat(num(rng), den(rng));
}

// Random Gaussian-rational point of level one.
AlcovePoint random_point(const Alcove& al, std::mt19937_64& rng) {
  const auto& marks = al.folded().marks();
  AlcovePoint x;
  x.c.assign(al.num_nodes(), CScalar());
  CScalar rest(Rat(1));
  bool real = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
  for (int i = 1; i < al.num_nodes(); ++i) {
    x.c[i] = CScalar(rand_rat(rng, 20, 7), real ? Rat(0) : rand_rat(rng, 3, 4));
    rest -= x.c[i] * CScalar(Rat(marks[i]));
  }
  x.c[0] = rest * CScalar(Rat(1, marks[0]));
  return x;
}

bool same_point(const AlcovePoint& a, const AlcovePoint& b) { return a.c == b.c; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// --- 1, 2: exceptional tables ---------------------------------------------------

void exceptional_table(Tally& t, const std::string& type, int d, const std::string& id,
                       const std::string& want_fs, const std::string& want_ha) {
  for (auto& c : enumerate_cases(type, d)) {
    if (c.id != id) continue;
    TableRow row = table_row_auto(c);
    t.check(row.flat_sharp == want_fs, id + " ♭-♯ diagram " + row.flat_sharp + ", expected " + want_fs);
    t.check(row.ha == want_ha, id + " H.A. " + row.ha + ", expected " + want_ha);
    t.check(row.discrepancies.empty(), id + " discrepancies: " + join(row.discrepancies, "; "));
    t.check(row.checks_failed.empty(), id + " checks failed: " + join(row.checks_failed, "; "));
    return;
  }
  t.check(false, "no row " + id + " for " + type + " d=" + std::to_string(d));
}

void suite_table_e6(Tally& t) {
  exceptional_table(t, "E6", 2, "e6-iwahori", "♯^{2×1×2}—♯^{2×1×2}—♯^{2×1×2}⇒♯^{2×1×1}—♯^{2×1×1}", "2—2⇐1—1—1");
}

void suite_table_d4(Tally& t) {
  exceptional_table(t, "D4", 3, "d4-iwahori", "♯^{2×1×3}—♯^{2×1×3}≡>♯^{2×1×1}", "3<≡1—1");
}

// --- 3: classical families -------------------------------------------------------

void suite_families(Tally& t) {
  auto node_flags = [](const TableRow& row) {
    std::vector<std::string> out;
    for (auto& d : row.discrepancies)
      if (d.rfind("node", 0) == 0 || d.rfind("bonds", 0) == 0 || d.rfind("printed node", 0) == 0) out.push_back(d);
    return out;
  };
  {
    TableRow row = table_row_auto(family_case("an-even", 0, 1, 2));
    t.check(row.input.branch == "a-b=-1, |a+b+1|=2", "A2 (0,1,2) branch " + row.input.branch);
    t.check(row.input.boxes.empty(), "A2 (0,1,2) has no boxes");
    t.check(row.flat_sharp_subscripted == "♭₂^{2×1/2×4}∞♭₁^{2×1/2×2}",
            "A2 (0,1,2) ♭-♯ diagram " + row.flat_sharp_subscripted);
    t.check(node_flags(row).empty(), "A2 (0,1,2): " + join(node_flags(row), "; "));
    t.check(row.checks_failed.empty(), "A2 (0,1,2) checks: " + join(row.checks_failed, "; "));
  }
  {
    TableRow row = table_row_auto(family_case("an-even", 4, 1, 1));
    t.check(row.input.branch == "a-b≠-1, |a+b+1|≠2", "A10 (4,1,1) branch " + row.input.branch);
    std::vector<std::string> boxes;
    for (auto& b : row.input.boxes) boxes.push_back(std::string(1, b.letter) + std::to_string(b.rank));
    t.check(boxes == std::vector<std::string>{"C1", "B4"}, "A10 (4,1,1) boxes " + join(boxes, ","));
    t.check(row.beta_graph == "[∘]⇒∘₁—[∘—∘—∘⇒∘]", "A10 (4,1,1) (β_i)-graph " + row.beta_graph);
    t.check(row.flat_sharp == "∅", "A10 (4,1,1) ♭-♯ diagram " + row.flat_sharp);
    t.check(row.checks_failed.empty(), "A10 (4,1,1) checks: " + join(row.checks_failed, "; "));
  }
  {
    TableRow row = table_row_auto(family_case("dn-orthogonal", 1, 2, 2));
    std::vector<long long> ends;
    for (std::size_t i = 0; i < row.hecke.lambda.size(); ++i)
      if (row.hecke.lambda_star[i]) ends = {row.hecke.lambda[i], *row.hecke.lambda_star[i]};
    std::sort(ends.begin(), ends.end());
    t.check(ends == std::vector<long long>{2, 4}, "D6 (1,2,2) ♭-end {λ, λ*} differs from {2, 4}");
    t.check(node_flags(row).empty(), "D6 (1,2,2): " + join(node_flags(row), "; "));
    t.check(row.checks_failed.empty(), "D6 (1,2,2) checks: " + join(row.checks_failed, "; "));
  }
}

// --- 4: ū on E6 with J of type A1^3 ---------------------------------------------

void suite_e6_ubar(Tally& t) {
  for (auto& c : enumerate_cases("E6", 2)) {
    if (c.id != "e6-a1a1a1") continue;
    TableRow row = table_row_auto(c);
    std::vector<int> ubar;
    for (auto& nd : row.nodes) {
      ubar.push_back(nd.ubar);
      t.check(nd.ubar_source == "computed", "ū taken from " + nd.ubar_source);
    }
    std::sort(ubar.begin(), ubar.end());
    t.check(ubar == std::vector<int>{4, 5}, "ū multiset differs from {4, 5}");
    t.check(row.ha == "1∞9" && row.input.ha_literal, "H.A. not emitted verbatim: " + row.ha);
    bool flagged = std::any_of(row.discrepancies.begin(), row.discrepancies.end(),
                               [](const std::string& d) { return d.find("verbatim") != std::string::npos; });
    t.check(flagged, "verbatim H.A. carries no discrepancy flag");
    for (auto& d : row.discrepancies) t.note("flag: " + d);
    return;
  }
  t.check(false, "no E6 row with J of type A1^3");
}

// --- 5: alcove reduction ------------------------------------------------------------

void suite_alcove(Tally& t, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto& [type, d] : supported_folds()) {
    Alcove al(FoldedRootDatum::standard(type, d));
    int n = al.num_nodes();
    std::vector<AlcovePoint> pts;
    for (int p = 0; p < 200; ++p) pts.push_back(random_point(al, rng));
    std::vector<ReduceResult> base = al.reduce_batch(pts);
    std::vector<AlcovePoint> moved;
    std::vector<int> owner;
    std::uniform_int_distribution<int> len(0, 30), node(0, n - 1);
    for (int p = 0; p < 200; ++p)
      for (int k = 0; k < 20; ++k) {
        std::vector<int> word(len(rng));
        for (auto& i : word) i = node(rng);
        moved.push_back(al.apply_word(word, pts[p]));
        owner.push_back(p);
      }
    std::vector<ReduceResult> red = al.reduce_batch(moved);
    std::string tag = type + " d=" + std::to_string(d);
    for (int p = 0; p < 200; ++p) {
      const ReduceResult& r = base[p];
      t.check(same_point(al.apply_word(r.w.word, pts[p]), r.canonical), tag + ": word does not reach the canonical point");
      t.check(same_point(al.reduce(r.canonical).canonical, r.canonical), tag + ": reduce is not idempotent");
      t.check(r.S == Alcove::cell(r.canonical), tag + ": cell label mismatch");
    }
    for (std::size_t q = 0; q < moved.size(); ++q)
      t.check(same_point(red[q].canonical, base[owner[q]].canonical),
              tag + ": orbit points reduce differently from " + point_str(pts[owner[q]]));
  }
}

// --- 6: graded pieces versus the 𝔑 indicator ------------------------------------

void suite_pieces(Tally& t) {
  for (auto [type, d] : std::vector<std::pair<std::string, int>>{
           {"A2", 2}, {"A3", 2}, {"A4", 2}, {"A5", 2}, {"D4", 2}, {"D4", 3}, {"E6", 2}}) {
    ChevalleyAlgebra g(type, d);
    Alcove al(g.folded());
    for (std::size_t k = 0; k < g.folded().rroots().size(); ++k)
      for (int j = 0; j < d; ++j) {
        int dim = g.piece_dim(static_cast<int>(k), j);
        bool in = al.in_n(static_cast<int>(k), j);
        t.check(dim == (in ? 1 : 0), type + " d=" + std::to_string(d) + ": dim g_{β,j} = " + std::to_string(dim) +
                                         " at root " + std::to_string(k) + ", j=" + std::to_string(j));
      }
  }
}

// --- 7: fixed subalgebra at alcove vertices ---------------------------------------

void suite_vertices(Tally& t) {
  for (auto& [type, d] : supported_folds()) {
    ChevalleyAlgebra g(type, d);
    Alcove al(g.folded());
    int n = al.num_nodes();
    for (int k = 0; k < n; ++k) {
      std::vector<int> J;
      for (int i = 0; i < n; ++i)
        if (i != k) J.push_back(i);
      std::map<IVec, int> want;
      for (auto& b : al.gj_root_datum(J).roots) want[b] = 1;
      auto got = g.fixed_root_multiset(al.vertex(k));
      t.check(got == want, type + " d=" + std::to_string(d) + ": fixed subalgebra at vertex " + std::to_string(k) +
                               " has " + std::to_string(got.size()) + " root directions, expected " +
                               std::to_string(want.size()));
    }
  }
}

// --- 8: two-sided 𝔑 membership on every cell -------------------------------------

void suite_membership(Tally& t) {
  for (auto [type, d] : std::vector<std::pair<std::string, int>>{{"A3", 2}, {"D4", 3}}) {
    Alcove al(FoldedRootDatum::standard(type, d));
    int n = al.num_nodes();
    const auto& marks = al.folded().marks();
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> S;
      long long total = 0;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) S.push_back(i), total += marks[i];
      AlcovePoint x;
      x.c.assign(n, CScalar());
      for (int i : S) x.c[i] = CScalar(Rat(1, total));
      for (auto& ne : al.n_set()) {
        bool lhs = al.condition_i(ne.root, ne.j, x);
        bool rhs = al.condition_ii(ne.root, ne.j, S).has_value();
        t.check(lhs == rhs, type + " d=" + std::to_string(d) + ": conditions disagree at root " +
                                std::to_string(ne.root) + ", j=" + std::to_string(ne.j) + ", cell mask " +
                                std::to_string(mask));
      }
    }
  }
}

// --- 9: Hecke relations -------------------------------------------------------------

void affine_relations(Tally& t, const AffineHecke& H, const std::string& tag, std::mt19937_64& rng) {
  const FiniteWeyl& W = H.weyl();
  int r = H.datum().rank(), k = H.datum().num_simple();
  for (int w = 0; w < W.size(); ++w)
    for (int u = 0; u < W.size(); ++u) {
      int wu = W.multiply(w, u);
      if (W.length(wu) == W.length(w) + W.length(u))
        t.check(H.multiply(H.T(w), H.T(u)) == H.T(wu), tag + ": T_w T_w' != T_ww' for " + W.name(w) + ", " + W.name(u));
    }
  for (int i = 0; i < k; ++i) {
    HeckeElement s = H.T(W.right(0, i));
    HeckeElement q = scale(H.one(), LaurentPoly::monomial(2 * H.lambda(i)));
    t.check(H.multiply(s + H.one(), s - q).is_zero(), tag + ": quadratic relation fails at s" + std::to_string(i + 1));
  }
  std::uniform_int_distribution<int> ex(-5, 5), wd(0, W.size() - 1);
  auto rand_x = [&] {
    IVec x(r);
    for (auto& c : x) c = ex(rng);
    return x;
  };
  for (int trial = 0; trial < 20; ++trial) {
    IVec x = rand_x(), y = rand_x();
    IVec xy = x;
    for (int j = 0; j < r; ++j) xy[j] += y[j];
    t.check(H.multiply(H.theta(x), H.theta(y)) == H.theta(xy), tag + ": θ_x θ_y != θ_{x+y}");
    for (int i = 0; i < k; ++i) {
      HeckeElement s1 = H.T(W.right(0, i)) + H.one();
      HeckeElement lhs = H.multiply(H.theta(x), s1) - H.multiply(s1, H.theta(H.datum().reflect(x, i)));
      t.check(lhs == H.from_theta(H.bernstein_cross(x, i)), tag + ": cross relation fails");
    }
    HeckeElement e = H.multiply(H.T(wd(rng)), H.theta(x));
    t.check(H.multiply(H.one(), e) == e && H.multiply(e, H.one()) == e, tag + ": θ_0 is not a unit");
  }
  for (int trial = 0; trial < 100; ++trial) {
    HeckeElement a = H.multiply(H.T(wd(rng)), H.theta(rand_x()));
    HeckeElement b = H.multiply(H.T(wd(rng)), H.theta(rand_x()));
    HeckeElement c = H.multiply(H.T(wd(rng)), H.theta(rand_x()));
    t.check(H.multiply(H.multiply(a, b), c) == H.multiply(a, H.multiply(b, c)), tag + ": associativity fails");
  }
  std::vector<ThetaPoly> sym;
  for (int trial = 0; trial < 5; ++trial) sym.push_back(H.orbit_sum(rand_x()));
  t.check(H.center_check(sym), tag + ": W0-symmetric θ-sum is not central");
  for (int i = 0; i < k; ++i) {
    IVec x = H.datum().coroots[i];  // pairs to a nonzero value with the i-th coroot
    t.check(!H.center_check({{{x, LaurentPoly(1)}}}), tag + ": non-symmetric θ_x passes the center check");
  }
}

void graded_relations(Tally& t, const GradedHecke& G, const std::string& tag, std::mt19937_64& rng) {
  const FiniteWeyl& W = G.weyl();
  int k = G.datum().num_simple(), nv = G.num_vars();
  for (int w = 0; w < W.size(); ++w)
    for (int u = 0; u < W.size(); ++u)
      t.check(G.multiply(G.t(w), G.t(u)) == G.t(W.multiply(w, u)), tag + ": t_w t_w' != t_ww'");
  std::uniform_int_distribution<int> deg(0, 2), coef(-3, 3), wd(0, W.size() - 1);
  auto rand_poly = [&] {
    GradedPoly f;
    for (int term = 0; term < 3; ++term) {
      std::vector<int> m(nv);
      for (auto& e : m) e = deg(rng);
      f = poly_add(f, {{m, Rat(coef(rng))}});
    }
    return f;
  };
  for (int trial = 0; trial < 20; ++trial) {
    GradedPoly f = rand_poly(), g = rand_poly();
    t.check(G.multiply(G.poly(f), G.poly(g)) == G.poly(poly_mul(f, g)), tag + ": (f1)(f2) != (f1 f2)");
    t.check(G.poly(poly_add(f, g, Rat(-2))) == G.poly(f) - G.poly(g) - G.poly(g), tag + ": (f) is not linear");
    for (int i = 0; i < k; ++i) {
      GradedElement s = G.t(W.right(0, i));
      GradedElement lhs = G.multiply(G.poly(f), s) - G.multiply(s, G.poly(G.reflect(f, i)));
      t.check(lhs == G.graded_cross(f, i), tag + ": graded cross relation fails");
    }
    GradedElement e = G.multiply(G.t(wd(rng)), G.poly(f));
    t.check(G.multiply(G.one(), e) == e && G.multiply(e, G.one()) == e, tag + ": (0) is not a unit");
  }
  for (int trial = 0; trial < 30; ++trial) {
    GradedElement a = G.multiply(G.t(wd(rng)), G.poly(rand_poly()));
    GradedElement b = G.multiply(G.t(wd(rng)), G.poly(rand_poly()));
    GradedElement c = G.multiply(G.t(wd(rng)), G.poly(rand_poly()));
    t.check(G.multiply(G.multiply(a, b), c) == G.multiply(a, G.multiply(b, c)), tag + ": graded associativity fails");
  }
  t.check(G.center_check({G.orbit_sum(rand_poly()), G.orbit_sum(rand_poly())}), tag + ": symmetric (f) not central");
}

void suite_hecke(Tally& t, uint64_t seed) {
  std::mt19937_64 rng(seed);
  HeckeRootDatum sl2{{{2}}, {{1}}}, pgl2{{{1}}, {{2}}};
  HeckeRootDatum a2{{{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}};
  HeckeRootDatum b2{{{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}};  // second coroot in 2Y
  affine_relations(t, AffineHecke(sl2, {1}, {}), "SL2", rng);
  affine_relations(t, AffineHecke(pgl2, {2}, {1}), "PGL2 λ=2 λ*=1", rng);
  affine_relations(t, AffineHecke(a2, {1, 1}, {}), "A2", rng);
  affine_relations(t, AffineHecke(b2, {1, 3}, {std::nullopt, 1}), "B2 λ=(1,3) λ*=1", rng);
  graded_relations(t, GradedHecke(sl2, {2}), "graded SL2", rng);
  graded_relations(t, GradedHecke(a2, {1, 1}), "graded A2", rng);
  graded_relations(t, GradedHecke(b2, {2, 3}), "graded B2", rng);
}

// --- 10: eigenvalue round trip -------------------------------------------------------

std::vector<CScalar> random_dominant(const EigenModel& c, std::mt19937_64& rng) {
  int k = model_arity(c);
  std::vector<CScalar> x;
  for (int i = 0; i < k; ++i) {
    CScalar v(rand_rat(rng, 12, 4), std::uniform_int_distribution<int>(0, 1)(rng) ? rand_rat(rng, 3, 2) : Rat(0));
    if (c.tag != "sl" && !complex_ge(v)) v = -v;
    x.push_back(v);
  }
  std::sort(x.begin(), x.end(), [](const CScalar& a, const CScalar& b) { return complex_less(b, a); });
  if (c.tag == "sl") {
    CScalar mean;
    for (auto& v : x) mean += v;
    mean = mean * CScalar(Rat(1, k));
    for (auto& v : x) v -= mean;
  }
  return x;
}

void suite_eigen_roundtrip(Tally& t, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, EigenModel>> cases{
      {"sl (2,2)", {"sl", 2, 2, 0, {}}},
      {"sl (2,3)", {"sl", 2, 3, 0, {}}},
      {"sp p=2 n=3", {"sp", 0, 0, 2, cuspidal_parts("sp", 2)}},
      {"so-even-sl2 p=1 n=1", {"so-even-sl2", 0, 0, 1, {1, 1}}},
  };
  for (auto& [name, c] : cases)
    for (int zi = 0; zi <= 1; ++zi) {
      CScalar z{Rat(zi)};
      for (int trial = 0; trial < 100; ++trial) {
        auto x = random_dominant(c, rng);
        bool ok = false;
        try {
          ok = dominant_from_multiset(c, eigen_multiset(c, x, z), z) == x;
        } catch (const ValidationError&) {
        }
        t.check(ok, name + " z=" + std::to_string(zi) + ": round trip fails");
      }
    }
  // Brute force for sl_4 with a = b = 2: every dominant x with the same multiset.
  EigenModel c{"sl", 2, 2, 0, {}};
  for (int zi = 0; zi <= 1; ++zi) {
    CScalar z{Rat(zi)};
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_dominant(c, rng);
      Multiset Y = eigen_multiset(c, x, z);
      std::set<std::vector<CScalar>, std::function<bool(const std::vector<CScalar>&, const std::vector<CScalar>&)>>
          found([](const std::vector<CScalar>& a, const std::vector<CScalar>& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), complex_less);
          });
      std::vector<CScalar> cand;
      for (auto& y : Y)
        for (int l = 0; l < 2; ++l) cand.push_back(y - z * CScalar(Rat(1 - 2 * l)));
      for (auto& x0 : cand) {
        std::vector<CScalar> trial_x{x0, -x0};
        try {
          if (eigen_multiset(c, trial_x, z) == Y) found.insert(trial_x);
        } catch (const ValidationError&) {
        }
      }
      auto greedy = dominant_from_multiset(c, Y, z);
      t.check(found.size() == 1 && *found.begin() == greedy, "sl (2,2) brute force finds " +
                                                                  std::to_string(found.size()) + " preimages");
    }
  }
}

// --- 11: structural identities ------------------------------------------------------

void suite_structural(Tally& t) {
  for (auto& [type, d] : supported_folds()) {
    auto f = FoldedRootDatum::standard(type, d);
    long long sum = 0, prod = 1;
    for (auto m : f.marks()) sum += m;
    for (int i = 1; i < f.num_nodes(); ++i) prod *= f.dprime_nodes()[i];
    std::string tag = type + " d=" + std::to_string(d);
    t.check(sum == f.reduced().coxeter_number(), tag + ": Σ n_i = " + std::to_string(sum) + " differs from h = " +
                                                     std::to_string(f.reduced().coxeter_number()));
    t.check(f.lattice_index() == Rat(prod), tag + ": lattice index " + f.lattice_index().str() + " differs from Π d'_i = " +
                                                 std::to_string(prod));
  }
  std::vector<CuspidalCase> cases;
  for (auto [type, d] : std::vector<std::pair<std::string, int>>{{"E6", 2}, {"D4", 3}})
    for (auto& c : enumerate_cases(type, d)) cases.push_back(c);
  for (int n = 2; n <= 9; ++n)
    for (auto& c : enumerate_cases("A" + std::to_string(n), 2)) cases.push_back(c);
  for (int n = 4; n <= 8; ++n)
    for (auto& c : enumerate_cases("D" + std::to_string(n), 2)) cases.push_back(c);
  std::vector<TableRow> rows = table_rows(cases);
  for (auto& row : rows) {
    std::string tag = row.input.id + " " + row.input.type;
    for (auto& [k, v] : row.input.params)
      if (k != "n") tag += " " + k + "=" + std::to_string(v);
    bool z_ok = true, mu_ok = true;
    for (auto& m : row.checks_failed) {
      if (m.find("z_k") != std::string::npos) z_ok = false;
      if (m.find("mu") != std::string::npos) mu_ok = false;
    }
    t.check(z_ok, tag + ": z_k != n_k/ñ_k");
    t.check(mu_ok, tag + ": μ != 2λ on a ♯ node");
    t.check(row.checks_failed.empty(), tag + ": " + join(row.checks_failed, "; "));
  }
  t.note(std::to_string(rows.size()) + " table rows checked");
}

struct SuiteDef {
  std::string name;
  double budget;
  std::function<void(Tally&, uint64_t)> run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"table-e6-iwahori", 30, [](Tally& t, uint64_t) { suite_table_e6(t); }},
      {"table-d4-triality-iwahori", 10, [](Tally& t, uint64_t) { suite_table_d4(t); }},
      {"classical-families", 30, [](Tally& t, uint64_t) { suite_families(t); }},
      {"e6-ubar", 120, [](Tally& t, uint64_t) { suite_e6_ubar(t); }},
      {"alcove-reduction", 120, suite_alcove},
      {"graded-pieces", 180, [](Tally& t, uint64_t) { suite_pieces(t); }},
      {"vertex-fixed-subalgebra", 180, [](Tally& t, uint64_t) { suite_vertices(t); }},
      {"membership-two-sided", 180, [](Tally& t, uint64_t) { suite_membership(t); }},
      {"hecke-relations", 60, suite_hecke},
      {"eigenvalue-roundtrip", 60, suite_eigen_roundtrip},
      {"structural", 300, [](Tally& t, uint64_t) { suite_structural(t); }},
  };
  return defs;
}

}  // namespace

const std::vector<std::pair<std::string, int>>& supported_folds() {
  static const std::vector<std::pair<std::string, int>> folds{
      {"A1", 1}, {"A2", 1}, {"A3", 1}, {"D4", 1}, {"E6", 1}, {"A2", 2}, {"A3", 2}, {"A4", 2},
      {"A5", 2}, {"A6", 2}, {"D4", 2}, {"D5", 2}, {"D6", 2}, {"D4", 3}, {"E6", 2}};
  return folds;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto& s : suites()) v.push_back(s.name);
    return v;
  }();
  return names;
}

int suite_id(const std::string& name) {
  const auto& names = suite_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name || std::to_string(i + 1) == name) return static_cast<int>(i + 1);
  throw ValidationError("unknown suite '" + name + "'; expected all, 1-11 or one of: " + join(names, ", "));
}

SuiteResult run_suite(int id, uint64_t seed) {
  if (id < 1 || id > static_cast<int>(suites().size())) throw ValidationError("suite id out of range");
  const SuiteDef& def = suites()[id - 1];
  SuiteResult r;
  r.id = id;
  r.name = def.name;
  r.budget_seconds = def.budget;
  Tally t{&r};
  auto t0 = std::chrono::steady_clock::now();
  try {
    def.run(t, seed);
  } catch (const std::exception& e) {
    ++r.failures;
    r.messages.insert(r.messages.begin(), std::string("aborted: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.budget_seconds)
    r.messages.push_back("over the time budget of " + std::to_string(static_cast<int>(r.budget_seconds)) + " s");
  r.passed = r.failures == 0 && r.checks > 0 && r.seconds <= r.budget_seconds;
  return r;
}

std::vector<SuiteResult> run_all(uint64_t seed) {
  std::vector<SuiteResult> out;
  for (std::size_t i = 1; i <= suites().size(); ++i) out.push_back(run_suite(static_cast<int>(i), seed));
  return out;
}

json SuiteResult::to_json() const {
  return {{"id", id},           {"name", name},       {"passed", passed},          {"checks", checks},
          {"failures", failures}, {"seconds", seconds}, {"budget_seconds", budget_seconds}, {"messages", messages}};
}

std::string SuiteResult::line() const {
  std::ostringstream os;
  os << (passed ? "[PASS] " : "[FAIL] ") << id << " " << name << ": " << checks << " checks, " << failures
     << " failures, ";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << seconds << " s";
  return os.str();
}

}  // namespace fh
