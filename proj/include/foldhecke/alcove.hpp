#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "foldhecke/folding.hpp"

namespace fh {

// Point of V' in the coordinates c_i = b_i(x'), i in I.
struct AlcovePoint {
  std::vector<CScalar> c;
};

// Element of the affine Weyl group: linear action on c-coordinates plus the word
// (word[0] is applied first).
struct AffineMap {
  QMat linear;
  std::vector<int> word;
};

struct ReduceResult {
  AlcovePoint canonical;
  std::vector<int> S;
  AffineMap w;
};

struct NElement {
  int root = 0;  // index into rroots()
  int j = 0;
};

struct Membership {
  bool holds = false;
  std::vector<long long> certificate;  // coefficients on (beta_i, p_i), i in I - S, when holds
};

struct GJDatum {
  std::vector<int> J;
  std::vector<IVec> roots;  // beta coordinates
  IMat cartan;              // 'a restricted to J
  std::vector<Component> components;
};

class Alcove {
 public:
  explicit Alcove(FoldedRootDatum f);

  const FoldedRootDatum& folded() const { return f_; }
  int num_nodes() const { return f_.num_nodes(); }

  CScalar level(const AlcovePoint& x) const;
  AlcovePoint vertex(int k) const;  // b'_k / n_k
  AlcovePoint apply(int i, const AlcovePoint& x) const;
  AlcovePoint apply_word(const std::vector<int>& word, const AlcovePoint& x) const;
  QMat reflection_matrix(int i) const;

  ReduceResult reduce(const AlcovePoint& x) const;
  // OpenMP over the points; reduce_batch_serial is the reference.
  std::vector<ReduceResult> reduce_batch(const std::vector<AlcovePoint>& xs) const;
  std::vector<ReduceResult> reduce_batch_serial(const std::vector<AlcovePoint>& xs) const;
  std::vector<int> stabilizer(const AlcovePoint& canonical) const;
  static std::vector<int> cell(const AlcovePoint& canonical);

  // beta(x' - b'_0) with beta in beta coordinates.
  CScalar beta_at(const IVec& beta, const AlcovePoint& x) const;
  // gamma(x' - b'_0) with gamma in gamma coordinates of R.
  CScalar gamma_at(const IVec& gamma, const AlcovePoint& x) const;

  std::vector<NElement> n_set() const;
  bool in_n(int root, int j) const;
  bool condition_i(int root, int j, const AlcovePoint& x) const;
  std::optional<std::vector<long long>> condition_ii(int root, int j, const std::vector<int>& S) const;
  // Both sides evaluated independently; disagreement throws InvariantError.
  Membership n_membership(int root, int j, const AlcovePoint& x) const;

  // Membership of (beta, j) in the Z-span of (beta_i, p_i), i in J.
  std::optional<std::vector<long long>> in_span(const IVec& beta, int j, const std::vector<int>& J) const;

  GJDatum gj_root_datum(const std::vector<int>& J) const;

  // Coordinates of x' - b'_0 on the basis of 'Y, real parts reduced mod 1.
  std::vector<CScalar> p_map(const AlcovePoint& x) const;
  // x' - b'_0 on the basis {h_i} of Y (unreduced).
  std::vector<CScalar> y_coords(const AlcovePoint& x) const;
  // W of R as integer matrices on Y coordinates (bounded enumeration).
  std::vector<IMat> weyl_on_y(std::size_t bound = 100000) const;
  // Brute-force test of W-equivalence of y1, y2 modulo Y (both in Y coordinates).
  static bool same_n_orbit(const std::vector<CScalar>& y1, const std::vector<CScalar>& y2,
                           const std::vector<IMat>& weyl);
  // Rank of Y ∩ V'_K for K = I - J.
  int y_rank_on(const std::vector<int>& K) const;

  static AlcovePoint parse_point(const std::string& text);
  nlohmann::json to_json(const ReduceResult& r, const AlcovePoint& input) const;

 private:
  FoldedRootDatum f_;
};

std::string point_str(const AlcovePoint& x);

}  // namespace fh
