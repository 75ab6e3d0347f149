#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "foldhecke/alcove.hpp"
#include "foldhecke/folding.hpp"

namespace fh {

using Elem = std::vector<CycScalar>;

struct GradedPiece {
  IVec beta;  // zero vector for the Cartan part
  int root = -1;  // index into rroots(), -1 for the Cartan part
  int j = 0;
  std::vector<Elem> basis;
};

struct Sl2Triple {
  Elem e, h, f;
  std::vector<int> J;
};

// Chevalley basis {h_i'} ∪ {x_alpha} of a simply-laced algebra with the pinned
// diagram automorphism Ad(tau).  Basis index: i' for h_i', rank + k for roots()[k].
class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra(const std::string& type, int d);
  explicit ChevalleyAlgebra(FoldedRootDatum folded);

  const FoldedRootDatum& folded() const { return folded_; }
  const CartanDatum& base() const { return folded_.base(); }
  int d() const { return folded_.d(); }
  int dim() const { return dim_; }
  int rank() const { return base().rank(); }
  std::string basis_label(int p) const;

  // Integer structure constants of [b_p, b_q].
  const std::vector<std::pair<int, int>>& bracket_basis(int p, int q) const { return table_[p * dim_ + q]; }
  Elem bracket(const Elem& u, const Elem& v) const;
  Elem zero() const { return Elem(dim_, CycScalar()); }
  Elem unit(int p) const;

  // Ad(tau) b_p = tau_coef(p) * b_{tau_perm(p)}.
  int tau_perm(int p) const { return tau_perm_[p]; }
  int tau_coef(int p) const { return tau_coef_[p]; }
  Elem ad_tau(const Elem& u) const;

  const std::vector<GradedPiece>& pieces() const { return pieces_; }
  // Dimension of g_{beta,j} for beta = rroots()[root].
  int piece_dim(int root, int j) const;

  // Exhaustive checks on basis elements.
  bool check_antisymmetry() const;
  bool check_jacobi() const;  // OpenMP over the first index
  bool check_jacobi_serial() const;
  bool check_tau_automorphism() const;
  bool check_tau_order() const;
  bool check_pieces() const;

  // Triple for the even nilpotent with the given weights on J (weights[i] for J[i]).
  Sl2Triple distinguished_nilpotent(const std::vector<int>& J, const std::vector<int>& weights,
                                    uint64_t seed = 20240611) const;
  // One plus the nilpotency index of ad(e) on g_{J∪k} / g_J.
  int u_bar(const std::vector<int>& J, int k, const Sl2Triple& triple) const;

  // Pieces of g_J (always including 𝔱) as indices into pieces().
  std::vector<int> host_pieces(const std::vector<int>& J) const;
  // Fixed subalgebra of Ad(p(x')) as a multiset of restricted roots (beta coords).
  std::map<IVec, int> fixed_root_multiset(const AlcovePoint& x) const;

  int cartan_piece() const;
  // h_{i'} coordinates of a Cartan element.
  QVec cartan_coords(const Elem& h) const;
  // Component of w in the sum of the pieces flagged in keep.
  Elem project(const Elem& w, const std::vector<bool>& keep) const;

  nlohmann::json dump() const;

 private:
  struct Block {
    std::vector<int> positions;               // basis indices of a root block or of 𝔱'
    Mat<CycScalar> inv;                       // block coordinates -> eigenbasis coordinates
    std::vector<std::pair<int, int>> columns;  // (piece, basis vector) per eigenbasis column
  };

  void build_table();
  void build_tau();
  void build_pieces();

  FoldedRootDatum folded_;
  Alcove alcove_;
  int dim_ = 0;
  std::vector<std::vector<std::pair<int, int>>> table_;
  std::vector<int> tau_perm_, tau_coef_;
  std::vector<GradedPiece> pieces_;
  std::map<std::pair<int, int>, int> piece_index_;
  std::vector<Block> blocks_;
};

// Weighted Dynkin diagram from the Jordan type of a nilpotent in the natural
// representation of a classical algebra ('B', 'C', 'D'), Bourbaki order.
std::vector<int> wdd_from_partition(char letter, int rank, const std::vector<int>& partition);

}  // namespace fh
