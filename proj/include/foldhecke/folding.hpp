#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "foldhecke/rootdata.hpp"

namespace fh {

// Restriction of a tau-orbit of roots of R' to the fixed torus.
struct RestrictedRoot {
  IVec beta;               // coordinates on beta_1..beta_r
  int dprime = 1;          // orbit size
  int dsec = 1;            // 2 iff 2*beta or beta/2 is also restricted
  int d = 1;               // dprime * dsec
  std::vector<int> orbit;  // indices into base().roots()
  QVec coroot;             // 'h_beta in h_{i'} coordinates
};

// Folding of a simply-laced datum by a diagram automorphism.  Affine index set
// I = {0, 1, ..., r}; node i >= 1 is the tau-orbit orbits()[i-1] of I'.
class FoldedRootDatum {
 public:
  static FoldedRootDatum fold(const CartanDatum& base, const std::vector<int>& tau);
  // Standard automorphism of order d for the given type code.
  static FoldedRootDatum standard(const std::string& type, int d);
  static std::vector<int> standard_tau(const CartanDatum& base, int d);

  const CartanDatum& base() const { return base_; }
  const std::string& label() const { return label_; }
  int d() const { return d_; }
  const std::vector<int>& tau() const { return tau_; }
  int r() const { return static_cast<int>(orbits_.size()); }
  int num_nodes() const { return r() + 1; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }

  const std::vector<RestrictedRoot>& rroots() const { return rroots_; }
  int rroot_index(const IVec& beta) const;  // -1 when absent
  bool is_rroot(const IVec& beta) const { return rroot_index(beta) >= 0; }
  bool non_reduced() const;

  // The reduced system R = {d_beta beta} in gamma coordinates; its Cartan datum.
  const CartanDatum& reduced() const { return reduced_; }

  // Affine data on I.
  const std::vector<IVec>& beta_nodes() const { return beta_nodes_; }  // beta_i, i in I
  const std::vector<int>& d_nodes() const { return d_nodes_; }
  const std::vector<int>& dprime_nodes() const { return dp_nodes_; }
  const std::vector<int>& dsec_nodes() const { return ds_nodes_; }
  const std::vector<long long>& marks() const { return marks_; }
  const IMat& a() const { return a_; }                  // a[i1][i2] = gamma_{i2}(h_{i1})
  const IMat& a_twisted() const { return a_twisted_; }  // 'a[i1][i2] = beta_{i2}('h_{beta_{i1}})
  const std::vector<QVec>& node_coroots() const { return node_coroots_; }  // 'h_{beta_i}

  // beta(h) for beta in beta coordinates and h in h_{i'} coordinates (h tau-fixed).
  Rat eval(const IVec& beta, const QVec& h) const;
  Rat eval(const QVec& beta, const QVec& h) const;
  // beta(y) for y in 𝔱 given by c-coordinates (c_i = gamma_i(y), i >= 1).
  Rat eval_c(const IVec& beta, const std::vector<Rat>& c) const;

  // Index of '𝒴 in 𝒴 from the Smith form of the basis change.
  Rat lattice_index() const;
  // Does psi(alpha) = psi(alpha') force alpha' into the tau-orbit of alpha?
  bool psi_check() const;
  // 'h_beta for a restricted root.
  const QVec& coroot_of(const IVec& beta) const;

  nlohmann::json to_json() const;

 private:
  CartanDatum base_ = CartanDatum::from_type("A1");
  CartanDatum reduced_ = CartanDatum::from_type("A1");
  std::string label_;
  int d_ = 1;
  std::vector<int> tau_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<RestrictedRoot> rroots_;
  std::map<IVec, int> rindex_;
  std::vector<IVec> beta_nodes_;
  std::vector<int> d_nodes_, dp_nodes_, ds_nodes_;
  std::vector<long long> marks_;
  IMat a_, a_twisted_;
  std::vector<QVec> node_coroots_;
};

// Allowed (type, d) combinations for folding, as text for error messages.
std::string allowed_folds();

}  // namespace fh
