#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "foldhecke/linalg.hpp"
#include "foldhecke/scalar.hpp"

namespace fh {

// Finite reduced root system on X = Z-span of the simple roots.
// cartan[i][j] = <alpha_j, alpha_i^vee>.  Y is the dual (fundamental coweight) lattice.
class CartanDatum {
 public:
  static CartanDatum from_type(const std::string& code);
  static CartanDatum from_matrix(const IMat& cartan, const std::string& label = "custom");

  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  const IMat& cartan() const { return cartan_; }
  bool simply_laced() const;

  // Positive roots first (height, then lexicographic), then their negatives in the same order.
  const std::vector<IVec>& roots() const { return roots_; }
  // Coroot of roots()[k] in simple-coroot coordinates.
  const std::vector<IVec>& coroots() const { return coroots_; }
  int num_positive() const { return static_cast<int>(roots_.size()) / 2; }
  std::optional<int> root_index(const IVec& r) const;
  // Symmetrized squared length, normalized so the shortest root has length 1.
  Rat length2(const IVec& root) const;

  // <x, alpha^vee> for x in root coordinates.
  long long pairing(const IVec& x, int root_idx) const;
  IVec reflect(const IVec& x, const IVec& alpha) const;
  IVec simple_reflect(const IVec& x, int i) const;
  IVec highest_root() const { return roots_[num_positive() - 1]; }
  int coxeter_number() const { return static_cast<int>(roots_.size()) / rank(); }

  nlohmann::json to_json() const;

 private:
  std::string label_;
  IMat cartan_;
  std::vector<Rat> simple_len2_;
  std::vector<IVec> roots_, coroots_;
  std::map<IVec, int> index_;
};

// Integer matrix of the simple reflection s_i on root coordinates.
IMat simple_reflection_matrix(const IMat& cartan, int i);

// Positive roots (root coordinates) of a finite-type generalized Cartan matrix; throws if
// more than `bound` are produced.
std::vector<IVec> positive_roots(const IMat& cartan, std::size_t bound = 4096);

// Symmetrizing squared lengths for a Cartan matrix (smallest per component = 1).
std::vector<Rat> symmetrizer(const IMat& cartan);

struct WeylElement {
  IMat matrix;
  std::vector<int> word;
  int length = 0;
};

std::vector<WeylElement> generate_weyl(const CartanDatum& datum, std::size_t bound = 200000);
// Longest element of the parabolic subgroup W_J.
WeylElement longest_element(const CartanDatum& datum, const std::vector<int>& J);
// Reduced word of the longest element of the finite Coxeter group with Cartan matrix `cartan`.
std::vector<int> longest_word(const IMat& cartan);
// Number of positive roots sent to negative roots by `matrix`.
int inversion_count(const CartanDatum& datum, const IMat& matrix);

struct Component {
  std::string name;        // e.g. "B4"
  char letter = 'A';
  int rank = 0;
  std::vector<int> nodes;  // indices into the input matrix, Bourbaki order
};

// Decompose a finite-type Cartan matrix into irreducible components with Bourbaki labelling.
std::vector<Component> classify_cartan(const IMat& cartan);
// Sub-matrix on the given index list.
IMat submatrix(const IMat& m, const std::vector<int>& idx);
// Coarse type string such as "A1xB4", components sorted by name.
std::string type_string(const std::vector<Component>& comps);
// Low-rank coincidences folded away: A1=B1=C1, B2=C2, D3=A3, D2=A1xA1.  Products
// such as "C1xB4" are canonicalized factorwise and sorted.
std::string canonical_type(const std::string& name);

}  // namespace fh
