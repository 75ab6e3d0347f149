#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "foldhecke/alcove.hpp"
#include "foldhecke/folding.hpp"

namespace fh {

class ChevalleyAlgebra;

// Catalog of distinguished orbits and exceptional rows; FOLDHECKE_CATALOG overrides
// the embedded copy.
const nlohmann::json& catalog();

// One box of the (beta_i)-graph: the nodes of a factor of G_J and its nilpotent orbit.
struct OrbitBox {
  std::vector<int> nodes;   // layout order
  char letter = 'A';
  int rank = 0;
  std::vector<int> parts;   // Jordan type for classical boxes
  std::vector<int> wdd;     // Bourbaki order of the box's own type
  std::string rule;         // catalog key of the orbit or partition rule
};

struct PrintedNode {
  int sub = 0;
  bool flat = false;
  std::string label;  // "u×z×d"
};

struct CuspidalCase {
  std::string id;  // "e6-iwahori"; families carry the family id
  std::string type;
  int d = 2;
  std::vector<int> J;
  std::vector<int> layout;  // I in (beta_i)-graph reading order
  std::vector<OrbitBox> boxes;
  std::string gj_type;      // canonical, "" when J is empty
  std::map<std::string, long long> params;  // a, b, s for families
  std::string branch;
  int local_systems = 1;
  std::vector<PrintedNode> printed;   // display order of the table
  std::vector<std::string> glyphs;    // printed bonds between consecutive printed nodes
  std::string ha;                     // printed H.A. string
  bool ha_literal = false;            // emitted verbatim
  std::optional<std::vector<long long>> ha_ends;  // H.A. template subscripts {left, right}
  std::optional<long long> ha_middle;             // H.A. template middle label
  std::string arithmetic;
  std::vector<std::string> notes;
};

// W* on 𝔷¹_J.  Vectors live in the c-coordinates indexed by K.
struct WStarData {
  std::vector<int> K;
  std::vector<QMat> sigma;        // sigma_k on all c-coordinates
  std::vector<QVec> u;            // sigma_k(x) = x - c_k(x) u_k on V'_K
  QMat lattice;                   // basis of ℒ'
  std::vector<QVec> htilde;
  std::vector<long long> z, ntilde, n;
  QMat pairing;                   // pairing[k][k'] = gamma~_{k'}(h~_k)
  IMat coxeter;                   // m_{kk'}, 0 for infinity
  bool type_c_tilde = false;
  std::vector<int> ends;          // K positions of the two ends when type_c_tilde
  int special = 0;                // K position of the vertex used for ℒ'
  long long finite_order = 0;     // |W*_{K-special}|
};

struct FlatSharp {
  std::vector<bool> flat;
  std::vector<Rat> zbar;
  IMat cartan;  // cartan[k][k'] = gamma^_{k'}(h^_k)
  int k0 = 0;   // K position
};

struct HeckeDescriptor {
  bool degenerate = false;  // |K| = 1
  std::vector<int> pi;      // K positions of Π
  IMat cartan;              // on Π, cartan[i][j] = gamma^_{pi[j]}(h^_{pi[i]})
  std::string root_type;
  std::vector<long long> lambda;
  std::vector<std::optional<long long>> lambda_star;
};

struct NodeData {
  int node = 0;
  int sub = 0;
  bool flat = false;
  int ubar = 0;
  Rat zbar;
  int d = 1;
  long long z = 0, ntilde = 0, n = 0;
  std::string ubar_source;  // "computed" or "catalog"
  std::string label() const;
};

struct TableRow {
  CuspidalCase input;
  std::vector<NodeData> nodes;  // K in subscript order
  std::optional<WStarData> wstar;
  std::optional<FlatSharp> split;
  HeckeDescriptor hecke;
  std::string gamma_graph, beta_graph, flat_sharp, flat_sharp_subscripted, ha;
  std::vector<std::string> notes;          // informational, not mismatches
  std::vector<std::string> discrepancies;  // computed data disagrees with the printed data
  std::vector<std::string> checks_failed;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// (beta_i)-graph reading order: a chain from its long end (node 0 on ties), or a
// fork listed leaf, leaf, branch node, then the rest.
std::vector<int> beta_layout(const FoldedRootDatum& f);

// Plain-text rendering of a Dynkin graph; cartan[i][j] = alpha_j(alpha_i^vee).
// text and boxed are indexed by node; boxed nodes are grouped in [ ].
std::string render_graph(const IMat& cartan, const std::vector<int>& order, const std::vector<std::string>& text,
                         const std::vector<bool>& boxed = {});

std::vector<QMat> sigma_involutions(const Alcove& alc, const std::vector<int>& J);
WStarData wstar_data(const Alcove& alc, const std::vector<int>& J);
FlatSharp flat_sharp_split(const WStarData& w, const std::vector<int>& ubar, const std::vector<int>& d);
HeckeDescriptor parameters(const WStarData& w, const FlatSharp& fs, const std::vector<int>& ubar,
                           const std::vector<int>& d);

// Family instance; throws ValidationError naming the violated constraint.
CuspidalCase family_case(const std::string& family, long long a, long long b, long long s);
// Rows of the tables for one ambient (type, d) in a fixed order.
std::vector<CuspidalCase> enumerate_cases(const std::string& type, int d);

// engine may be null; ū then comes from the printed labels.
TableRow table_row(const CuspidalCase& c, const ChevalleyAlgebra* engine = nullptr);
// Engine construction is skipped when the ambient type is outside its range.
TableRow table_row_auto(const CuspidalCase& c);
// OpenMP over the cases; output order follows the input order.
std::vector<TableRow> table_rows(const std::vector<CuspidalCase>& cases, bool parallel = true);

}  // namespace fh
