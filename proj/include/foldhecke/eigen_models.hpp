#pragma once

#include <string>
#include <vector>

#include "foldhecke/scalar.hpp"

namespace fh {

using Multiset = std::vector<CScalar>;  // kept sorted by complex_less

// Parameters of one eigenvalue model for x + z h^0.
//   "sl": sl_{ab}, x = (x_0..x_{b-1}) with sum zero.
//   "sp": sp_{2n+2p}, x = (x_1..x_p).
//   "so": so_{n+2p}.
//   "so-even-sl2": so_{2n+4p}, x_i paired with an sl_2 factor.
//   "so-odd-sl2": so_{2n+1+4p}, as so-even-sl2.
// For the sp and so models, `parts` is the Jordan type of h^0's nilpotent on the small factor.
//   "e6-minuscule": E6 minuscule, x = (a, b).
//   "e7-minuscule": E7 minuscule, x = (a, b, c, d).
struct EigenModel {
  std::string tag;
  int a = 0, b = 0;        // sl only
  int p = 0;               // sp and so models
  std::vector<int> parts;  // sp and so models
};

// Cuspidal Jordan type for the small factor: sp with n = m(m+1)/2 (parts 2, 4, ..., 2m);
// so with n = m^2 (parts 1, 3, ..., 2m-1); the sl2-paired so models with dim m(m+1)/2
// (parts 2m-1, 2m-5, ...).
std::vector<int> cuspidal_parts(const std::string& tag, int m);

Multiset make_multiset(std::vector<CScalar> v);
// Number of coordinates of x for the case.
int model_arity(const EigenModel& c);

Multiset eigen_multiset(const EigenModel& c, const std::vector<CScalar>& x, const CScalar& z);
// Greedy max-extraction; throws ValidationError("not in the image") when peeling fails.
std::vector<CScalar> dominant_from_multiset(const EigenModel& c, const Multiset& Y, const CScalar& z);

}  // namespace fh
