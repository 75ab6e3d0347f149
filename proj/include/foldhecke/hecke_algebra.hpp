#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "foldhecke/linalg.hpp"

namespace fh {

// Finite Laurent series with integer coefficients; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(int e, long long c = 1);

  const std::map<int, long long>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  long long coeff(int e) const;
  void add(int e, long long c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "v") const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  std::map<int, long long> t_;
};

// Root datum with a chosen basis: X = Y = Z^r with the dot pairing.
struct HeckeRootDatum {
  IMat roots;    // simple roots in X
  IMat coroots;  // simple coroots in Y, same order
  int rank() const { return roots.empty() ? 0 : static_cast<int>(roots[0].size()); }
  int num_simple() const { return static_cast<int>(roots.size()); }
  long long pair(const IVec& x, int i) const;  // <x, coroot_i>
  IVec reflect(const IVec& x, int i) const;
  bool coroot_in_2Y(int i) const;
  // R spans a finite-index sublattice of X.
  bool roots_finite_index() const;
  void validate() const;
};

// Finite Weyl group W0 generated by the simple reflections, enumerated breadth-first.
// Element 0 is the identity.
class FiniteWeyl {
 public:
  explicit FiniteWeyl(const HeckeRootDatum& rd, std::size_t limit = 2000);
  int size() const { return static_cast<int>(mats_.size()); }
  int length(int w) const { return len_[w]; }
  const std::vector<int>& word(int w) const { return word_[w]; }
  int right(int w, int i) const { return right_[w][i]; }  // w s_i
  int multiply(int w, int u) const;
  int from_word(const std::vector<int>& word) const;
  IVec act(int w, const IVec& x) const;
  std::string name(int w) const;  // "1" or "s1s2"

 private:
  std::vector<IMat> mats_;
  std::vector<int> len_;
  std::vector<std::vector<int>> word_;
  std::vector<std::vector<int>> right_;
};

using ThetaPoly = std::map<IVec, LaurentPoly>;  // Σ c_x θ_x

// Numerator Σ_k c_k θ_{kα} over the denominator θ_{mα} - 1.
struct GammaFactor {
  std::map<int, LaurentPoly> numerator;
  int denominator_multiple = 1;
  std::string str() const;
};

// Printed exponent layouts for the factor 𝒢(α).  consistent: (θ_α v^{2λ} - 1)/(θ_α - 1) and
// (θ_α v^{λ+λ*} - 1)(θ_α v^{λ-λ*} + 1)/(θ_{2α} - 1).  literal: θ_α v^{2λ-1}/(θ_α - 1) and
// exponents 2λ±λ*, which break the quadratic relation.
enum class GammaReading { consistent, literal };

struct HeckeElement {
  std::map<std::pair<int, IVec>, LaurentPoly> terms;  // (w, x) -> coefficient of T_w θ_x
  void add(int w, const IVec& x, const LaurentPoly& c);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms == b.terms; }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }
};

// H^{λ,λ*}_{R,X} in the normal form Σ c T_w θ_x.
class AffineHecke {
 public:
  AffineHecke(HeckeRootDatum rd, std::vector<int> lambda, std::vector<std::optional<int>> lambda_star,
              GammaReading reading = GammaReading::consistent, int max_rank = 2);

  const HeckeRootDatum& datum() const { return rd_; }
  const FiniteWeyl& weyl() const { return weyl_; }
  int lambda(int i) const { return lambda_[i]; }
  int lambda_star(int i) const;  // throws unless the coroot lies in 2Y

  HeckeElement T(int w) const;
  HeckeElement theta(const IVec& x) const;
  HeckeElement one() const { return theta(IVec(rd_.rank(), 0)); }
  HeckeElement from_theta(const ThetaPoly& p) const;

  GammaFactor gamma_factor(int i) const;
  // (θ_x - θ_{s_i x}) 𝒢(α_i) after exact division.
  ThetaPoly bernstein_cross(const IVec& x, int i) const;
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  ThetaPoly orbit_sum(const IVec& x) const;  // Σ_{w ∈ W0} θ_{w x}
  // Each θ-sum commutes with every T_{s_i}.
  bool center_check(const std::vector<ThetaPoly>& elements) const;

  std::string str(const HeckeElement& e) const;
  nlohmann::json to_json(const HeckeElement& e) const;
  HeckeElement from_json(const nlohmann::json& j) const;

 private:
  HeckeElement right_mult_simple(const HeckeElement& e, int i) const;

  HeckeRootDatum rd_;
  FiniteWeyl weyl_;
  std::vector<int> lambda_;
  std::vector<std::optional<int>> lambda_star_;
  GammaReading reading_;
};

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
HeckeElement scale(const HeckeElement& a, const LaurentPoly& c);

// Polynomials on E' ⊕ C: variables e_1..e_r (a basis of E = X ⊗ Q), then r.
using GradedPoly = std::map<std::vector<int>, Rat>;

struct GradedElement {
  std::map<std::pair<int, std::vector<int>>, Rat> terms;  // (w, monomial) -> coefficient of t_w (f)
  void add(int w, const std::vector<int>& mono, const Rat& c);
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.terms == b.terms; }
  friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }
};

// H̄^μ_{R,E} in the normal form Σ t_w (f).
class GradedHecke {
 public:
  GradedHecke(HeckeRootDatum rd, std::vector<long long> mu, int max_rank = 2);

  const HeckeRootDatum& datum() const { return rd_; }
  const FiniteWeyl& weyl() const { return weyl_; }
  int num_vars() const { return rd_.rank() + 1; }

  GradedPoly variable(int j) const;  // j = rank() is r
  GradedPoly root_form(int i) const;
  GradedPoly reflect(const GradedPoly& f, int i) const;
  // Exact quotient by the linear form α_i; throws InvariantError on a remainder.
  GradedPoly divide_by_root(const GradedPoly& g, int i) const;

  GradedElement t(int w) const;
  GradedElement poly(const GradedPoly& f) const;
  GradedElement one() const { return poly({{std::vector<int>(num_vars(), 0), Rat(1)}}); }
  // μ(α_i) r (f - s_i f)/α_i.
  GradedElement graded_cross(const GradedPoly& f, int i) const;
  GradedElement multiply(const GradedElement& a, const GradedElement& b) const;
  GradedPoly orbit_sum(const GradedPoly& f) const;
  bool center_check(const std::vector<GradedPoly>& elements) const;

  std::string str(const GradedElement& e) const;

 private:
  GradedElement right_mult_simple(const GradedElement& e, int i) const;

  HeckeRootDatum rd_;
  FiniteWeyl weyl_;
  std::vector<long long> mu_;
};

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b, const Rat& scale_b = Rat(1));
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);
GradedElement operator+(const GradedElement& a, const GradedElement& b);
GradedElement operator-(const GradedElement& a, const GradedElement& b);

// A weight t through x(t) = exp(2πi·torsion)·v0^{exponent} on each X basis element.
struct WeightDatum {
  std::vector<std::pair<Rat, Rat>> coords;  // (torsion in Q/Z, exponent) per basis element
  Rat exponent(const IVec& x) const;
  Rat torsion(const IVec& x) const;
};

// Every weight has a nonnegative exponent on each generator of X⁺.
bool tempered_predicate(const std::vector<WeightDatum>& weights, const IMat& xplus_generators,
                        const HeckeRootDatum& rd);
// Strictly positive on each nonzero generator; needs R of finite index in X.
bool square_integrable_predicate(const std::vector<WeightDatum>& weights, const IMat& xplus_generators,
                                 const HeckeRootDatum& rd);

}  // namespace fh
