#include "foldhecke/hecke_algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "foldhecke/errors.hpp"

namespace fh {

using nlohmann::json;

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantError("Laurent coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("Laurent coefficient overflow");
  return r;
}

IVec vadd(IVec a, const IVec& b, long long k = 1) {
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += k * b[j];
  return a;
}

IMat imul(const IMat& a, const IMat& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  IMat c(n, IVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < b.size(); ++l)
      if (a[i][l])
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

std::string vec_str(const IVec& x) {
  std::string s = "(";
  for (std::size_t j = 0; j < x.size(); ++j) s += (j ? "," : "") + std::to_string(x[j]);
  return s + ")";
}

void check_bound(const HeckeRootDatum& rd, int max_rank) {
  if (rd.num_simple() > max_rank || rd.rank() > max_rank)
    throw ValidationError("Hecke algebra rank bound exceeded: " + std::to_string(rd.num_simple()) +
                          " simple roots in X of rank " + std::to_string(rd.rank()) + ", bound " +
                          std::to_string(max_rank));
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long long c) {
  if (c) t_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int e, long long c) {
  LaurentPoly p;
  p.add(e, c);
  return p;
}

long long LaurentPoly::coeff(int e) const {
  auto it = t_.find(e);
  return it == t_.end() ? 0 : it->second;
}

void LaurentPoly::add(int e, long long c) {
  if (!c) return;
  long long& slot = t_[e];
  slot = checked_add(slot, c);
  if (!slot) t_.erase(e);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto [e, c] : t_) r.t_[e] = checked_mul(c, -1);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.t_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.t_) add(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto [e1, c1] : a.t_)
    for (auto [e2, c2] : b.t_) r.add(e1 + e2, checked_mul(c1, c2));
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto [e, c] = *it;
    long long mag = c < 0 ? -c : c;
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

json LaurentPoly::to_json() const {
  json j = json::array();
  for (auto [e, c] : t_) j.push_back({e, c});
  return j;
}

LaurentPoly LaurentPoly::from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("Laurent polynomial must be an array of [exponent, coefficient]");
  LaurentPoly p;
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw ValidationError("Laurent term must be [exponent, coefficient]");
    p.add(t[0].get<int>(), t[1].get<long long>());
  }
  return p;
}

// ---------------------------------------------------------------------------
// Root datum and W0

long long HeckeRootDatum::pair(const IVec& x, int i) const {
  long long s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * coroots[i][j];
  return s;
}

IVec HeckeRootDatum::reflect(const IVec& x, int i) const { return vadd(x, roots[i], -pair(x, i)); }

bool HeckeRootDatum::coroot_in_2Y(int i) const {
  return std::all_of(coroots[i].begin(), coroots[i].end(), [](long long c) { return c % 2 == 0; });
}

bool HeckeRootDatum::roots_finite_index() const {
  if (roots.empty()) return rank() == 0;
  return static_cast<int>(fh::rank(to_qmat(roots))) == rank();
}

void HeckeRootDatum::validate() const {
  if (roots.size() != coroots.size()) throw ValidationError("roots and coroots differ in number");
  int r = rank();
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (static_cast<int>(roots[i].size()) != r || static_cast<int>(coroots[i].size()) != r)
      throw ValidationError("root and coroot vectors must all have length " + std::to_string(r));
  for (int i = 0; i < num_simple(); ++i)
    for (int j = 0; j < num_simple(); ++j) {
      long long aij = pair(roots[j], i), aji = pair(roots[i], j);
      if (i == j && aij != 2) throw ValidationError("<alpha_i, coroot_i> must be 2");
      if (i != j && (aij > 0 || (aij == 0) != (aji == 0)))
        throw ValidationError("pairings of distinct simple roots do not form a Cartan matrix");
    }
}

FiniteWeyl::FiniteWeyl(const HeckeRootDatum& rd, std::size_t limit) {
  int r = rd.rank(), k = rd.num_simple();
  std::vector<IMat> gens;
  for (int i = 0; i < k; ++i) {
    IMat s(r, IVec(r, 0));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) s[a][b] = (a == b) - rd.roots[i][a] * rd.coroots[i][b];
    gens.push_back(s);
  }
  IMat id(r, IVec(r, 0));
  for (int a = 0; a < r; ++a) id[a][a] = 1;
  std::map<IMat, int> index{{id, 0}};
  mats_ = {id};
  len_ = {0};
  word_ = {{}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      IMat m = imul(mats_[w], gens[i]);
      if (index.count(m)) continue;
      if (mats_.size() >= limit) throw ValidationError("Weyl group exceeds " + std::to_string(limit) + " elements");
      int id2 = static_cast<int>(mats_.size());
      index[m] = id2;
      mats_.push_back(m);
      len_.push_back(len_[w] + 1);
      auto wd = word_[w];
      wd.push_back(i);
      word_.push_back(wd);
      queue.push_back(id2);
    }
  }
  right_.assign(mats_.size(), std::vector<int>(k));
  for (std::size_t w = 0; w < mats_.size(); ++w)
    for (int i = 0; i < k; ++i) right_[w][i] = index.at(imul(mats_[w], gens[i]));
}

int FiniteWeyl::multiply(int w, int u) const {
  for (int i : word_[u]) w = right_[w][i];
  return w;
}

int FiniteWeyl::from_word(const std::vector<int>& word) const {
  int w = 0;
  for (int i : word) {
    if (i < 0 || right_.empty() || i >= static_cast<int>(right_[0].size()))
      throw ValidationError("simple reflection index " + std::to_string(i + 1) + " out of range");
    w = right_[w][i];
  }
  return w;
}

IVec FiniteWeyl::act(int w, const IVec& x) const {
  IVec y(x.size(), 0);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) y[a] += mats_[w][a][b] * x[b];
  return y;
}

std::string FiniteWeyl::name(int w) const {
  if (word_[w].empty()) return "1";
  std::string s;
  for (int i : word_[w]) s += "s" + std::to_string(i + 1);
  return s;
}

// ---------------------------------------------------------------------------
// Affine Hecke algebra

std::string GammaFactor::str() const {
  std::string num;
  for (auto it = numerator.rbegin(); it != numerator.rend(); ++it) {
    if (!num.empty()) num += " + ";
    std::string th = it->first == 0 ? "" : (it->first == 1 ? "θ_α" : "θ_{" + std::to_string(it->first) + "α}");
    num += "(" + it->second.str() + ")" + (th.empty() ? "" : "·" + th);
  }
  std::string den = denominator_multiple == 1 ? "θ_α - 1" : "θ_{" + std::to_string(denominator_multiple) + "α} - 1";
  return "[" + num + "] / [" + den + "]";
}

void HeckeElement::add(int w, const IVec& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(w, x);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (auto& [k, c] : b.terms) r.add(k.first, k.second, c);
  return r;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (auto& [k, c] : b.terms) r.add(k.first, k.second, -c);
  return r;
}

HeckeElement scale(const HeckeElement& a, const LaurentPoly& c) {
  HeckeElement r;
  for (auto& [k, x] : a.terms) r.add(k.first, k.second, x * c);
  return r;
}

AffineHecke::AffineHecke(HeckeRootDatum rd, std::vector<int> lambda, std::vector<std::optional<int>> lambda_star,
                         GammaReading reading, int max_rank)
    : rd_((rd.validate(), check_bound(rd, max_rank), std::move(rd))),
      weyl_(rd_),
      lambda_(std::move(lambda)),
      lambda_star_(std::move(lambda_star)),
      reading_(reading) {
  int k = rd_.num_simple();
  if (static_cast<int>(lambda_.size()) != k) throw ValidationError("lambda needs one value per simple root");
  if (lambda_star_.empty()) lambda_star_.assign(k, std::nullopt);
  if (static_cast<int>(lambda_star_.size()) != k) throw ValidationError("lambda* needs one slot per simple root");
  for (int i = 0; i < k; ++i) {
    if (lambda_[i] < 0) throw ValidationError("lambda takes values in N");
    bool two_y = rd_.coroot_in_2Y(i);
    if (two_y && !lambda_star_[i])
      throw ValidationError("lambda* required for simple root " + std::to_string(i + 1) + " (coroot in 2Y)");
    if (!two_y && lambda_star_[i])
      throw ValidationError("lambda* given for simple root " + std::to_string(i + 1) + " whose coroot is not in 2Y");
    if (lambda_star_[i] && *lambda_star_[i] < 0) throw ValidationError("lambda* takes values in N");
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && rd_.pair(rd_.roots[i], j) == -1 && rd_.pair(rd_.roots[j], i) == -1 && lambda_[i] != lambda_[j])
        throw ValidationError("parameter set: lambda must agree on simple roots " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " joined by a simple bond");
}

int AffineHecke::lambda_star(int i) const {
  if (!lambda_star_.at(i)) throw ValidationError("lambda* is defined only for simple roots with coroot in 2Y");
  return *lambda_star_[i];
}

HeckeElement AffineHecke::T(int w) const {
  HeckeElement e;
  e.add(w, IVec(rd_.rank(), 0), 1);
  return e;
}

HeckeElement AffineHecke::theta(const IVec& x) const {
  if (static_cast<int>(x.size()) != rd_.rank()) throw ValidationError("theta exponent has the wrong length");
  HeckeElement e;
  e.add(0, x, 1);
  return e;
}

HeckeElement AffineHecke::from_theta(const ThetaPoly& p) const {
  HeckeElement e;
  for (auto& [x, c] : p) e.add(0, x, c);
  return e;
}

GammaFactor AffineHecke::gamma_factor(int i) const {
  GammaFactor g;
  int l = lambda_.at(i);
  bool literal = reading_ == GammaReading::literal;
  if (!rd_.coroot_in_2Y(i)) {
    g.denominator_multiple = 1;
    if (literal) {
      g.numerator[1] = LaurentPoly::monomial(2 * l - 1);
    } else {
      g.numerator[1] = LaurentPoly::monomial(2 * l);
      g.numerator[0] = -1;
    }
    return g;
  }
  int ls = lambda_star(i);
  int a = literal ? 2 * l + ls : l + ls, b = literal ? 2 * l - ls : l - ls;
  // (θ v^a - 1)(θ v^b + 1)
  g.denominator_multiple = 2;
  g.numerator[2] = LaurentPoly::monomial(a + b);
  g.numerator[1] = LaurentPoly::monomial(a) - LaurentPoly::monomial(b);
  g.numerator[0] = -1;
  if (g.numerator[1].is_zero()) g.numerator.erase(1);
  return g;
}

ThetaPoly AffineHecke::bernstein_cross(const IVec& x, int i) const {
  IVec sx = rd_.reflect(x, i);
  if (sx == x) return {};
  GammaFactor g = gamma_factor(i);
  const IVec& al = rd_.roots[i];
  ThetaPoly num;
  auto acc = [&](const IVec& y, const LaurentPoly& c) {
    auto& slot = num[y];
    slot += c;
    if (slot.is_zero()) num.erase(y);
  };
  for (auto& [k, c] : g.numerator) {
    acc(vadd(x, al, k), c);
    acc(vadd(sx, al, k), -c);
  }
  // Exact division by θ_β - 1, β = mα, peeling the top α̌-height term.
  IVec beta = vadd(IVec(al.size(), 0), al, g.denominator_multiple);
  long long drop = rd_.pair(beta, i);
  long long minh = 0;
  bool first = true;
  for (auto& [y, c] : num) {
    long long h = rd_.pair(y, i);
    if (first || h < minh) minh = h;
    first = false;
  }
  ThetaPoly quo;
  while (!num.empty()) {
    auto top = num.begin();
    for (auto it = num.begin(); it != num.end(); ++it)
      if (rd_.pair(it->first, i) > rd_.pair(top->first, i)) top = it;
    IVec y = top->first;
    LaurentPoly c = top->second;
    if (rd_.pair(y, i) - drop < minh) throw InvariantError("θ-division by 𝒢 denominator left a remainder");
    IVec y2 = vadd(y, beta, -1);
    quo[y2] += c;
    if (quo[y2].is_zero()) quo.erase(y2);
    num.erase(top);
    acc(y2, c);
  }
  return quo;
}

HeckeElement AffineHecke::right_mult_simple(const HeckeElement& e, int i) const {
  HeckeElement r;
  LaurentPoly q = LaurentPoly::monomial(2 * lambda_[i]);
  for (auto& [key, c] : e.terms) {
    auto& [w, x] = key;
    IVec sx = rd_.reflect(x, i);
    int ws = weyl_.right(w, i);
    // θ_x T_s = T_s θ_{s x} + θ_{s x} - θ_x + (θ_x - θ_{s x}) 𝒢(α)
    if (weyl_.length(ws) > weyl_.length(w)) {
      r.add(ws, sx, c);
    } else {
      r.add(w, sx, c * (q - 1));
      r.add(ws, sx, c * q);
    }
    r.add(w, sx, c);
    r.add(w, x, -c);
    for (auto& [y, b] : bernstein_cross(x, i)) r.add(w, y, c * b);
  }
  return r;
}

HeckeElement AffineHecke::multiply(const HeckeElement& a, const HeckeElement& b) const {
  std::map<int, std::vector<std::pair<IVec, LaurentPoly>>> by_w;
  for (auto& [key, c] : b.terms) by_w[key.first].push_back({key.second, c});
  HeckeElement r;
  for (auto& [w2, rest] : by_w) {
    HeckeElement tmp = a;
    for (int i : weyl_.word(w2)) tmp = right_mult_simple(tmp, i);
    for (auto& [x2, c2] : rest)
      for (auto& [key, c] : tmp.terms) r.add(key.first, vadd(key.second, x2), c * c2);
  }
  return r;
}

ThetaPoly AffineHecke::orbit_sum(const IVec& x) const {
  ThetaPoly p;
  for (int w = 0; w < weyl_.size(); ++w) p[weyl_.act(w, x)] += 1;
  return p;
}

bool AffineHecke::center_check(const std::vector<ThetaPoly>& elements) const {
  for (auto& p : elements) {
    HeckeElement z = from_theta(p);
    for (int i = 0; i < rd_.num_simple(); ++i) {
      HeckeElement t = T(weyl_.right(0, i));
      if (multiply(z, t) != multiply(t, z)) return false;
    }
  }
  return true;
}

std::string AffineHecke::str(const HeckeElement& e) const {
  if (e.terms.empty()) return "0";
  std::string s;
  for (auto& [key, c] : e.terms) {
    if (!s.empty()) s += " + ";
    if (c != LaurentPoly(1)) s += "(" + c.str() + ")·";
    s += "T_" + weyl_.name(key.first) + "·θ_" + vec_str(key.second);
  }
  return s;
}

json AffineHecke::to_json(const HeckeElement& e) const {
  json terms = json::array();
  for (auto& [key, c] : e.terms) {
    std::vector<int> word;
    for (int i : weyl_.word(key.first)) word.push_back(i + 1);
    terms.push_back({{"w", word}, {"x", key.second}, {"c", c.to_json()}});
  }
  return {{"terms", terms}};
}

HeckeElement AffineHecke::from_json(const json& j) const {
  if (!j.contains("terms") || !j["terms"].is_array()) throw ValidationError("Hecke element JSON needs a terms array");
  HeckeElement e;
  for (auto& t : j["terms"]) {
    std::vector<int> word;
    for (int i : t.at("w").get<std::vector<int>>()) word.push_back(i - 1);
    int w = weyl_.from_word(word);
    if (weyl_.length(w) != static_cast<int>(word.size())) throw ValidationError("T_w word is not reduced");
    IVec x = t.at("x").get<IVec>();
    if (static_cast<int>(x.size()) != rd_.rank()) throw ValidationError("theta exponent has the wrong length");
    e.add(w, x, LaurentPoly::from_json(t.at("c")));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Graded Hecke algebra

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b, const Rat& scale_b) {
  GradedPoly r = a;
  for (auto& [m, c] : b) {
    Rat v = r[m] + c * scale_b;
    if (v.is_zero()) r.erase(m);
    else r[m] = v;
  }
  return r;
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r;
  for (auto& [m1, c1] : a)
    for (auto& [m2, c2] : b) {
      std::vector<int> m = m1;
      for (std::size_t j = 0; j < m.size(); ++j) m[j] += m2[j];
      Rat v = r[m] + c1 * c2;
      if (v.is_zero()) r.erase(m);
      else r[m] = v;
    }
  return r;
}

void GradedElement::add(int w, const std::vector<int>& mono, const Rat& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(w, mono);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
  GradedElement r = a;
  for (auto& [k, c] : b.terms) r.add(k.first, k.second, c);
  return r;
}

GradedElement operator-(const GradedElement& a, const GradedElement& b) {
  GradedElement r = a;
  for (auto& [k, c] : b.terms) r.add(k.first, k.second, -c);
  return r;
}

GradedHecke::GradedHecke(HeckeRootDatum rd, std::vector<long long> mu, int max_rank)
    : rd_((rd.validate(), check_bound(rd, max_rank), std::move(rd))), weyl_(rd_), mu_(std::move(mu)) {
  int k = rd_.num_simple();
  if (static_cast<int>(mu_.size()) != k) throw ValidationError("mu needs one value per simple root");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && rd_.pair(rd_.roots[i], j) == -1 && rd_.pair(rd_.roots[j], i) == -1 && mu_[i] != mu_[j])
        throw ValidationError("parameter set: mu must agree on simple roots " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " joined by a simple bond");
}

GradedPoly GradedHecke::variable(int j) const {
  std::vector<int> m(num_vars(), 0);
  m.at(j) = 1;
  return {{m, Rat(1)}};
}

GradedPoly GradedHecke::root_form(int i) const {
  GradedPoly p;
  for (int j = 0; j < rd_.rank(); ++j)
    if (rd_.roots[i][j]) p = poly_add(p, variable(j), Rat(rd_.roots[i][j]));
  return p;
}

GradedPoly GradedHecke::reflect(const GradedPoly& f, int i) const {
  // s(e_j) = e_j - <e_j, coroot> α; r is fixed.
  std::vector<GradedPoly> image;
  for (int j = 0; j < rd_.rank(); ++j) image.push_back(poly_add(variable(j), root_form(i), Rat(-rd_.coroots[i][j])));
  image.push_back(variable(rd_.rank()));
  GradedPoly out;
  for (auto& [m, c] : f) {
    GradedPoly term{{std::vector<int>(num_vars(), 0), c}};
    for (int j = 0; j < num_vars(); ++j)
      for (int e = 0; e < m[j]; ++e) term = poly_mul(term, image[j]);
    out = poly_add(out, term);
  }
  return out;
}

GradedPoly GradedHecke::divide_by_root(const GradedPoly& g, int i) const {
  GradedPoly ell = root_form(i), rest = g, quo;
  int j = 0;
  while (rd_.roots[i][j] == 0) ++j;
  Rat lead(rd_.roots[i][j]);
  while (!rest.empty()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (it->first[j] > top->first[j]) top = it;
    if (top->first[j] == 0) throw InvariantError("division by a root left a remainder");
    std::vector<int> m = top->first;
    m[j] -= 1;
    GradedPoly q{{m, top->second / lead}};
    quo = poly_add(quo, q);
    rest = poly_add(rest, poly_mul(q, ell), Rat(-1));
  }
  return quo;
}

GradedElement GradedHecke::t(int w) const {
  GradedElement e;
  e.add(w, std::vector<int>(num_vars(), 0), Rat(1));
  return e;
}

GradedElement GradedHecke::poly(const GradedPoly& f) const {
  GradedElement e;
  for (auto& [m, c] : f) {
    if (static_cast<int>(m.size()) != num_vars()) throw ValidationError("monomial has the wrong number of variables");
    e.add(0, m, c);
  }
  return e;
}

GradedElement GradedHecke::graded_cross(const GradedPoly& f, int i) const {
  GradedPoly q = divide_by_root(poly_add(f, reflect(f, i), Rat(-1)), i);
  GradedElement e;
  for (auto& [m, c] : q) {
    std::vector<int> m2 = m;
    m2[rd_.rank()] += 1;
    e.add(0, m2, c * Rat(mu_[i]));
  }
  return e;
}

GradedElement GradedHecke::right_mult_simple(const GradedElement& e, int i) const {
  GradedElement r;
  for (auto& [key, c] : e.terms) {
    auto& [w, m] = key;
    GradedPoly f{{m, c}};
    // (f) t_s = t_s (s f) + μ r (f - s f)/α
    for (auto& [m2, c2] : reflect(f, i)) r.add(weyl_.right(w, i), m2, c2);
    for (auto& [k2, c2] : graded_cross(f, i).terms) r.add(w, k2.second, c2);
  }
  return r;
}

GradedElement GradedHecke::multiply(const GradedElement& a, const GradedElement& b) const {
  std::map<int, GradedPoly> by_w;
  for (auto& [key, c] : b.terms) by_w[key.first][key.second] = c;
  GradedElement r;
  for (auto& [w2, g] : by_w) {
    GradedElement tmp = a;
    for (int i : weyl_.word(w2)) tmp = right_mult_simple(tmp, i);
    for (auto& [key, c] : tmp.terms)
      for (auto& [m, c2] : poly_mul({{key.second, c}}, g)) r.add(key.first, m, c2);
  }
  return r;
}

GradedPoly GradedHecke::orbit_sum(const GradedPoly& f) const {
  GradedPoly out;
  for (int w = 0; w < weyl_.size(); ++w) {
    GradedPoly g = f;
    const auto& word = weyl_.word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = reflect(g, *it);
    out = poly_add(out, g);
  }
  return out;
}

bool GradedHecke::center_check(const std::vector<GradedPoly>& elements) const {
  for (auto& f : elements) {
    GradedElement z = poly(f);
    for (int i = 0; i < rd_.num_simple(); ++i) {
      GradedElement s = t(weyl_.right(0, i));
      if (multiply(z, s) != multiply(s, z)) return false;
    }
  }
  return true;
}

std::string GradedHecke::str(const GradedElement& e) const {
  if (e.terms.empty()) return "0";
  std::string s;
  for (auto& [key, c] : e.terms) {
    if (!s.empty()) s += " + ";
    s += c.str() + "·t_" + weyl_.name(key.first);
    for (int j = 0; j < num_vars(); ++j) {
      int p = key.second[j];
      if (!p) continue;
      s += "·" + (j == rd_.rank() ? std::string("r") : "e" + std::to_string(j + 1));
      if (p > 1) s += "^" + std::to_string(p);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Weight predicates

Rat WeightDatum::exponent(const IVec& x) const {
  if (x.size() != coords.size()) throw ValidationError("weight and lattice vector differ in rank");
  Rat s;
  for (std::size_t j = 0; j < x.size(); ++j) s += Rat(x[j]) * coords[j].second;
  return s;
}

Rat WeightDatum::torsion(const IVec& x) const {
  if (x.size() != coords.size()) throw ValidationError("weight and lattice vector differ in rank");
  Rat s;
  for (std::size_t j = 0; j < x.size(); ++j) s += Rat(x[j]) * coords[j].first;
  return s - s.floor();
}

namespace {

void check_dominant(const IMat& gens, const HeckeRootDatum& rd) {
  for (auto& x : gens) {
    if (static_cast<int>(x.size()) != rd.rank()) throw ValidationError("X⁺ generator has the wrong length");
    for (int i = 0; i < rd.num_simple(); ++i)
      if (rd.pair(x, i) < 0) throw ValidationError("generator " + vec_str(x) + " is not in X⁺");
  }
}

}  // namespace

bool tempered_predicate(const std::vector<WeightDatum>& weights, const IMat& xplus_generators,
                        const HeckeRootDatum& rd) {
  check_dominant(xplus_generators, rd);
  for (auto& t : weights)
    for (auto& x : xplus_generators)
      if (t.exponent(x) < Rat(0)) return false;
  return true;
}

bool square_integrable_predicate(const std::vector<WeightDatum>& weights, const IMat& xplus_generators,
                                 const HeckeRootDatum& rd) {
  if (!rd.roots_finite_index()) throw ValidationError("square integrability needs R of finite index in X");
  check_dominant(xplus_generators, rd);
  for (auto& t : weights)
    for (auto& x : xplus_generators) {
      if (std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; })) continue;
      if (t.exponent(x) <= Rat(0)) return false;
    }
  return true;
}

}  // namespace fh
