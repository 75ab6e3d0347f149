#include "foldhecke/alcove.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <sstream>

namespace fh {

Alcove::Alcove(FoldedRootDatum f) : f_(std::move(f)) {}

CScalar Alcove::level(const AlcovePoint& x) const {
  CScalar s;
  for (int i = 0; i < num_nodes(); ++i) s += x.c[i] * CScalar(Rat(f_.marks()[i]));
  return s;
}

AlcovePoint Alcove::vertex(int k) const {
  AlcovePoint x;
  x.c.assign(num_nodes(), CScalar());
  x.c[k] = CScalar(Rat(1, f_.marks()[k]));
  return x;
}

AlcovePoint Alcove::apply(int i, const AlcovePoint& x) const {
  AlcovePoint y = x;
  if (x.c[i].is_zero()) return y;
  const IVec& row = f_.a()[i];
  for (int j = 0; j < num_nodes(); ++j)
    if (row[j]) y.c[j] -= x.c[i] * CScalar(Rat(row[j]));
  return y;
}

AlcovePoint Alcove::apply_word(const std::vector<int>& word, const AlcovePoint& x) const {
  AlcovePoint y = x;
  for (int i : word) y = apply(i, y);
  return y;
}

QMat Alcove::reflection_matrix(int i) const {
  int n = num_nodes();
  QMat m = identity<Rat>(n);
  for (int j = 0; j < n; ++j) m[j][i] -= Rat(f_.a()[i][j]);
  return m;
}

std::vector<ReduceResult> Alcove::reduce_batch(const std::vector<AlcovePoint>& xs) const {
  std::vector<ReduceResult> out(xs.size());
  long long n = static_cast<long long>(xs.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    try {
      out[i] = reduce(xs[i]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<ReduceResult> Alcove::reduce_batch_serial(const std::vector<AlcovePoint>& xs) const {
  std::vector<ReduceResult> out;
  out.reserve(xs.size());
  for (auto& x : xs) out.push_back(reduce(x));
  return out;
}

ReduceResult Alcove::reduce(const AlcovePoint& x) const {
  int n = num_nodes();
  if (static_cast<int>(x.c.size()) != n)
    throw ValidationError("point needs " + std::to_string(n) + " coordinates, got " + std::to_string(x.c.size()));
  if (level(x) != CScalar(1)) throw ValidationError("point is not on the level-1 hyperplane (sum n_i c_i = 1)");
  ReduceResult res;
  AlcovePoint y = x;
  const std::size_t cap = 1000000;
  // real part into the closed alcove
  while (true) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i)
      if (y.c[i].re.sign() < 0) pick = i;
    if (pick < 0) break;
    y = apply(pick, y);
    res.w.word.push_back(pick);
    if (res.w.word.size() > cap) throw InvariantError("alcove reduction did not terminate");
  }
  // imaginary part into the dominant chamber of the stabilizer of the real part
  while (true) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i)
      if (y.c[i].re.is_zero() && y.c[i].im.sign() < 0) pick = i;
    if (pick < 0) break;
    y = apply(pick, y);
    res.w.word.push_back(pick);
    if (res.w.word.size() > cap) throw InvariantError("alcove reduction did not terminate");
  }
  res.canonical = y;
  res.S = cell(y);
  res.w.linear = identity<Rat>(n);
  for (int i : res.w.word) res.w.linear = matmul(reflection_matrix(i), res.w.linear);
  return res;
}

std::vector<int> Alcove::cell(const AlcovePoint& x) {
  std::vector<int> S;
  for (int i = 0; i < static_cast<int>(x.c.size()); ++i) {
    if (!complex_ge(x.c[i])) throw ValidationError("point is not canonical (negative coordinate)");
    if (complex_gt(x.c[i])) S.push_back(i);
  }
  return S;
}

std::vector<int> Alcove::stabilizer(const AlcovePoint& x) const {
  auto S = cell(x);
  std::vector<int> gens;
  for (int i = 0; i < num_nodes(); ++i) {
    bool fixes = apply(i, x).c == x.c;
    bool in_s = std::find(S.begin(), S.end(), i) != S.end();
    if (fixes == in_s) throw InvariantError("stabilizer does not match the cell");
    if (fixes) gens.push_back(i);
  }
  return gens;
}

CScalar Alcove::beta_at(const IVec& beta, const AlcovePoint& x) const {
  CScalar s;
  for (int k = 1; k < num_nodes(); ++k)
    if (beta[k - 1]) s += x.c[k] * CScalar(Rat(beta[k - 1], f_.d_nodes()[k]));
  return s;
}

CScalar Alcove::gamma_at(const IVec& gamma, const AlcovePoint& x) const {
  CScalar s;
  for (int k = 1; k < num_nodes(); ++k)
    if (gamma[k - 1]) s += x.c[k] * CScalar(Rat(gamma[k - 1]));
  return s;
}

bool Alcove::in_n(int root, int j) const {
  const auto& rr = f_.rroots()[root];
  if (j < 0 || j >= f_.d()) return false;
  if (rr.dprime == 1 && rr.dsec == 1) return j == 0;
  if (rr.dprime == 1 && rr.dsec == 2) return j == 1;
  return true;
}

std::vector<NElement> Alcove::n_set() const {
  std::vector<NElement> out;
  for (int k = 0; k < static_cast<int>(f_.rroots().size()); ++k)
    for (int j = 0; j < f_.d(); ++j)
      if (in_n(k, j)) out.push_back({k, j});
  return out;
}

bool Alcove::condition_i(int root, int j, const AlcovePoint& x) const {
  CScalar v = beta_at(f_.rroots()[root].beta, x) + CScalar(Rat(j, f_.d()));
  return v.im.is_zero() && v.re.is_integer();
}

std::optional<std::vector<long long>> Alcove::in_span(const IVec& beta, int j, const std::vector<int>& J) const {
  int r = f_.r();
  if (static_cast<int>(J.size()) >= num_nodes()) throw ValidationError("J must be a proper subset of I");
  if (J.empty()) {
    for (auto x : beta)
      if (x) return std::nullopt;
    if (j % f_.d() != 0) return std::nullopt;
    return std::vector<long long>{};
  }
  QMat m(r, QVec(J.size()));
  for (std::size_t c = 0; c < J.size(); ++c)
    for (int i = 0; i < r; ++i) m[i][c] = Rat(f_.beta_nodes()[J[c]][i]);
  auto sol = solve(m, to_qvec(beta));
  if (!sol) return std::nullopt;
  std::vector<long long> coef;
  long long jj = 0;
  for (std::size_t c = 0; c < J.size(); ++c) {
    if (!(*sol)[c].is_integer()) return std::nullopt;
    coef.push_back((*sol)[c].to_int());
    if (J[c] == 0) jj += coef.back();
  }
  long long d = f_.d();
  if (((jj - j) % d + d) % d != 0) return std::nullopt;
  return coef;
}

std::optional<std::vector<long long>> Alcove::condition_ii(int root, int j, const std::vector<int>& S) const {
  std::vector<int> rest;
  for (int i = 0; i < num_nodes(); ++i)
    if (std::find(S.begin(), S.end(), i) == S.end()) rest.push_back(i);
  return in_span(f_.rroots()[root].beta, j, rest);
}

Membership Alcove::n_membership(int root, int j, const AlcovePoint& x) const {
  if (!in_n(root, j)) throw ValidationError("(beta, j) is not in the set 𝔑");
  auto S = cell(x);
  bool lhs = condition_i(root, j, x);
  auto rhs = condition_ii(root, j, S);
  if (lhs != rhs.has_value()) throw InvariantError("the two membership conditions disagree");
  Membership m;
  m.holds = lhs;
  if (rhs) m.certificate = *rhs;
  return m;
}

GJDatum Alcove::gj_root_datum(const std::vector<int>& J) const {
  if (static_cast<int>(J.size()) >= num_nodes()) throw ValidationError("J must be a proper subset of I");
  GJDatum g;
  g.J = J;
  std::set<IVec> seen;
  std::vector<IVec> queue;
  for (int i : J) {
    if (seen.insert(f_.beta_nodes()[i]).second) queue.push_back(f_.beta_nodes()[i]);
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int i : J) {
      long long p = f_.eval(queue[h], f_.node_coroots()[i]).to_int();
      IVec b = queue[h];
      for (int k = 0; k < f_.r(); ++k) b[k] -= p * f_.beta_nodes()[i][k];
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  g.roots.assign(seen.begin(), seen.end());
  g.cartan = submatrix(f_.a_twisted(), J);
  if (!J.empty()) {
    g.components = classify_cartan(g.cartan);
    for (auto& c : g.components)
      for (auto& node : c.nodes) node = J[node];
  }
  return g;
}

std::vector<CScalar> Alcove::y_coords(const AlcovePoint& x) const {
  int r = f_.r();
  QMat at(r, QVec(r));
  for (int k = 1; k <= r; ++k)
    for (int j = 1; j <= r; ++j) at[j - 1][k - 1] = Rat(f_.a()[k][j]);
  QMat inv = inverse(at);
  QVec re(r), im(r);
  for (int j = 1; j <= r; ++j) {
    re[j - 1] = x.c[j].re;
    im[j - 1] = x.c[j].im;
  }
  auto xr = matvec(inv, re), xi = matvec(inv, im);
  std::vector<CScalar> y;
  for (int k = 0; k < r; ++k) y.emplace_back(xr[k], xi[k]);
  return y;
}

std::vector<CScalar> Alcove::p_map(const AlcovePoint& x) const {
  auto y = y_coords(x);
  for (int k = 0; k < f_.r(); ++k) {
    Rat dp(f_.dprime_nodes()[k + 1]);
    CScalar v{y[k].re / dp, y[k].im / dp};
    v.re = v.re - v.re.floor();
    y[k] = v;
  }
  return y;
}

std::vector<IMat> Alcove::weyl_on_y(std::size_t bound) const {
  int r = f_.r();
  std::vector<IMat> gens;
  for (int i = 1; i <= r; ++i) {
    IMat m(r, IVec(r, 0));
    for (int k = 0; k < r; ++k) m[k][k] = 1;
    for (int k = 1; k <= r; ++k) m[i - 1][k - 1] -= f_.a()[k][i];
    gens.push_back(m);
  }
  std::set<IMat> seen;
  std::vector<IMat> out;
  IMat id(r, IVec(r, 0));
  for (int k = 0; k < r; ++k) id[k][k] = 1;
  seen.insert(id);
  out.push_back(id);
  for (std::size_t h = 0; h < out.size(); ++h)
    for (auto& g : gens) {
      IMat m(r, IVec(r, 0));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          for (int c = 0; c < r; ++c) m[a][c] += g[a][b] * out[h][b][c];
      if (seen.insert(m).second) {
        if (out.size() >= bound) throw ValidationError("Weyl group exceeds the enumeration bound");
        out.push_back(m);
      }
    }
  return out;
}

bool Alcove::same_n_orbit(const std::vector<CScalar>& y1, const std::vector<CScalar>& y2,
                          const std::vector<IMat>& weyl) {
  std::size_t r = y1.size();
  for (auto& w : weyl) {
    bool ok = true;
    for (std::size_t a = 0; a < r && ok; ++a) {
      CScalar v = -y2[a];
      for (std::size_t b = 0; b < r; ++b)
        if (w[a][b]) v += y1[b] * CScalar(Rat(w[a][b]));
      ok = v.im.is_zero() && v.re.is_integer();
    }
    if (ok) return true;
  }
  return false;
}

int Alcove::y_rank_on(const std::vector<int>& K) const {
  int r = f_.r();
  QMat cons;
  for (int j = 0; j < num_nodes(); ++j) {
    if (std::find(K.begin(), K.end(), j) != K.end()) continue;
    QVec row(r);
    for (int k = 1; k <= r; ++k) row[k - 1] = Rat(f_.a()[k][j]);
    cons.push_back(row);
  }
  return static_cast<int>(nullspace(cons, r).size());
}

AlcovePoint Alcove::parse_point(const std::string& text) {
  AlcovePoint x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) x.c.push_back(CScalar::parse(item));
  if (x.c.empty()) throw ValidationError("empty point");
  return x;
}

namespace {

nlohmann::json cjson(const CScalar& z) { return {{"re", z.re.str()}, {"im", z.im.str()}}; }

nlohmann::json pjson(const AlcovePoint& x) {
  nlohmann::json a = nlohmann::json::array();
  for (auto& z : x.c) a.push_back(cjson(z));
  return a;
}

}  // namespace

nlohmann::json Alcove::to_json(const ReduceResult& r, const AlcovePoint& input) const {
  return {{"coordinates", pjson(input)}, {"canonical", pjson(r.canonical)}, {"S", r.S}, {"word", r.w.word}};
}

std::string point_str(const AlcovePoint& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.c.size(); ++i) s += (i ? ", " : "") + x.c[i].str();
  return s + ")";
}

}  // namespace fh
