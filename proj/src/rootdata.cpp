#include "foldhecke/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace fh {
namespace {

IMat type_matrix(char letter, int n) {
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  switch (letter) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      if (n >= 2) a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      if (n >= 2) a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw ValidationError(std::string("unknown type letter '") + letter + "'");
  }
  return a;
}

void check_type_size(char letter, int n) {
  bool ok = n >= 1;
  switch (letter) {
    case 'A': break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) throw ValidationError("unknown type code " + std::string(1, letter) + std::to_string(n) +
                                 " (allowed: An n>=1, Bn/Cn n>=2, Dn n>=4, E6-E8, F4, G2)");
}

int height(const IVec& v) {
  long long h = 0;
  for (auto x : v) h += x;
  return static_cast<int>(h);
}

bool root_order(const IVec& a, const IVec& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

std::vector<Rat> symmetrizer(const IMat& a) {
  int n = static_cast<int>(a.size());
  std::vector<Rat> len(n, Rat(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    len[s] = Rat(1);
    comp[s] = ncomp;
    std::deque<int> q{s};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        if (a[j][i] == 0) throw ValidationError("Cartan matrix is not symmetrizable");
        Rat lj = Rat(a[i][j]) * len[i] / Rat(a[j][i]);
        if (comp[j] < 0) {
          comp[j] = ncomp;
          len[j] = lj;
          q.push_back(j);
        } else if (len[j] != lj) {
          throw ValidationError("Cartan matrix is not symmetrizable");
        }
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    Rat mn(0);
    for (int i = 0; i < n; ++i)
      if (comp[i] == c && (mn.is_zero() || len[i] < mn)) mn = len[i];
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) len[i] = len[i] / mn;
  }
  return len;
}

std::vector<IVec> positive_roots(const IMat& a, std::size_t bound) {
  int n = static_cast<int>(a.size());
  std::set<IVec> all;
  std::vector<IVec> level, out;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    level.push_back(e);
    all.insert(e);
  }
  while (!level.empty()) {
    std::vector<IVec> next;
    for (auto& b : level) {
      out.push_back(b);
      for (int i = 0; i < n; ++i) {
        long long pair = 0;
        for (int j = 0; j < n; ++j) pair += b[j] * a[i][j];
        int q = 0;
        IVec c = b;
        while (true) {
          c[i] -= 1;
          if (!all.count(c)) break;
          ++q;
        }
        if (q - pair > 0) {
          IVec up = b;
          up[i] += 1;
          if (all.insert(up).second) next.push_back(up);
        }
      }
      if (all.size() > bound) throw ValidationError("Cartan matrix is not of finite type (root bound exceeded)");
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

IMat simple_reflection_matrix(const IMat& a, int i) {
  int n = static_cast<int>(a.size());
  IMat s(n, IVec(n, 0));
  for (int k = 0; k < n; ++k) s[k][k] = 1;
  for (int j = 0; j < n; ++j) s[i][j] -= a[i][j];
  return s;
}

CartanDatum CartanDatum::from_type(const std::string& code) {
  if (code.size() < 2) throw ValidationError("unknown type code '" + code + "'");
  char letter = static_cast<char>(std::toupper(code[0]));
  int n = 0;
  for (std::size_t k = 1; k < code.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(code[k]))) throw ValidationError("unknown type code '" + code + "'");
    n = n * 10 + (code[k] - '0');
    if (n > 64) throw ValidationError("rank too large in type code '" + code + "'");
  }
  check_type_size(letter, n);
  return from_matrix(type_matrix(letter, n), std::string(1, letter) + std::to_string(n));
}

CartanDatum CartanDatum::from_matrix(const IMat& cartan, const std::string& label) {
  int n = static_cast<int>(cartan.size());
  if (n == 0) throw ValidationError("empty Cartan matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[i].size()) != n) throw ValidationError("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw ValidationError("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j)
      if (i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)))
        throw ValidationError("invalid off-diagonal Cartan entries");
  }
  CartanDatum d;
  d.label_ = label;
  d.cartan_ = cartan;
  d.simple_len2_ = symmetrizer(cartan);
  auto pos = positive_roots(cartan);
  for (auto& r : pos) d.roots_.push_back(r);
  for (auto& r : pos) {
    IVec m = r;
    for (auto& x : m) x = -x;
    d.roots_.push_back(m);
  }
  for (std::size_t k = 0; k < d.roots_.size(); ++k) d.index_[d.roots_[k]] = static_cast<int>(k);
  for (auto& r : d.roots_) {
    Rat l = d.length2(r);
    IVec c(n);
    for (int j = 0; j < n; ++j) c[j] = (Rat(r[j]) * d.simple_len2_[j] / l).to_int();
    d.coroots_.push_back(c);
  }
  return d;
}

bool CartanDatum::simply_laced() const {
  for (auto& row : cartan_)
    for (auto x : row)
      if (x < -1) return false;
  return true;
}

std::optional<int> CartanDatum::root_index(const IVec& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rat CartanDatum::length2(const IVec& r) const {
  int n = rank();
  Rat s(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r[i] && r[j] && cartan_[i][j]) s += Rat(r[i] * r[j] * cartan_[i][j]) * simple_len2_[i] / Rat(2);
  return s;
}

long long CartanDatum::pairing(const IVec& x, int idx) const {
  const IVec& c = coroots_[idx];
  long long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!c[i]) continue;
    long long t = 0;
    for (int j = 0; j < rank(); ++j) t += x[j] * cartan_[i][j];
    s += c[i] * t;
  }
  return s;
}

IVec CartanDatum::reflect(const IVec& x, const IVec& alpha) const {
  auto idx = root_index(alpha);
  if (!idx) throw ValidationError("reflect: vector is not a root");
  long long p = pairing(x, *idx);
  IVec r = x;
  for (int j = 0; j < rank(); ++j) r[j] -= p * alpha[j];
  return r;
}

IVec CartanDatum::simple_reflect(const IVec& x, int i) const {
  long long p = 0;
  for (int j = 0; j < rank(); ++j) p += x[j] * cartan_[i][j];
  IVec r = x;
  r[i] -= p;
  return r;
}

nlohmann::json CartanDatum::to_json() const {
  nlohmann::json j;
  j["type"] = label_;
  j["rank"] = rank();
  std::vector<std::string> xb, yb;
  for (int i = 1; i <= rank(); ++i) {
    xb.push_back("alpha_" + std::to_string(i));
    yb.push_back("varpi_" + std::to_string(i) + "^vee");
  }
  j["X_basis"] = xb;
  j["Y_basis"] = yb;
  j["cartan"] = cartan_;
  j["positive_roots"] = std::vector<IVec>(roots_.begin(), roots_.begin() + num_positive());
  return j;
}

namespace {

IVec mat_col(const IMat& m, int j) {
  IVec c;
  for (auto& r : m) c.push_back(r[j]);
  return c;
}

IMat imatmul(const IMat& a, const IMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  IMat c(n, IVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l])
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

bool is_positive(const IVec& v) {
  bool nz = false;
  for (auto x : v) {
    if (x < 0) return false;
    if (x > 0) nz = true;
  }
  return nz;
}

}  // namespace

std::vector<WeylElement> generate_weyl(const CartanDatum& datum, std::size_t bound) {
  int n = datum.rank();
  std::vector<IMat> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(datum.cartan(), i));
  std::vector<WeylElement> out;
  std::map<IMat, std::size_t> seen;
  WeylElement id;
  id.matrix = IMat(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) id.matrix[i][i] = 1;
  seen[id.matrix] = 0;
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IMat m = imatmul(out[head].matrix, gens[i]);
      if (seen.count(m)) continue;
      if (out.size() >= bound)
        throw ValidationError("Weyl group of " + datum.label() + " exceeds the size bound " + std::to_string(bound));
      WeylElement w;
      w.matrix = m;
      w.word = out[head].word;
      w.word.push_back(i);
      w.length = out[head].length + 1;
      seen[m] = out.size();
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<int> longest_word(const IMat& cartan) {
  int n = static_cast<int>(cartan.size());
  std::vector<IMat> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(cartan, i));
  IMat w(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) w[i][i] = 1;
  std::vector<int> word;
  std::size_t cap = positive_roots(cartan).size();
  while (true) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i)
      if (is_positive(mat_col(w, i))) pick = i;
    if (pick < 0) break;
    w = imatmul(w, gens[pick]);
    word.push_back(pick);
    if (word.size() > cap) throw InvariantError("longest element search did not terminate");
  }
  return word;
}

WeylElement longest_element(const CartanDatum& datum, const std::vector<int>& J) {
  int n = datum.rank();
  WeylElement w;
  w.matrix = IMat(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) w.matrix[i][i] = 1;
  if (J.empty()) return w;
  auto local = longest_word(submatrix(datum.cartan(), J));
  for (int l : local) {
    w.word.push_back(J[l]);
    w.matrix = imatmul(w.matrix, simple_reflection_matrix(datum.cartan(), J[l]));
  }
  w.length = static_cast<int>(w.word.size());
  return w;
}

int inversion_count(const CartanDatum& datum, const IMat& m) {
  int c = 0;
  for (int k = 0; k < datum.num_positive(); ++k) {
    IVec img(datum.rank(), 0);
    for (int i = 0; i < datum.rank(); ++i)
      for (int j = 0; j < datum.rank(); ++j) img[i] += m[i][j] * datum.roots()[k][j];
    if (!is_positive(img)) ++c;
  }
  return c;
}

IMat submatrix(const IMat& m, const std::vector<int>& idx) {
  IMat s;
  for (int i : idx) {
    IVec r;
    for (int j : idx) r.push_back(m[i][j]);
    s.push_back(r);
  }
  return s;
}

namespace {

std::vector<int> walk_arm(const std::vector<std::vector<int>>& adj, int from, int start) {
  std::vector<int> arm{start};
  int prev = from, cur = start;
  while (true) {
    int nxt = -1;
    for (int v : adj[cur])
      if (v != prev) nxt = v;
    if (nxt < 0 || adj[cur].size() > 2) break;
    arm.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return arm;
}

Component classify_connected(const IMat& a, const std::vector<int>& nodes) {
  int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> adj(a.size());
  for (int u : nodes)
    for (int v : nodes)
      if (u != v && a[u][v] != 0) adj[u].push_back(v);
  Component c;
  c.rank = n;
  auto mult = [&](int u, int v) { return a[u][v] * a[v][u]; };
  auto short_than = [&](int u, int v) { return std::abs(a[u][v]) > std::abs(a[v][u]); };
  if (n == 1) {
    c.letter = 'A';
    c.nodes = nodes;
    c.name = "A1";
    return c;
  }
  int branch = -1;
  std::vector<int> ends;
  for (int u : nodes) {
    if (adj[u].size() >= 3) branch = u;
    if (adj[u].size() == 1) ends.push_back(u);
  }
  if (branch >= 0) {
    std::vector<std::vector<int>> arms;
    for (int v : adj[branch]) arms.push_back(walk_arm(adj, branch, v));
    std::sort(arms.begin(), arms.end(), [](auto& x, auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x < y;
    });
    if (arms[1].size() == 1) {
      c.letter = 'D';
      std::vector<int> chain(arms[2].rbegin(), arms[2].rend());
      chain.push_back(branch);
      chain.push_back(arms[0][0]);
      chain.push_back(arms[1][0]);
      c.nodes = chain;
    } else {
      c.letter = 'E';
      std::vector<int> order(n);
      order[0] = arms[1][1];
      order[2] = arms[1][0];
      order[1] = arms[0][0];
      order[3] = branch;
      for (std::size_t k = 0; k < arms[2].size(); ++k) order[4 + k] = arms[2][k];
      c.nodes = order;
    }
    c.name = std::string(1, c.letter) + std::to_string(n);
    return c;
  }
  // path
  std::vector<int> path = walk_arm(adj, -1, std::min(ends[0], ends[1]));
  int maxm = 1, at = -1;
  for (int k = 0; k + 1 < n; ++k)
    if (mult(path[k], path[k + 1]) > maxm) maxm = mult(path[k], path[k + 1]), at = k;
  if (maxm == 1) {
    c.letter = 'A';
  } else if (maxm == 3) {
    c.letter = 'G';
    if (!short_than(path[0], path[1])) std::reverse(path.begin(), path.end());
  } else if (n == 2) {
    c.letter = 'B';
    if (short_than(path[0], path[1])) std::reverse(path.begin(), path.end());
  } else if (at == 0 || at == n - 2) {
    if (at == 0) std::reverse(path.begin(), path.end());
    c.letter = short_than(path[n - 1], path[n - 2]) ? 'B' : 'C';
  } else {
    c.letter = 'F';
    if (short_than(path[0], path[1]) || short_than(path[1], path[2])) std::reverse(path.begin(), path.end());
  }
  c.nodes = path;
  c.name = std::string(1, c.letter) + std::to_string(n);
  return c;
}

}  // namespace

std::vector<Component> classify_cartan(const IMat& a) {
  int n = static_cast<int>(a.size());
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes;
    std::deque<int> q{s};
    comp[s] = s;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      nodes.push_back(u);
      for (int v = 0; v < n; ++v)
        if (v != u && a[u][v] != 0 && comp[v] < 0) comp[v] = s, q.push_back(v);
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(classify_connected(a, nodes));
  }
  return out;
}

std::string canonical_type(const std::string& name) {
  if (name.find('x') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(name);
    for (std::string part; std::getline(in, part, 'x');) {
      std::stringstream sub(canonical_type(part));
      for (std::string p; std::getline(sub, p, 'x');) parts.push_back(p);
    }
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (auto& x : parts) s += (s.empty() ? "" : "x") + x;
    return s;
  }
  char l = name[0];
  int r = std::stoi(name.substr(1));
  if (r == 1) return "A1";
  if (l == 'C' && r == 2) return "B2";
  if (l == 'D' && r == 3) return "A3";
  if (l == 'D' && r == 2) return "A1xA1";
  return name;
}

std::string type_string(const std::vector<Component>& comps) {
  std::vector<std::string> names;
  for (auto& c : comps) names.push_back(c.name);
  std::sort(names.begin(), names.end());
  std::string s;
  for (auto& x : names) s += (s.empty() ? "" : "x") + x;
  return s.empty() ? "T" : s;
}

}  // namespace fh
