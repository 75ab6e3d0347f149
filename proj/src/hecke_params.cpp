#include "foldhecke/hecke_params.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "foldhecke/catalog_data.hpp"
#include "foldhecke/errors.hpp"
#include "foldhecke/lie_engine.hpp"

namespace fh {

using nlohmann::json;

const json& catalog() {
  static const json data = [] {
    if (const char* path = std::getenv("FOLDHECKE_CATALOG"); path && *path) {
      std::ifstream in(path);
      if (!in) throw ValidationError(std::string("cannot open catalog ") + path);
      return json::parse(in);
    }
    return json::parse(kCatalogJson);
  }();
  static const bool ok = [] {
    if (data.value("format", "") != "foldhecke-cuspidal-catalog" || data.value("version", 0) != 1)
      throw ValidationError("catalog format or version not recognised (expected version 1)");
    return true;
  }();
  (void)ok;
  return data;
}

namespace {

long long tri(long long m) { return m * (m + 1) / 2; }
long long mod(long long x, long long m) { return ((x % m) + m) % m; }

std::string subscript_digits(int k) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s, t = std::to_string(k);
  for (char c : t) s += digits[c - '0'];
  return s;
}

std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

bool adjacent(const IMat& c, int u, int v) { return c[u][v] != 0 || c[v][u] != 0; }

std::string bond(const IMat& c, int l, int r) {
  long long x = std::llabs(c[l][r]), y = std::llabs(c[r][l]);
  if (x == 0 && y == 0) return " ";
  if (x * y == 1) return "—";
  if (x == 2 && y == 2) return "∞";
  bool right_short = y > x;
  switch (std::max(x, y)) {
    case 2: return right_short ? "⇒" : "⇐";
    case 3: return right_short ? "≡>" : "<≡";
    case 4: return right_short ? "≣>" : "<≣";
    default: return "?";
  }
}

bool is_path(const IMat& c, const std::vector<int>& order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!adjacent(c, order[i], order[i + 1])) return false;
  int edges = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (adjacent(c, order[i], order[j])) ++edges;
  return edges + 1 == static_cast<int>(order.size());
}

std::string line_of(const IMat& c, const std::vector<int>& order, const std::vector<std::string>& text,
                    const std::vector<bool>& boxed, std::vector<std::size_t>* cols = nullptr) {
  std::string out;
  auto in_box = [&](int v) { return !boxed.empty() && boxed[v]; };
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (in_box(v) && (i == 0 || !in_box(order[i - 1]))) out += "[";
    if (cols) cols->push_back(width(out));
    out += text[v];
    if (in_box(v) && (i + 1 == order.size() || !in_box(order[i + 1]))) out += "]";
    if (i + 1 < order.size()) out += bond(c, v, order[i + 1]);
  }
  return out;
}

// Finite Coxeter group order from a graph of bond orders m (0 = infinity); 0 if infinite.
long long coxeter_order(const IMat& m, const std::vector<int>& nodes) {
  int n = static_cast<int>(nodes.size());
  if (n == 0) return 1;
  std::vector<int> seen(n, 0);
  long long total = 1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int t = 0; t < n; ++t)
        if (!seen[t] && m[nodes[comp[h]]][nodes[t]] != 2) seen[t] = 1, comp.push_back(t);
    int r = static_cast<int>(comp.size());
    std::vector<int> deg(r, 0);
    int e4 = 0, e6 = 0, e_inf = 0, edges = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        long long b = m[nodes[comp[i]]][nodes[comp[j]]];
        if (b == 2) continue;
        ++deg[i], ++deg[j], ++edges;
        if (b == 4) ++e4;
        if (b == 6) ++e6;
        if (b == 0) ++e_inf;
      }
    if (e_inf || edges != r - 1) return 0;
    auto fact = [](int k) {
      long long f = 1;
      for (int i = 2; i <= k; ++i) f *= i;
      return f;
    };
    int branch = -1;
    for (int i = 0; i < r; ++i)
      if (deg[i] >= 3) branch = deg[i] == 3 && branch < 0 ? i : -2;
    if (branch == -2) return 0;
    long long order = 0;
    if (r == 1) {
      order = 2;
    } else if (e6) {
      order = (r == 2) ? 12 : 0;
    } else if (branch >= 0) {
      if (e4) return 0;
      std::vector<int> arms;
      for (int t = 0; t < r; ++t) {
        if (t == branch || m[nodes[comp[branch]]][nodes[comp[t]]] == 2) continue;
        int len = 1, prev = branch, cur = t;
        while (true) {
          int next = -1;
          for (int u = 0; u < r; ++u)
            if (u != prev && u != cur && m[nodes[comp[cur]]][nodes[comp[u]]] != 2) next = u;
          if (next < 0) break;
          prev = cur, cur = next, ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) order = (1LL << (r - 1)) * fact(r);
      else if (arms == std::vector<int>{1, 2, 2}) order = 51840;
      else if (arms == std::vector<int>{1, 2, 3}) order = 2903040;
      else if (arms == std::vector<int>{1, 2, 4}) order = 696729600;
      else return 0;
    } else if (e4 == 0) {
      order = fact(r + 1);
    } else if (e4 == 1) {
      int end4 = 0, mid4 = 0;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (i < j && m[nodes[comp[i]]][nodes[comp[j]]] == 4) ((deg[i] == 1 || deg[j] == 1) ? end4 : mid4) = 1;
      if (end4) order = (1LL << r) * fact(r);
      else order = (r == 4) ? 1152 : 0;
    } else {
      return 0;
    }
    if (order == 0) return 0;
    total *= order;
  }
  return total;
}

long long as_int(const Rat& x, const std::string& what) {
  if (!x.is_integer()) throw InvariantError(what + " is not an integer: " + x.str());
  return x.to_int();
}

std::vector<QVec> orbit(const std::vector<QMat>& gens, const std::vector<QVec>& seeds, std::size_t bound = 200000) {
  std::set<QVec> seen(seeds.begin(), seeds.end());
  std::vector<QVec> out(seen.begin(), seen.end());
  for (std::size_t h = 0; h < out.size(); ++h)
    for (auto& g : gens) {
      QVec v = matvec(g, out[h]);
      if (seen.insert(v).second) {
        out.push_back(v);
        if (out.size() > bound) throw InvariantError("orbit enumeration exceeded its bound");
      }
    }
  return out;
}

bool same_lattice(const QMat& a, const QMat& b) {
  for (auto& v : a)
    if (!lattice_coords(b, v)) return false;
  for (auto& v : b)
    if (!lattice_coords(a, v)) return false;
  return true;
}

}  // namespace

std::string NodeData::label() const {
  return std::to_string(ubar) + "×" + zbar.str() + "×" + std::to_string(d);
}

std::vector<int> beta_layout(const FoldedRootDatum& f) {
  const IMat& a = f.a_twisted();
  int n = f.num_nodes();
  std::vector<std::vector<int>> nb(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && adjacent(a, i, j)) nb[i].push_back(j);
  auto walk = [&](int start, std::vector<int> used) {
    std::vector<int> order;
    int prev = -1, cur = start;
    for (int u : used) order.push_back(u);
    while (cur >= 0) {
      order.push_back(cur);
      int next = -1;
      for (int v : nb[cur])
        if (v != prev && std::find(order.begin(), order.end(), v) == order.end()) next = v;
      prev = cur, cur = next;
    }
    return order;
  };
  std::vector<int> ends, forks;
  for (int i = 0; i < n; ++i) {
    if (nb[i].size() <= 1) ends.push_back(i);
    if (nb[i].size() >= 3) forks.push_back(i);
  }
  // A_3 with d = 2: both ends hang off the middle node like the leaves of a fork.
  if (n == 3 && forks.empty() && f.base().label().rfind("A", 0) == 0 && f.d() == 2 && f.d_nodes()[ends[0]] == 2 &&
      f.d_nodes()[ends[1]] == 2) {
    int mid = 3 - ends[0] - ends[1];
    return {std::min(ends[0], ends[1]), std::max(ends[0], ends[1]), mid};
  }
  if (forks.empty() && ends.size() == 2) {
    auto long_end = [&](int e) {
      if (nb[e].empty()) return true;
      int m = nb[e][0];
      return std::llabs(a[e][m]) <= std::llabs(a[m][e]);
    };
    bool l0 = long_end(ends[0]), l1 = long_end(ends[1]);
    int start = ends[0];
    if (l1 && !l0) start = ends[1];
    if (n == 1) return {0};
    return walk(start, {});
  }
  if (forks.size() == 1 && nb[forks[0]].size() == 3) {
    int b = forks[0];
    std::vector<int> leaves;
    for (int v : nb[b])
      if (nb[v].size() == 1) leaves.push_back(v);
    if (leaves.size() >= 2) {
      std::sort(leaves.begin(), leaves.end());
      std::vector<int> order = walk(b, {leaves[0], leaves[1]});
      if (static_cast<int>(order.size()) == n) return order;
    }
  }
  std::vector<int> order{0};
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int v : nb[order[h]])
      if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  return order;
}

std::string render_graph(const IMat& c, const std::vector<int>& order, const std::vector<std::string>& text,
                         const std::vector<bool>& boxed) {
  if (order.empty()) return "∅";
  if (is_path(c, order)) return line_of(c, order, text, boxed);
  std::vector<int> rest(order.begin() + 1, order.end());
  int hang = order[0], attach = -1, links = 0;
  for (int v : rest)
    if (adjacent(c, hang, v)) attach = v, ++links;
  if (links == 1 && is_path(c, rest)) {
    std::vector<std::size_t> cols;
    std::string main = line_of(c, rest, text, boxed, &cols);
    std::size_t col = cols[std::find(rest.begin(), rest.end(), attach) - rest.begin()];
    bool box = !boxed.empty() && boxed[hang];
    std::string top = std::string(col, ' ') + (box ? "[" + text[hang] + "]" : text[hang]);
    std::string glyph = bond(c, hang, attach);
    std::string mid = std::string(col, ' ') + (glyph == "—" ? "|" : glyph);
    return top + "\n" + mid + "\n" + main;
  }
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (adjacent(c, order[i], order[j])) {
        if (!out.empty()) out += ", ";
        out += text[order[i]] + bond(c, order[i], order[j]) + text[order[j]];
      }
  return out;
}

std::vector<QMat> sigma_involutions(const Alcove& alc, const std::vector<int>& J) {
  const FoldedRootDatum& f = alc.folded();
  int n = f.num_nodes();
  std::vector<bool> inJ(n, false);
  for (int j : J) {
    if (j < 0 || j >= n) throw ValidationError("J contains an unknown node " + std::to_string(j));
    inJ[j] = true;
  }
  std::vector<int> K;
  for (int i : beta_layout(f))
    if (!inJ[i]) K.push_back(i);
  if (K.size() < 2) throw ValidationError("sigma_k needs |K| >= 2 (got " + std::to_string(K.size()) + ")");
  auto longest = [&](std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    QMat m = identity<Rat>(n);
    if (idx.empty()) return m;
    for (int l : longest_word(submatrix(f.a(), idx))) m = matmul(m, alc.reflection_matrix(idx[l]));
    return m;
  };
  QMat w0J = longest(J);
  std::vector<QMat> out;
  for (int k : K) {
    std::vector<int> Jk = J;
    Jk.push_back(k);
    QMat s = matmul(longest(Jk), w0J);
    if (matmul(s, s) != identity<Rat>(n)) throw InvariantError("sigma_" + std::to_string(k) + " is not an involution");
    for (int col : K)
      for (int row = 0; row < n; ++row)
        if (inJ[row] && !s[row][col].is_zero())
          throw InvariantError("sigma_" + std::to_string(k) + " does not preserve V'_K");
    out.push_back(std::move(s));
  }
  return out;
}

WStarData wstar_data(const Alcove& alc, const std::vector<int>& J) {
  const FoldedRootDatum& f = alc.folded();
  WStarData w;
  std::set<int> Jset(J.begin(), J.end());
  for (int i : beta_layout(f))
    if (!Jset.count(i)) w.K.push_back(i);
  w.sigma = sigma_involutions(alc, J);
  int m = static_cast<int>(w.K.size());
  for (int k : w.K) w.n.push_back(f.marks()[k]);

  std::vector<QMat> lin;
  for (int a = 0; a < m; ++a) {
    QMat s(m, QVec(m));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) s[r][c] = w.sigma[a][w.K[r]][w.K[c]];
    QVec u(m);
    for (int r = 0; r < m; ++r) u[r] = (r == a ? Rat(1) : Rat(0)) - s[r][a];
    if (u[a] != Rat(2)) throw InvariantError("sigma_k is not a reflection along c_k");
    Rat lev(0);
    for (int r = 0; r < m; ++r) lev += u[r] * Rat(w.n[r]);
    if (!lev.is_zero()) throw InvariantError("reflection vector of sigma_k is not in 𝔷_J");
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        if (s[r][c] != (r == c ? Rat(1) : Rat(0)) - (c == a ? u[r] : Rat(0)))
          throw InvariantError("sigma_k is not a reflection on V'_K");
    w.u.push_back(u);
    lin.push_back(std::move(s));
  }

  w.coxeter = IMat(m, IVec(m, 2));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) {
        w.coxeter[a][b] = 1;
        continue;
      }
      long long p = as_int(w.u[a][b] * w.u[b][a], "bond product");
      static const long long table[] = {2, 3, 4, 6};
      w.coxeter[a][b] = p >= 0 && p <= 3 ? table[p] : 0;
    }

  w.special = -1;
  for (int a = 0; a < m; ++a) {
    std::vector<int> rest;
    for (int b = 0; b < m; ++b)
      if (b != a) rest.push_back(b);
    long long ord = coxeter_order(w.coxeter, rest);
    if (ord > w.finite_order) w.finite_order = ord, w.special = a;
  }
  if (w.special < 0) throw InvariantError("W* has no vertex with finite stabilizer");

  QVec t0(m);
  for (int r = 0; r < m; ++r) t0[r] = -w.u[w.special][r] / Rat(w.n[w.special]);
  w.lattice = lattice_basis(orbit(lin, {t0}));

  for (int a = 0; a < m; ++a) {
    auto coords = lattice_coords(w.lattice, w.u[a]);
    if (!coords) throw InvariantError("reflection vector of sigma_k is not a translation of W*");
    Rat g(0);
    for (auto& x : *coords) g = gcd(g, x);
    w.z.push_back(as_int(g.abs(), "z_k"));
    QVec h = w.u[a];
    for (auto& x : h) x /= Rat(w.z.back());
    w.htilde.push_back(std::move(h));
  }
  if (!same_lattice(lattice_basis(w.htilde), w.lattice)) throw InvariantError("{h~_k} does not generate ℒ'");

  w.pairing = QMat(m, QVec(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) w.pairing[a][b] = Rat(w.z[b]) * w.htilde[a][b];
  auto null = nullspace(w.pairing, m);
  if (null.size() != 1) throw InvariantError("gamma~ relations do not form a single null vector");
  QVec nt = primitive(null[0]);
  for (auto& x : nt) {
    if (x.sign() <= 0) throw InvariantError("null vector of the gamma~ system is not positive");
    w.ntilde.push_back(as_int(x, "ntilde"));
  }

  if (m == 2) {
    w.type_c_tilde = w.coxeter[0][1] == 0;
    if (w.type_c_tilde) w.ends = {0, 1};
  } else {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    IMat adj(m, IVec(m, 0));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) adj[a][b] = (a != b && w.coxeter[a][b] != 2) ? 1 : 0;
    std::vector<int> deg(m, 0), ends;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) deg[a] += static_cast<int>(adj[a][b]);
      if (deg[a] == 1) ends.push_back(a);
    }
    bool path = ends.size() == 2 && std::all_of(deg.begin(), deg.end(), [](int x) { return x == 1 || x == 2; });
    if (path) {
      bool ok = true;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          if (!adj[a][b]) continue;
          bool at_end = deg[a] == 1 || deg[b] == 1;
          if (w.coxeter[a][b] != (at_end ? 4 : 3)) ok = false;
        }
      if (ok) w.type_c_tilde = true, w.ends = ends;
    }
  }
  return w;
}

FlatSharp flat_sharp_split(const WStarData& w, const std::vector<int>& ubar, const std::vector<int>& d) {
  int m = static_cast<int>(w.K.size());
  if (m < 2) throw ValidationError("the ♭/♯ split needs |K| >= 2");
  FlatSharp fs;
  fs.flat.assign(m, false);
  for (int e : w.ends) fs.flat[e] = true;
  for (int a = 0; a < m; ++a) fs.zbar.push_back(fs.flat[a] ? Rat(w.z[a], 2) : Rat(w.z[a]));
  fs.cartan = IMat(m, IVec(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Rat v = w.pairing[a][b] * (fs.zbar[b] / Rat(w.z[b])) * (Rat(w.z[a]) / fs.zbar[a]);
      fs.cartan[a][b] = as_int(v, "gamma^(h^)");
    }
  auto product = [&](int a) { return Rat(ubar[a]) * fs.zbar[a] * Rat(d[a]); };
  if (!w.ends.empty()) {
    int e0 = std::min(w.ends[0], w.ends[1]), e1 = std::max(w.ends[0], w.ends[1]);
    fs.k0 = product(e0) <= product(e1) ? e0 : e1;
  } else {
    fs.k0 = -1;
    for (int a = 0; a < m && fs.k0 < 0; ++a)
      if (w.ntilde[a] == 1) fs.k0 = a;
    if (fs.k0 < 0) throw InvariantError("no node with ntilde = 1");
  }
  return fs;
}

HeckeDescriptor parameters(const WStarData& w, const FlatSharp& fs, const std::vector<int>& ubar,
                           const std::vector<int>& d) {
  int m = static_cast<int>(w.K.size());
  HeckeDescriptor h;
  for (int a = 0; a < m; ++a)
    if (a != fs.k0) h.pi.push_back(a);
  h.cartan = submatrix(fs.cartan, h.pi);
  h.root_type = type_string(classify_cartan(h.cartan));
  auto product = [&](int a) { return Rat(ubar[a]) * fs.zbar[a] * Rat(d[a]); };
  for (int a : h.pi) {
    QVec hhat = w.htilde[a];
    for (auto& x : hhat) x *= Rat(w.z[a]) / fs.zbar[a];
    QVec half = hhat;
    for (auto& x : half) x /= Rat(2);
    bool in_2l = lattice_coords(w.lattice, half).has_value();
    if (fs.flat[a]) {
      int other = w.ends[0] == a ? w.ends[1] : w.ends[0];
      h.lambda.push_back(as_int((product(a) + product(other)) / Rat(2), "lambda"));
      Rat star = (product(a) - product(other)).abs() / Rat(2);
      h.lambda_star.push_back(in_2l ? std::optional<long long>(as_int(star, "lambda*")) : std::nullopt);
    } else {
      h.lambda.push_back(as_int(product(a) / Rat(2), "lambda"));
      h.lambda_star.push_back(std::nullopt);
      if (in_2l) throw InvariantError("lambda* undefined on a ♯ node with h^ in 2ℒ'");
    }
  }
  for (std::size_t i = 0; i < h.pi.size(); ++i)
    for (std::size_t j = 0; j < h.pi.size(); ++j)
      if (h.cartan[i][j] == -1 && h.cartan[j][i] == -1 && h.lambda[i] != h.lambda[j])
        throw InvariantError("lambda differs on conjugate simple roots");
  return h;
}

// ---------------------------------------------------------------------------
// Family templates.

namespace {

std::string lab(long long u, const std::string& z, long long d) {
  return std::to_string(u) + "×" + z + "×" + std::to_string(d);
}

std::vector<int> odd_parts(long long j) {
  std::vector<int> p;
  for (long long i = 1; i <= j; ++i) p.push_back(static_cast<int>(2 * i - 1));
  return p;
}

std::vector<int> even_parts(long long i) {
  std::vector<int> p;
  for (long long t = 1; t <= i; ++t) p.push_back(static_cast<int>(2 * t));
  return p;
}

std::vector<int> spin_parts(long long m) {
  std::vector<int> p;
  for (long long l = 2 * m - 1; l > 0; l -= 4) p.push_back(static_cast<int>(l));
  return p;
}

OrbitBox classical_box(char letter, long long rank, std::vector<int> parts, const std::string& rule) {
  OrbitBox b;
  b.letter = letter;
  b.rank = static_cast<int>(rank);
  b.parts = std::move(parts);
  b.wdd = wdd_from_partition(letter, b.rank, b.parts);
  b.rule = rule;
  return b;
}

long long c_index(long long q) {
  for (long long i = 0; i * (i + 1) <= 2 * q; ++i)
    if (i * (i + 1) == 2 * q) return i;
  throw InvariantError("2q is not of the form i(i+1)");
}

std::string fill(std::string text, const std::map<std::string, long long>& vals) {
  for (auto& [k, v] : vals) {
    std::string key = "{" + k + "}";
    for (std::size_t pos; (pos = text.find(key)) != std::string::npos;) text.replace(pos, key.size(), std::to_string(v));
  }
  return text;
}

std::string ha_template(bool sc, long long s, long long l, long long mid, long long r) {
  return "C̃_{" + std::to_string(s - 1) + "}" + (sc ? "^{sc}" : "") + "[_{" + std::to_string(l) + "}" +
         std::to_string(mid) + "_{" + std::to_string(r) + "}]";
}

// K-node subscripts 1..s in layout positions; boxes at the given position ranges.
struct Placement {
  int nodes = 0;
  std::vector<int> k_pos;
  std::vector<std::pair<int, OrbitBox>> boxes;  // start position
};

void finish_case(CuspidalCase& c, const Placement& pl) {
  auto f = FoldedRootDatum::standard(c.type, c.d);
  c.layout = beta_layout(f);
  if (static_cast<int>(c.layout.size()) != pl.nodes)
    throw InvariantError("family layout has " + std::to_string(pl.nodes) + " nodes, the diagram has " +
                         std::to_string(c.layout.size()));
  for (auto [start, box] : pl.boxes) {
    for (int t = 0; t < box.rank; ++t) box.nodes.push_back(c.layout[start + t]);
    for (int v : box.nodes) c.J.push_back(v);
    c.boxes.push_back(box);
  }
  std::sort(c.J.begin(), c.J.end());
  std::vector<std::string> names;
  for (auto& b : c.boxes) names.push_back(canonical_type(std::string(1, b.letter) + std::to_string(b.rank)));
  std::sort(names.begin(), names.end());
  std::string joined;
  for (auto& n : names) joined += (joined.empty() ? "" : "x") + n;
  c.gj_type = joined.empty() ? "" : canonical_type(joined);
}

void chain_glyphs(CuspidalCase& c, long long s, const std::string& left, const std::string& right) {
  if (s == 2) {
    c.glyphs = {"∞"};
    return;
  }
  c.glyphs.push_back(left);
  for (long long i = 0; i + 3 < s; ++i) c.glyphs.push_back("—");
  c.glyphs.push_back(right);
}

void printed_chain(CuspidalCase& c, long long s, bool ascending, const std::string& first, bool first_flat,
                   const std::string& mid, const std::string& last, bool last_flat) {
  for (long long i = 1; i <= s; ++i) {
    long long sub = ascending ? i : s + 1 - i;
    PrintedNode p;
    p.sub = static_cast<int>(sub);
    if (i == 1) p.label = first, p.flat = first_flat;
    else if (i == s) p.label = last, p.flat = last_flat;
    else p.label = mid;
    c.printed.push_back(p);
  }
}

const std::string kRankNote =
    "rank constraint read as n+1 = 2s-2+a(a+1)/2+b(b+1)/2; the printed 2s+2 does not match the box sizes";

CuspidalCase family_an_even(long long a, long long b, long long s) {
  if (mod(a, 4) != 0) throw ValidationError("an-even needs a ∈ 4Z (got a=" + std::to_string(a) + ")");
  if (mod(b, 4) != 1) throw ValidationError("an-even needs b ∈ 1+4Z (got b=" + std::to_string(b) + ")");
  if (s < 1) throw ValidationError("an-even needs s >= 1");
  long long n = 2 * s - 2 + tri(a) + tri(b) - 1;
  if (n < 2) throw ValidationError("an-even instance has n=" + std::to_string(n) + " < 2");
  CuspidalCase c;
  c.id = "an-even";
  c.type = "A" + std::to_string(n);
  c.d = 2;
  c.params = {{"a", a}, {"b", b}, {"s", s}, {"n", n}};
  long long p = ((a + b + 1) * (a + b + 1) / 4 - 1) / 2, q = (a - b - 1) * (a - b + 1) / 8;
  bool c1 = a - b != -1, c2 = std::llabs(a + b + 1) != 2;
  c.branch = c1 && c2 ? "a-b≠-1, |a+b+1|≠2" : (!c1 && c2 ? "a-b=-1, |a+b+1|≠2" : (c1 ? "a-b≠-1, |a+b+1|=2" : "a-b=-1, |a+b+1|=2"));
  Placement pl;
  pl.nodes = static_cast<int>(n / 2 + 1);
  if (q > 0) pl.boxes.push_back({0, classical_box('C', q, even_parts(c_index(q)), "C:even")});
  if (p > 0) pl.boxes.push_back({static_cast<int>(q + s), classical_box('B', p, odd_parts(std::llabs(a + b + 1) / 2), "B:odd")});
  if (q + s + p != pl.nodes) throw InvariantError("an-even box sizes do not fill the diagram");
  finish_case(c, pl);
  if (s >= 2) {
    std::string fs = c2 ? lab(std::llabs(a + b + 1), "1", 2) : lab(2, "1/2", 4);
    std::string f1 = c1 ? lab(std::llabs(a - b), "1", 2) : lab(2, "1/2", 2);
    printed_chain(c, s, false, fs, true, lab(2, "1", 2), f1, true);
    chain_glyphs(c, s, "⇐", "⇒");
    c.ha = ha_template(true, s, std::llabs(2 * a + 1), 2, std::llabs(2 * b + 1));
    c.ha_ends = std::vector<long long>{std::llabs(2 * a + 1), std::llabs(2 * b + 1)};
    c.ha_middle = 2;
  } else {
    c.ha = "∅";
  }
  c.arithmetic = fill(catalog()["families"]["an-even"]["arithmetic"], {{"n", n}, {"pp", tri(a)}, {"qq", tri(b)}});
  c.notes.push_back(kRankNote);
  return c;
}

CuspidalCase family_an_odd(long long a, long long b, long long s) {
  bool ok = (mod(a, 4) == 0 && mod(b, 4) == 3) || (mod(a, 4) == 2 && mod(b, 4) == 1);
  if (!ok)
    throw ValidationError("an-odd needs a ∈ 4Z, b ∈ 3+4Z or a ∈ 2+4Z, b ∈ 1+4Z (got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b) + ")");
  if (s < 1) throw ValidationError("an-odd needs s >= 1");
  long long n = 2 * s - 2 + tri(a) + tri(b) - 1;
  if (n < 3) throw ValidationError("an-odd instance has n=" + std::to_string(n) + " < 3");
  CuspidalCase c;
  c.id = "an-odd";
  c.type = "A" + std::to_string(n);
  c.d = 2;
  c.params = {{"a", a}, {"b", b}, {"s", s}, {"n", n}};
  long long p = (a + b + 1) * (a + b + 1) / 8, q = (a - b - 1) * (a - b + 1) / 8;
  bool c1 = a - b != 1, c2 = a + b != -1;
  c.branch = c1 && c2 ? "a-b≠1, a+b≠-1" : (!c1 && c2 ? "a-b=1, a+b≠-1" : (c1 ? "a-b≠1, a+b=-1" : "a-b=1, a+b=-1"));
  Placement pl;
  pl.nodes = static_cast<int>((n + 1) / 2 + 1);
  if (p > 0) pl.boxes.push_back({0, classical_box('D', p, odd_parts(std::llabs(a + b + 1) / 2), "D:odd")});
  if (q > 0) pl.boxes.push_back({static_cast<int>(p + s), classical_box('C', q, even_parts(c_index(q)), "C:even")});
  if (q + s + p != pl.nodes) throw InvariantError("an-odd box sizes do not fill the diagram");
  finish_case(c, pl);
  if (s >= 2) {
    std::string sh = lab(2, "1", 2);
    if (c2) {
      if (c1) {
        printed_chain(c, s, false, lab(std::llabs(a + b + 1), "1", 2), true, sh, lab(std::llabs(a - b), "1", 2), true);
      } else {
        printed_chain(c, s, true, lab(std::llabs(a + b + 1), "1", 2), true, sh, lab(2, "1", 1), true);
      }
      chain_glyphs(c, s, "⇐", "⇒");
    } else if (s >= 4) {
      std::string top = c1 ? lab(std::llabs(a - b), "1", 2) : lab(2, "1", 1);
      for (long long i = s; i >= 1; --i) c.printed.push_back({static_cast<int>(i), false, i == s ? top : sh});
    } else {
      c.notes.push_back("the all-♯ fork template needs s >= 4; for s <= 3 the computed diagram is shown unchecked");
    }
    long long l = std::llabs(2 * a + 1), r = std::llabs(2 * b + 1);
    c.ha = ha_template(c2, s, l, 2, r);
    // End subscripts of the non-sc template are not the {lambda, lambda*} pair of a ♭ end.
    if (c2) c.ha_ends = std::vector<long long>{l, r};
    c.ha_middle = 2;
  } else {
    c.ha = "∅";
  }
  c.arithmetic = fill(catalog()["families"]["an-odd"]["arithmetic"], {{"n", n}, {"pp", tri(a)}, {"qq", tri(b)}});
  c.notes.push_back(kRankNote);
  return c;
}

CuspidalCase family_dn_orthogonal(long long a, long long b, long long s) {
  if (a < 1 || a % 2 == 0) throw ValidationError("dn-orthogonal needs a >= 1 odd (got a=" + std::to_string(a) + ")");
  if (b < 0 || b % 2 != 0) throw ValidationError("dn-orthogonal needs b >= 0 even (got b=" + std::to_string(b) + ")");
  if (s < 1) throw ValidationError("dn-orthogonal needs s >= 1");
  long long n = s + a * a + b * b - 1;
  if (n < 4) throw ValidationError("dn-orthogonal instance has n=" + std::to_string(n) + " < 4");
  CuspidalCase c;
  c.id = "dn-orthogonal";
  c.type = "D" + std::to_string(n);
  c.d = 2;
  c.params = {{"a", a}, {"b", b}, {"s", s}, {"n", n}};
  long long p = ((a + b) * (a + b) - 1) / 2, q = ((a - b) * (a - b) - 1) / 2;
  bool c1 = a + b != 1, c2 = std::llabs(a - b) != 1;
  c.branch = c1 && c2 ? "a+b≠1, |a-b|≠1" : (c1 ? "a+b≠1, |a-b|=1" : "a+b=1, |a-b|=1");
  Placement pl;
  pl.nodes = static_cast<int>(n);
  if (p > 0) pl.boxes.push_back({0, classical_box('B', p, odd_parts(a + b), "B:odd")});
  if (q > 0) pl.boxes.push_back({static_cast<int>(p + s), classical_box('B', q, odd_parts(std::llabs(a - b)), "B:odd")});
  if (q + s + p != pl.nodes) throw InvariantError("dn-orthogonal box sizes do not fill the diagram");
  finish_case(c, pl);
  if (s >= 2) {
    std::string sh = lab(2, "1", 1), half = lab(2, "1/2", 2);
    if (c1 && c2) printed_chain(c, s, true, lab(2 * (a + b), "1", 1), true, sh, lab(2 * std::llabs(a - b), "1", 1), true);
    else if (c1) printed_chain(c, s, true, lab(2 * (a + b), "1", 1), true, sh, half, true);
    else printed_chain(c, s, false, half, true, sh, half, true);
    chain_glyphs(c, s, "⇐", "⇒");
    c.ha = ha_template(true, s, 2 * a, 1, 2 * b);
    c.ha_ends = std::vector<long long>{2 * a, 2 * b};
    c.ha_middle = 1;
  } else {
    c.ha = "∅";
  }
  c.arithmetic = fill(catalog()["families"]["dn-orthogonal"]["arithmetic"], {{"n", n}, {"pp", a * a}, {"qq", b * b}});
  return c;
}

CuspidalCase family_dn_spin(long long a, long long b, long long s) {
  if (a < 0 || b < 0) throw ValidationError("dn-spin needs a, b >= 0");
  if (s < 1) throw ValidationError("dn-spin needs s >= 1");
  long long n = 2 * a * a + tri(b) - 1 + 2 * s - 1;
  if (mod(a, 2) != mod(n + 1, 2)) throw ValidationError("dn-spin needs a = n+1 mod 2 (a=" + std::to_string(a) + ", n=" + std::to_string(n) + ")");
  if (mod(tri(b), 2) != mod(n, 2)) throw ValidationError("dn-spin needs (b^2+b)/2 = n mod 2");
  if (n < 4) throw ValidationError("dn-spin instance has n=" + std::to_string(n) + " < 4");
  long long tp = tri(2 * a + b), tq = (2 * a - b) * (2 * a - b - 1) / 2;
  if (tp % 2 == 0 || tq % 2 == 0) throw ValidationError("dn-spin box sizes are not integral for these a, b");
  long long p = (tp - 1) / 2, q = (tq - 1) / 2;
  long long mq = 2 * a - b >= 1 ? 2 * a - b - 1 : b - 2 * a;
  CuspidalCase c;
  c.id = "dn-spin";
  c.type = "D" + std::to_string(n);
  c.d = 2;
  c.params = {{"a", a}, {"b", b}, {"s", s}, {"n", n}};
  bool c1 = 2 * a + b != 1, c2 = std::llabs(4 * a - 2 * b - 1) != 3;
  c.branch = c1 && c2 ? "2a+b≠1, |4a-2b-1|≠3" : (c1 ? "2a+b≠1, |4a-2b-1|=3" : "2a+b=1, 2a-b=-1");
  Placement pl;
  pl.nodes = static_cast<int>(n);
  if (p > 0) pl.boxes.push_back({0, classical_box('B', p, spin_parts(2 * a + b), "B:spin")});
  for (long long i = 1; i < s; ++i) {
    OrbitBox a1;
    a1.letter = 'A', a1.rank = 1, a1.wdd = {2}, a1.rule = "A1:regular";
    pl.boxes.push_back({static_cast<int>(p + 2 * i - 1), a1});
  }
  if (q > 0) pl.boxes.push_back({static_cast<int>(p + 2 * s - 1), classical_box('B', q, spin_parts(mq), "B:spin")});
  if (p + 2 * s - 1 + q != pl.nodes) throw InvariantError("dn-spin box sizes do not fill the diagram");
  finish_case(c, pl);
  if (s >= 2) {
    std::string sh = lab(4, "1", 1), three = lab(3, "1/2", 2);
    if (c1 && c2) printed_chain(c, s, true, lab(4 * a + 2 * b + 1, "1", 1), true, sh, lab(std::llabs(4 * a - 2 * b - 1), "1/2", 2), true);
    else if (c1) printed_chain(c, s, true, lab(4 * a + 2 * b + 1, "1", 1), true, sh, three, true);
    else printed_chain(c, s, true, three, true, sh, three, true);
    chain_glyphs(c, s, "⇐", "⇒");
    c.ha = ha_template(true, s, 4 * a, 2, 2 * b + 1);
    c.ha_ends = std::vector<long long>{4 * a, 2 * b + 1};
    c.ha_middle = 2;
  } else {
    c.ha = "∅";
  }
  c.arithmetic = fill(catalog()["families"]["dn-spin"]["arithmetic"], {{"n", n}, {"pp", a * a}, {"rr", tri(b)}});
  return c;
}

std::pair<char, int> parse_code(const std::string& type) {
  if (type.size() < 2 || !std::isupper(static_cast<unsigned char>(type[0])))
    throw ValidationError("unknown type code " + type);
  try {
    return {type[0], std::stoi(type.substr(1))};
  } catch (const std::exception&) {
    throw ValidationError("unknown type code " + type);
  }
}

CuspidalCase catalog_case(const json& row) {
  CuspidalCase c;
  c.id = row.at("id");
  c.type = row.at("type");
  c.d = row.at("d");
  c.J = row.at("J").get<std::vector<int>>();
  std::sort(c.J.begin(), c.J.end());
  c.gj_type = row.value("gj_type", "");
  c.local_systems = row.value("local_systems", 1);
  auto f = FoldedRootDatum::standard(c.type, c.d);
  c.layout = beta_layout(f);
  if (!c.J.empty()) {
    IMat sub = submatrix(f.a_twisted(), c.J);
    for (auto& comp : classify_cartan(sub)) {
      std::string key = row.at("orbits").value(comp.name, "");
      if (key.empty()) throw ValidationError("catalog row " + c.id + " has no orbit for a " + comp.name + " factor");
      const json& orb = catalog().at("orbits").at(key);
      OrbitBox box;
      box.letter = comp.letter;
      box.rank = comp.rank;
      box.wdd = orb.at("wdd").get<std::vector<int>>();
      box.rule = key;
      for (int i : comp.nodes) box.nodes.push_back(c.J[i]);
      c.boxes.push_back(box);
    }
  }
  for (auto& p : row.at("flat_sharp"))
    c.printed.push_back({p.at("sub").get<int>(), p.at("flag") == "flat", p.at("label").get<std::string>()});
  c.glyphs = row.value("glyphs", std::vector<std::string>{});
  c.ha = row.at("ha");
  c.ha_literal = row.value("ha_literal", false);
  c.arithmetic = row.at("arithmetic");
  if (row.contains("discrepancy")) c.notes.push_back(row.at("discrepancy"));
  return c;
}

}  // namespace

CuspidalCase family_case(const std::string& family, long long a, long long b, long long s) {
  if (family == "an-even") return family_an_even(a, b, s);
  if (family == "an-odd") return family_an_odd(a, b, s);
  if (family == "dn-orthogonal") return family_dn_orthogonal(a, b, s);
  if (family == "dn-spin") return family_dn_spin(a, b, s);
  throw ValidationError("unknown family " + family + " (expected an-even, an-odd, dn-orthogonal or dn-spin)");
}

std::vector<CuspidalCase> enumerate_cases(const std::string& type, int d) {
  auto [letter, n] = parse_code(type);
  std::vector<CuspidalCase> out;
  bool matched = false;
  for (auto& row : catalog().at("rows"))
    if (row.at("type") == type && row.at("d") == d) out.push_back(catalog_case(row)), matched = true;
  if (matched) return out;
  if (d != 2 || (letter != 'A' && letter != 'D'))
    throw ValidationError("no table for " + type + " with d=" + std::to_string(d) +
                          " (tables cover A_n, D_n with d=2, E6 with d=2, D4 with d=3)");
  long long N = n + 1;
  long long lim = 2;
  while (tri(lim) <= 2 * N + 2) ++lim;
  if (letter == 'A') {
    if (n < 2) throw ValidationError("A_n with d=2 needs n >= 2");
    std::string fam = n % 2 == 0 ? "an-even" : "an-odd";
    for (long long a = -lim; a <= lim; ++a)
      for (long long b = -lim; b <= lim; ++b) {
        long long rest = N - tri(a) - tri(b) + 2;
        if (rest < 2 || rest % 2) continue;
        bool cong = fam == "an-even" ? (mod(a, 4) == 0 && mod(b, 4) == 1)
                                  : ((mod(a, 4) == 0 && mod(b, 4) == 3) || (mod(a, 4) == 2 && mod(b, 4) == 1));
        if (!cong) continue;
        out.push_back(family_case(fam, a, b, rest / 2));
      }
  } else {
    if (n < 4) throw ValidationError("D_n needs n >= 4");
    for (long long a = 1; a * a <= N; a += 2)
      for (long long b = 0; a * a + b * b < N; b += 2) out.push_back(family_case("dn-orthogonal", a, b, N - a * a - b * b));
    for (long long a = 0; 2 * a * a <= N + 1; ++a)
      for (long long b = 0; tri(b) <= N + 1; ++b) {
        long long twice_s = N - 2 * a * a - tri(b) + 1;
        if (twice_s < 2 || twice_s % 2) continue;
        if (mod(a, 2) != mod(N, 2) || mod(tri(b), 2) != mod(n, 2)) continue;
        try {
          out.push_back(family_case("dn-spin", a, b, twice_s / 2));
        } catch (const ValidationError&) {
          continue;
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rows.

namespace {

std::vector<int> weights_for(const CuspidalCase& c, const FoldedRootDatum& f) {
  std::map<int, int> w;
  for (auto& box : c.boxes) {
    IMat sub = submatrix(f.a_twisted(), box.nodes);
    auto comps = classify_cartan(sub);
    std::string want = canonical_type(std::string(1, box.letter) + std::to_string(box.rank));
    if (canonical_type(type_string(comps)) != want)
      throw InvariantError("box " + want + " sits on nodes of type " + type_string(comps));
    if (comps.size() == 1 && comps[0].letter == box.letter && comps[0].rank == box.rank) {
      for (std::size_t i = 0; i < comps[0].nodes.size(); ++i) w[box.nodes[comps[0].nodes[i]]] = box.wdd[i];
    } else if (box.rank == 1 || (box.letter == 'D' && box.rank == 2)) {
      for (std::size_t i = 0; i < comps.size(); ++i) w[box.nodes[comps[i].nodes[0]]] = box.wdd[i];
    } else {
      throw InvariantError("cannot transfer weights of " + want + " to " + type_string(comps));
    }
  }
  std::vector<int> out;
  for (int j : c.J) {
    if (!w.count(j)) throw InvariantError("J node " + std::to_string(j) + " lies in no box");
    out.push_back(w[j]);
  }
  return out;
}

int ubar_from_label(const std::string& label) {
  auto pos = label.find("×");
  return std::stoi(label.substr(0, pos));
}

int dim_gJ(const std::vector<int>& J, const Alcove& alc, const ChevalleyAlgebra* engine) {
  if (engine) {
    int total = 0;
    for (int p : engine->host_pieces(J)) total += static_cast<int>(engine->pieces()[p].basis.size());
    return total;
  }
  int total = alc.folded().r();
  for (auto& ne : alc.n_set())
    if (alc.in_span(alc.folded().rroots()[ne.root].beta, ne.j, J)) ++total;
  return total;
}

std::string dual_ha(const HeckeDescriptor& h) {
  IMat dual = transpose(h.cartan);
  auto comps = classify_cartan(dual);
  std::vector<Rat> len = symmetrizer(h.cartan);
  std::string out;
  for (auto& comp : comps) {
    int r = comp.rank;
    IMat sub = submatrix(dual, comp.nodes);
    auto datum = CartanDatum::from_matrix(sub);
    IVec theta = datum.highest_root();
    IVec thetav = datum.coroots()[*datum.root_index(theta)];
    IMat e(r + 1, IVec(r + 1, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) e[i][j] = sub[i][j];
    for (int j = 0; j < r; ++j) {
      long long x = 0, y = 0;
      for (int i = 0; i < r; ++i) x += thetav[i] * sub[i][j], y += theta[i] * sub[j][i];
      e[r][j] = -x;
      e[j][r] = -y;
    }
    e[r][r] = 2;
    int shortest = comp.nodes[0];
    for (int v : comp.nodes)
      if (len[v] < len[shortest]) shortest = v;
    std::vector<std::string> text;
    for (int v : comp.nodes) text.push_back(std::to_string(h.lambda[v]));
    text.push_back(std::to_string(h.lambda[shortest]));
    std::vector<std::vector<int>> nb(r + 1);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r; ++j)
        if (i != j && e[i][j]) nb[i].push_back(j);
    std::vector<int> order;
    std::vector<int> ends;
    for (int i = 0; i < r; ++i)
      if (nb[i].size() <= 1) ends.push_back(i);
    int start = ends.empty() ? 0 : ends[0];
    if (nb[r].size() == 1 && r > 0) {
      for (int x : ends)
        if (x != r) start = x;
      int prev = -1, cur = start;
      if (r == 1) cur = 0;
      while (cur >= 0) {
        order.push_back(cur);
        int next = -1;
        for (int v : nb[cur])
          if (v != prev && std::find(order.begin(), order.end(), v) == order.end()) next = v;
        prev = cur, cur = next;
      }
    }
    if (static_cast<int>(order.size()) != r + 1) {
      order.clear();
      for (int i = 0; i <= r; ++i) order.push_back(i);
    }
    if (!out.empty()) out += " × ";
    out += render_graph(e, order, text, {});
  }
  return out;
}

}  // namespace

TableRow table_row(const CuspidalCase& c, const ChevalleyAlgebra* engine) {
  TableRow row;
  row.input = c;
  auto f = FoldedRootDatum::standard(c.type, c.d);
  Alcove alc(f);
  if (engine && (engine->base().label() != f.base().label() || engine->d() != c.d))
    throw InvariantError("engine does not match the case ambient");
  int nn = f.num_nodes();
  std::set<int> Jset(c.J.begin(), c.J.end());
  std::vector<int> K;
  for (int i : c.layout)
    if (!Jset.count(i)) K.push_back(i);
  if (K.empty()) throw ValidationError("J must be a proper subset of I");

  GJDatum gj = alc.gj_root_datum(c.J);
  std::string got = c.J.empty() ? "" : canonical_type(type_string(gj.components));
  if (got != c.gj_type) row.checks_failed.push_back("G_J type " + got + " differs from the expected " + c.gj_type);

  std::vector<int> weights = weights_for(c, f);
  std::vector<int> ubar(K.size(), 0), dk;
  std::string source = engine ? "computed" : "catalog";
  if (engine) {
    Sl2Triple tri = engine->distinguished_nilpotent(c.J, weights);
    if (K.size() >= 2)
      for (std::size_t a = 0; a < K.size(); ++a) ubar[a] = engine->u_bar(c.J, K[a], tri);
  } else {
    if (K.size() >= 2 && c.printed.size() != K.size())
      throw ValidationError("no engine and no printed labels to take ū from for case " + c.id);
    for (auto& p : c.printed) ubar[p.sub - 1] = ubar_from_label(p.label);
  }
  for (int k : K) dk.push_back(f.d_nodes()[k]);

  std::vector<std::string> gtext(nn, "∘"), btext(nn, "∘");
  std::vector<bool> boxed(nn, false);
  for (int j : c.J) boxed[j] = true;
  for (std::size_t a = 0; a < K.size(); ++a) btext[K[a]] = "∘" + subscript_digits(static_cast<int>(a + 1));
  row.gamma_graph = render_graph(f.a(), c.layout, gtext, {});
  row.beta_graph = render_graph(f.a_twisted(), c.layout, btext, boxed);

  if (K.size() == 1) {
    row.hecke.degenerate = true;
    NodeData nd;
    nd.node = K[0], nd.sub = 1, nd.d = dk[0], nd.n = f.marks()[K[0]];
    nd.ubar_source = "n/a";
    row.nodes.push_back(nd);
    row.flat_sharp = row.flat_sharp_subscripted = "∅";
    row.ha = "∅";
    if (!c.ha.empty() && c.ha != "∅") row.discrepancies.push_back("printed H.A. " + c.ha + " for |K| = 1");
    for (auto& n : c.notes) (c.ha_literal ? row.discrepancies : row.notes).push_back(n);
    return row;
  }

  WStarData w = wstar_data(alc, c.J);
  if (w.K != K) throw InvariantError("K order mismatch");
  FlatSharp fs = flat_sharp_split(w, ubar, dk);
  row.hecke = parameters(w, fs, ubar, dk);
  row.wstar = w;
  row.split = fs;
  int m = static_cast<int>(K.size());
  for (int a = 0; a < m; ++a) {
    NodeData nd;
    nd.node = K[a], nd.sub = a + 1, nd.flat = fs.flat[a], nd.ubar = ubar[a], nd.zbar = fs.zbar[a], nd.d = dk[a];
    nd.z = w.z[a], nd.ntilde = w.ntilde[a], nd.n = w.n[a];
    nd.ubar_source = source;
    row.nodes.push_back(nd);
  }

  // Invariants.
  for (auto& nd : row.nodes)
    if (nd.z * nd.ntilde != nd.n)
      row.checks_failed.push_back("z_k = n_k/ntilde_k fails at node " + std::to_string(nd.node));
  for (std::size_t i = 0; i < row.hecke.pi.size(); ++i) {
    int a = row.hecke.pi[i];
    if (fs.flat[a]) continue;
    Rat mu = Rat(dk[a]) * fs.zbar[a] * Rat(ubar[a]);
    if (mu != Rat(2 * row.hecke.lambda[i])) row.checks_failed.push_back("mu != 2 lambda at a ♯ node");
  }
  {
    std::vector<QMat> lin;
    for (int a = 0; a < m; ++a) {
      QMat s(m, QVec(m));
      for (int r = 0; r < m; ++r)
        for (int cc = 0; cc < m; ++cc) s[r][cc] = w.sigma[a][K[r]][K[cc]];
      lin.push_back(s);
    }
    std::vector<QVec> hhat;
    for (int a = 0; a < m; ++a) {
      QVec h = w.htilde[a];
      for (auto& x : h) x *= Rat(w.z[a]) / fs.zbar[a];
      hhat.push_back(h);
    }
    auto coroots = orbit(lin, hhat);
    std::vector<QVec> gens = coroots;
    for (auto& v : coroots) {
      QVec half = v;
      for (auto& x : half) x /= Rat(2);
      if (lattice_coords(w.lattice, half)) gens.push_back(half);
    }
    if (!same_lattice(lattice_basis(gens), w.lattice))
      row.checks_failed.push_back("coroots and their admissible halves do not generate ℒ'");
  }
  {
    std::vector<int> dims;
    for (int a = 0; a < m; ++a) {
      std::vector<int> rest;
      for (int i = 0; i < nn; ++i)
        if (i != K[a]) rest.push_back(i);
      dims.push_back(dim_gJ(rest, alc, engine));
    }
    for (int a = 0; a < m; ++a)
      if (dims[a] > dims[fs.k0]) row.checks_failed.push_back("dim g_{I-k0} < dim g_{I-k}");
  }
  if (!w.ends.empty()) {
    for (int a = 0; a < m; ++a)
      if ((w.ntilde[a] == 1) != fs.flat[a]) row.checks_failed.push_back("{ntilde = 1} differs from K♭");
  }
  {
    std::vector<int> pi;
    for (int a = 0; a < m; ++a)
      if (a != fs.k0) pi.push_back(a);
    IMat tc(pi.size(), IVec(pi.size()));
    for (std::size_t i = 0; i < pi.size(); ++i)
      for (std::size_t j = 0; j < pi.size(); ++j) tc[i][j] = as_int(w.pairing[pi[i]][pi[j]], "gamma~(h~)");
    long long sum = 0;
    for (auto x : w.ntilde) sum += x;
    auto comps = classify_cartan(tc);
    if (comps.size() == 1 && CartanDatum::from_matrix(tc).coxeter_number() != sum)
      row.checks_failed.push_back("sum of ntilde differs from the Coxeter number");
  }

  // Rendering.
  std::vector<int> display;
  for (auto& p : c.printed)
    if (p.sub >= 1 && p.sub <= m) display.push_back(p.sub - 1);
  if (static_cast<int>(display.size()) != m || !is_path(fs.cartan, display)) {
    display.clear();
    for (int a = 0; a < m; ++a) display.push_back(a);
    if (!is_path(fs.cartan, display)) {
      std::vector<int> deg(m, 0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (a != b && adjacent(fs.cartan, a, b)) ++deg[a];
      int hang = -1;
      for (int a = 0; a < m && hang < 0; ++a)
        if (deg[a] == 1) {
          std::vector<int> rest;
          for (int b = 0; b < m; ++b)
            if (b != a) rest.push_back(b);
          for (int start : rest) {
            std::vector<int> path{start};
            while (path.size() < rest.size()) {
              int next = -1;
              for (int b : rest)
                if (std::find(path.begin(), path.end(), b) == path.end() && adjacent(fs.cartan, path.back(), b)) next = b;
              if (next < 0) break;
              path.push_back(next);
            }
            if (path.size() == rest.size() && is_path(fs.cartan, path)) {
              hang = a;
              display = {a};
              display.insert(display.end(), path.begin(), path.end());
              break;
            }
          }
        }
    }
  }
  std::vector<std::string> plain(m), subbed(m);
  for (int a = 0; a < m; ++a) {
    std::string flag = fs.flat[a] ? "♭" : "♯";
    plain[a] = flag + "^{" + row.nodes[a].label() + "}";
    subbed[a] = flag + subscript_digits(a + 1) + "^{" + row.nodes[a].label() + "}";
  }
  row.flat_sharp = render_graph(fs.cartan, display, plain, {});
  row.flat_sharp_subscripted = render_graph(fs.cartan, display, subbed, {});

  for (auto& p : c.printed) {
    if (p.sub < 1 || p.sub > m) {
      row.discrepancies.push_back("printed node " + std::to_string(p.sub) + " has no counterpart");
      continue;
    }
    const NodeData& nd = row.nodes[p.sub - 1];
    if (nd.label() != p.label || nd.flat != p.flat)
      row.discrepancies.push_back("node " + std::to_string(p.sub) + ": printed " + (p.flat ? "♭" : "♯") + p.label +
                                  ", computed " + (nd.flat ? "♭" : "♯") + nd.label());
  }
  if (!c.glyphs.empty() && is_path(fs.cartan, display) && c.printed.size() == static_cast<std::size_t>(m)) {
    std::vector<std::string> got_glyphs;
    for (int i = 0; i + 1 < m; ++i) got_glyphs.push_back(bond(fs.cartan, display[i], display[i + 1]));
    if (got_glyphs != c.glyphs) {
      std::string a, b;
      for (auto& g : c.glyphs) a += g + " ";
      for (auto& g : got_glyphs) b += g + " ";
      row.discrepancies.push_back("bonds: printed " + a + "computed " + b);
    }
  }

  if (c.ha_literal) {
    row.ha = c.ha;
    for (auto& n : c.notes) row.discrepancies.push_back(n);
    for (std::size_t i = 0; i < row.hecke.pi.size(); ++i)
      if (fs.flat[row.hecke.pi[i]] && row.hecke.lambda_star[i])
        row.discrepancies.push_back("end-label rule on the computed labels gives {lambda, lambda*} = {" +
                                    std::to_string(row.hecke.lambda[i]) + ", " +
                                    std::to_string(*row.hecke.lambda_star[i]) + "}");
  } else if (c.ha_middle) {
    row.ha = c.ha;
    std::vector<long long> want = c.ha_ends.value_or(std::vector<long long>{}), have;
    for (std::size_t i = 0; i < row.hecke.pi.size(); ++i) {
      int a = row.hecke.pi[i];
      if (!fs.flat[a]) continue;
      have.push_back(row.hecke.lambda[i]);
      have.push_back(row.hecke.lambda_star[i].value_or(-1));
    }
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (c.ha_ends && !have.empty() && have != want) {
      std::string msg = "H.A. end labels: template {" + std::to_string(want[0]) + "," + std::to_string(want[1]) +
                        "}, computed {lambda, lambda*} = {" + std::to_string(have[0]) + "," + std::to_string(have[1]) + "}";
      row.discrepancies.push_back(msg);
    }
    auto degree = [&](int a) {
      int deg = 0;
      for (int b = 0; b < m; ++b)
        if (b != a && fs.cartan[a][b] != 0) ++deg;
      return deg;
    };
    for (std::size_t i = 0; i < row.hecke.pi.size(); ++i)
      if (!c.printed.empty() && !fs.flat[row.hecke.pi[i]] && degree(row.hecke.pi[i]) == 2 &&
          row.hecke.lambda[i] != *c.ha_middle)
        row.discrepancies.push_back("H.A. middle label " + std::to_string(*c.ha_middle) + " differs from lambda " +
                                    std::to_string(row.hecke.lambda[i]));
  } else {
    row.ha = dual_ha(row.hecke);
    if (!c.ha.empty() && c.ha != row.ha) row.discrepancies.push_back("H.A.: printed " + c.ha + ", computed " + row.ha);
  }
  if (!c.ha_literal)
    for (auto& n : c.notes) row.notes.push_back(n);
  return row;
}

TableRow table_row_auto(const CuspidalCase& c) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::shared_ptr<ChevalleyAlgebra>> cache;
  std::shared_ptr<ChevalleyAlgebra> engine;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(c.type, c.d);
    auto it = cache.find(key);
    if (it == cache.end()) {
      try {
        engine = std::make_shared<ChevalleyAlgebra>(c.type, c.d);
      } catch (const ValidationError&) {
        engine = nullptr;
      }
      cache[key] = engine;
    } else {
      engine = it->second;
    }
  }
  return table_row(c, engine.get());
}

json TableRow::to_json() const {
  json j;
  j["id"] = input.id;
  j["type"] = input.type;
  j["d"] = input.d;
  j["J"] = input.J;
  j["gj_type"] = input.gj_type;
  j["local_systems"] = input.local_systems;
  if (!input.params.empty()) j["params"] = input.params;
  if (!input.branch.empty()) j["branch"] = input.branch;
  json boxes = json::array();
  for (auto& b : input.boxes)
    boxes.push_back({{"nodes", b.nodes}, {"type", std::string(1, b.letter) + std::to_string(b.rank)},
                     {"partition", b.parts}, {"wdd", b.wdd}, {"orbit", b.rule}});
  j["boxes"] = boxes;
  json nodes = json::array();
  for (auto& n : this->nodes) {
    json nd{{"node", n.node}, {"sub", n.sub}, {"ubar", n.ubar}, {"d", n.d}, {"n", n.n},
            {"provenance", {{"ubar", n.ubar_source}, {"d", "computed"}, {"n", "computed"}}}};
    if (!hecke.degenerate) {
      nd["flag"] = n.flat ? "flat" : "sharp";
      nd["zbar"] = n.zbar.str();
      nd["z"] = n.z;
      nd["ntilde"] = n.ntilde;
      nd["label"] = n.label();
      nd["provenance"]["z"] = nd["provenance"]["zbar"] = nd["provenance"]["ntilde"] = "computed";
    }
    nodes.push_back(nd);
  }
  j["nodes"] = nodes;
  json hk;
  hk["degenerate"] = hecke.degenerate;
  if (!hecke.degenerate) {
    hk["k0"] = this->nodes[split ? split->k0 : 0].node;
    std::vector<int> pi_nodes;
    for (int a : hecke.pi) pi_nodes.push_back(this->nodes[a].node);
    hk["pi"] = pi_nodes;
    hk["cartan"] = hecke.cartan;
    hk["root_type"] = hecke.root_type;
    hk["lambda"] = hecke.lambda;
    json ls = json::array();
    for (auto& x : hecke.lambda_star) ls.push_back(x ? json(*x) : json(nullptr));
    hk["lambda_star"] = ls;
  }
  j["hecke"] = hk;
  j["diagrams"] = {{"gamma", gamma_graph}, {"beta", beta_graph}, {"flat_sharp", flat_sharp},
                   {"flat_sharp_subscripted", flat_sharp_subscripted}};
  j["ha"] = ha;
  j["ha_provenance"] = input.ha_literal ? "catalog" : (input.ha_middle ? "template" : "computed");
  j["arithmetic"] = input.arithmetic;
  j["notes"] = notes;
  j["discrepancies"] = discrepancies;
  j["checks_failed"] = checks_failed;
  return j;
}

std::string TableRow::to_text() const {
  std::ostringstream os;
  os << input.id << "  " << input.type << ", d=" << input.d;
  for (auto& [k, v] : input.params)
    if (k != "n") os << ", " << k << "=" << v;
  if (input.local_systems > 1) os << "  (" << input.local_systems << " cuspidal local systems)";
  os << "\n";
  if (!input.branch.empty()) os << "  case: " << input.branch << "\n";
  auto indent = [](const std::string& s) {
    std::string out;
    for (char ch : s) out += ch == '\n' ? std::string("\n    ") : std::string(1, ch);
    return out;
  };
  os << "  (γ_i)-graph:\n    " << indent(gamma_graph) << "\n";
  os << "  (β_i)-graph:\n    " << indent(beta_graph) << "\n";
  os << "  ♭-♯ diagram:\n    " << indent(flat_sharp_subscripted) << "\n";
  os << "  H.A.: " << ha << "\n";
  os << "  Arithmetic diagram: " << input.arithmetic << "\n";
  for (auto& d : notes) os << "  note: " << d << "\n";
  for (auto& d : discrepancies) os << "  discrepancy: " << d << "\n";
  for (auto& d : checks_failed) os << "  CHECK FAILED: " << d << "\n";
  return os.str();
}

std::vector<TableRow> table_rows(const std::vector<CuspidalCase>& cases, bool parallel) {
  std::vector<TableRow> out(cases.size());
  long long n = static_cast<long long>(cases.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long long i = 0; i < n; ++i) {
    try {
      out[i] = table_row_auto(cases[i]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace fh
