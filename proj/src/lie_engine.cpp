#include "foldhecke/lie_engine.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <omp.h>

#include "foldhecke/errors.hpp"

namespace fh {

namespace {

void check_engine_type(const CartanDatum& base) {
  const std::string& lab = base.label();
  char letter = lab.empty() ? '?' : lab[0];
  int n = base.rank();
  bool ok = (letter == 'A' && n <= 12) || (letter == 'D' && n <= 12) || lab == "E6";
  if (!ok) throw ValidationError("Chevalley engine supports A_n and D_n (n <= 12) and E6, got " + lab);
}

// Exponent of the bimultiplicative sign cocycle on the root lattice.
int cocycle_parity(const IMat& A, const IVec& a, const IVec& b) {
  long long s = 0;
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    s += a[i] * b[i];
    for (int j = i + 1; j < n; ++j)
      if (A[i][j] == -1) s += a[i] * b[j];
  }
  return static_cast<int>(((s % 2) + 2) % 2);
}

bool is_positive(const IVec& r) {
  for (auto x : r)
    if (x != 0) return x > 0;
  return false;
}

IVec add(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

bool is_zero_root(const IVec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

IVec neg(const IVec& a) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

Rat random_coef(std::mt19937_64& rng) {
  long long num = static_cast<long long>(rng() % 9) + 1;
  long long den = static_cast<long long>(rng() % 4) + 1;
  if (rng() & 1) num = -num;
  return Rat(num, den);
}

void axpy(Elem& y, const CycScalar& a, const Elem& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(const std::string& type, int d)
    : ChevalleyAlgebra(FoldedRootDatum::standard(type, d)) {}

ChevalleyAlgebra::ChevalleyAlgebra(FoldedRootDatum folded) : folded_(std::move(folded)), alcove_(folded_) {
  check_engine_type(base());
  dim_ = rank() + static_cast<int>(base().roots().size());
  build_table();
  build_tau();
  if (!check_tau_automorphism()) throw InvariantError("Ad(tau) is not an algebra automorphism");
  build_pieces();
}

std::string ChevalleyAlgebra::basis_label(int p) const {
  if (p < rank()) return "h" + std::to_string(p + 1);
  const IVec& r = base().roots()[p - rank()];
  std::string s = "x(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

void ChevalleyAlgebra::build_table() {
  const IMat& A = base().cartan();
  const auto& roots = base().roots();
  int n = rank(), nr = static_cast<int>(roots.size());
  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  auto sgn = [](const IVec& r) { return is_positive(r) ? 1 : -1; };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < nr; ++k) {
      long long v = 0;
      for (int j = 0; j < n; ++j) v += roots[k][j] * A[i][j];
      if (!v) continue;
      table_[i * dim_ + n + k].push_back({n + k, static_cast<int>(v)});
      table_[(n + k) * dim_ + i].push_back({n + k, static_cast<int>(-v)});
    }
  for (int k = 0; k < nr; ++k)
    for (int l = 0; l < nr; ++l) {
      IVec s = add(roots[k], roots[l]);
      auto& cell = table_[(n + k) * dim_ + n + l];
      if (is_zero_root(s)) {
        for (int j = 0; j < n; ++j)
          if (roots[k][j]) cell.push_back({j, static_cast<int>(roots[k][j])});
        continue;
      }
      auto idx = base().root_index(s);
      if (!idx) continue;
      int eps = cocycle_parity(A, roots[k], roots[l]) ? -1 : 1;
      cell.push_back({n + *idx, eps * sgn(roots[k]) * sgn(roots[l]) * sgn(s)});
    }
}

void ChevalleyAlgebra::build_tau() {
  const auto& tau = folded_.tau();
  const auto& roots = base().roots();
  int n = rank(), nr = static_cast<int>(roots.size());
  tau_perm_.assign(dim_, 0);
  tau_coef_.assign(dim_, 0);
  for (int i = 0; i < n; ++i) {
    tau_perm_[i] = tau[i];
    tau_coef_[i] = 1;
  }
  auto image = [&](const IVec& r) {
    IVec t(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) t[tau[i]] = r[i];
    return *base().root_index(t);
  };
  for (int k = 0; k < nr; ++k) tau_perm_[n + k] = n + image(roots[k]);
  auto coef_of = [&](int p, int q) {
    const auto& c = bracket_basis(p, q);
    return c.empty() ? 0 : c[0].second;
  };
  // roots() lists positives by height, so predecessors are already fixed.
  int np = base().num_positive();
  for (int half = 0; half < 2; ++half) {
    for (int k0 = 0; k0 < np; ++k0) {
      int k = k0 + half * np;
      const IVec& a = roots[k];
      int ht = 0;
      for (auto x : a) ht += static_cast<int>(x < 0 ? -x : x);
      if (ht == 1) {
        tau_coef_[n + k] = 1;
        continue;
      }
      bool done = false;
      for (int i = 0; i < n && !done; ++i) {
        IVec simple(n, 0);
        simple[i] = half ? -1 : 1;
        IVec g = add(a, neg(simple));
        auto gi = base().root_index(g);
        if (!gi) continue;
        int si = *base().root_index(simple);
        int num = coef_of(tau_perm_[n + *gi], tau_perm_[n + si]);
        int den = coef_of(n + *gi, n + si);
        if (!num || !den) throw InvariantError("missing structure constant during sign repair");
        tau_coef_[n + k] = tau_coef_[n + *gi] * num / den;
        done = true;
      }
      if (!done) throw InvariantError("root without a simple predecessor");
    }
  }
}

Elem ChevalleyAlgebra::unit(int p) const {
  Elem e = zero();
  e[p] = CycScalar(1);
  return e;
}

Elem ChevalleyAlgebra::bracket(const Elem& u, const Elem& v) const {
  Elem out = zero();
  std::vector<int> nu, nv;
  for (int p = 0; p < dim_; ++p) {
    if (!u[p].is_zero()) nu.push_back(p);
    if (!v[p].is_zero()) nv.push_back(p);
  }
  for (int p : nu)
    for (int q : nv) {
      const auto& c = bracket_basis(p, q);
      if (c.empty()) continue;
      CycScalar uv = u[p] * v[q];
      for (auto [k, coef] : c) out[k] += uv * CycScalar(coef);
    }
  return out;
}

Elem ChevalleyAlgebra::ad_tau(const Elem& u) const {
  Elem out = zero();
  for (int p = 0; p < dim_; ++p)
    if (!u[p].is_zero()) out[tau_perm_[p]] += u[p] * CycScalar(tau_coef_[p]);
  return out;
}

bool ChevalleyAlgebra::check_antisymmetry() const {
  for (int p = 0; p < dim_; ++p)
    for (int q = 0; q < dim_; ++q) {
      auto a = bracket_basis(p, q), b = bracket_basis(q, p);
      for (auto& x : b) x.second = -x.second;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
  return true;
}

namespace {

// Jacobi sum on the basis triple (p, q, r) using integer scratch of size dim.
bool jacobi_triple(const ChevalleyAlgebra& g, int p, int q, int r, std::vector<long long>& acc,
                   std::vector<int>& touched) {
  auto term = [&](int a, int b, int c) {
    for (auto [s, x] : g.bracket_basis(a, b))
      for (auto [t, y] : g.bracket_basis(s, c)) {
        if (acc[t] == 0) touched.push_back(t);
        acc[t] += static_cast<long long>(x) * y;
      }
  };
  term(p, q, r);
  term(q, r, p);
  term(r, p, q);
  bool ok = true;
  for (int t : touched) {
    if (acc[t] != 0) ok = false;
    acc[t] = 0;
  }
  touched.clear();
  return ok;
}

}  // namespace

bool ChevalleyAlgebra::check_jacobi() const {
  int bad = 0;
#pragma omp parallel reduction(+ : bad)
  {
    std::vector<long long> acc(dim_, 0);
    std::vector<int> touched;
#pragma omp for schedule(dynamic, 4)
    for (int p = 0; p < dim_; ++p)
      for (int q = p + 1; q < dim_; ++q)
        for (int r = q + 1; r < dim_; ++r)
          if (!jacobi_triple(*this, p, q, r, acc, touched)) ++bad;
  }
  return bad == 0;
}

bool ChevalleyAlgebra::check_jacobi_serial() const {
  std::vector<long long> acc(dim_, 0);
  std::vector<int> touched;
  for (int p = 0; p < dim_; ++p)
    for (int q = p + 1; q < dim_; ++q)
      for (int r = q + 1; r < dim_; ++r)
        if (!jacobi_triple(*this, p, q, r, acc, touched)) return false;
  return true;
}

bool ChevalleyAlgebra::check_tau_automorphism() const {
  for (int p = 0; p < dim_; ++p)
    for (int q = 0; q < dim_; ++q) {
      Elem lhs = ad_tau(bracket(unit(p), unit(q)));
      Elem rhs = bracket(ad_tau(unit(p)), ad_tau(unit(q)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool ChevalleyAlgebra::check_tau_order() const {
  for (int p = 0; p < dim_; ++p) {
    Elem u = unit(p);
    for (int k = 0; k < d(); ++k) u = ad_tau(u);
    if (u != unit(p)) return false;
  }
  return true;
}

void ChevalleyAlgebra::build_pieces() {
  const auto& rr = folded_.rroots();
  int n = rank(), dd = d();
  blocks_.clear();
  pieces_.clear();
  piece_index_.clear();
  auto make_block = [&](const std::vector<int>& positions, int root, const IVec& beta) {
    int m = static_cast<int>(positions.size());
    Mat<CycScalar> M = zeros<CycScalar>(m, m);
    for (int c = 0; c < m; ++c) {
      int img = tau_perm_[positions[c]];
      auto it = std::find(positions.begin(), positions.end(), img);
      if (it == positions.end()) throw InvariantError("tau does not preserve a root block");
      M[it - positions.begin()][c] = CycScalar(tau_coef_[positions[c]]);
    }
    Block blk;
    blk.positions = positions;
    Mat<CycScalar> cols;
    for (int j = 0; j < dd; ++j) {
      Mat<CycScalar> shifted = M;
      CycScalar z = CycScalar::root_of_unity(dd, j);
      for (int i = 0; i < m; ++i) shifted[i][i] -= z;
      auto ns = nullspace(shifted, m);
      if (ns.empty()) continue;
      GradedPiece piece;
      piece.beta = beta;
      piece.root = root;
      piece.j = j;
      int pidx = static_cast<int>(pieces_.size());
      for (std::size_t b = 0; b < ns.size(); ++b) {
        Elem v = zero();
        for (int i = 0; i < m; ++i) v[positions[i]] = ns[b][i];
        piece.basis.push_back(v);
        cols.push_back(ns[b]);
        blk.columns.push_back({pidx, static_cast<int>(b)});
      }
      piece_index_[{root, j}] = pidx;
      pieces_.push_back(std::move(piece));
    }
    if (static_cast<int>(cols.size()) != m) throw InvariantError("Ad(tau) is not diagonalizable on a block");
    blk.inv = inverse(transpose(cols));
    blocks_.push_back(std::move(blk));
  };
  std::vector<int> cart(n);
  for (int i = 0; i < n; ++i) cart[i] = i;
  make_block(cart, -1, IVec(folded_.r(), 0));
  for (int k = 0; k < static_cast<int>(rr.size()); ++k) {
    std::vector<int> pos;
    for (int a : rr[k].orbit) pos.push_back(n + a);
    make_block(pos, k, rr[k].beta);
  }
}

int ChevalleyAlgebra::piece_dim(int root, int j) const {
  auto it = piece_index_.find({root, j});
  return it == piece_index_.end() ? 0 : static_cast<int>(pieces_[it->second].basis.size());
}

int ChevalleyAlgebra::cartan_piece() const { return piece_index_.at({-1, 0}); }

QVec ChevalleyAlgebra::cartan_coords(const Elem& h) const {
  QVec q(rank());
  for (int i = 0; i < rank(); ++i) {
    if (!h[i].b.is_zero()) throw InvariantError("Cartan element with irrational coordinates");
    q[i] = h[i].a;
  }
  for (int p = rank(); p < dim_; ++p)
    if (!h[p].is_zero()) throw InvariantError("element is not in the Cartan subalgebra");
  return q;
}

bool ChevalleyAlgebra::check_pieces() const {
  std::size_t total = 0;
  const auto& torus = pieces_[cartan_piece()].basis;
  for (const auto& piece : pieces_) {
    total += piece.basis.size();
    CycScalar z = CycScalar::root_of_unity(d(), piece.j);
    for (const auto& v : piece.basis) {
      Elem tv = ad_tau(v), zv = v;
      for (auto& x : zv) x = x * z;
      if (tv != zv) return false;
      for (const auto& t : torus) {
        Rat ev = folded_.eval(piece.beta, cartan_coords(t));
        Elem lhs = bracket(t, v), rhs = v;
        for (auto& x : rhs) x = x * CycScalar(ev);
        if (lhs != rhs) return false;
      }
    }
  }
  return static_cast<int>(total) == dim_;
}

Elem ChevalleyAlgebra::project(const Elem& w, const std::vector<bool>& keep) const {
  Elem out = zero();
  for (const auto& blk : blocks_) {
    Vec<CycScalar> local;
    bool any = false;
    for (int p : blk.positions) {
      local.push_back(w[p]);
      any = any || !w[p].is_zero();
    }
    if (!any) continue;
    auto c = matvec(blk.inv, local);
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto [pidx, b] = blk.columns[i];
      if (keep[pidx]) axpy(out, c[i], pieces_[pidx].basis[b]);
    }
  }
  return out;
}

std::vector<int> ChevalleyAlgebra::host_pieces(const std::vector<int>& J) const {
  std::vector<int> out{cartan_piece()};
  for (int p = 0; p < static_cast<int>(pieces_.size()); ++p) {
    if (pieces_[p].root < 0) continue;
    if (alcove_.in_span(pieces_[p].beta, pieces_[p].j, J)) out.push_back(p);
  }
  return out;
}

std::map<IVec, int> ChevalleyAlgebra::fixed_root_multiset(const AlcovePoint& x) const {
  std::map<IVec, int> out;
  for (const auto& piece : pieces_) {
    if (piece.root < 0) continue;
    CScalar v = alcove_.beta_at(piece.beta, x);
    if (!v.im.is_zero()) continue;
    Rat s = v.re + Rat(piece.j, d());
    if (s.is_integer()) out[piece.beta] += static_cast<int>(piece.basis.size());
  }
  return out;
}

Sl2Triple ChevalleyAlgebra::distinguished_nilpotent(const std::vector<int>& J, const std::vector<int>& weights,
                                                    uint64_t seed) const {
  Sl2Triple t;
  t.J = J;
  t.e = t.h = t.f = zero();
  if (J.size() != weights.size()) throw ValidationError("one weight per node of J is required");
  for (int w : weights)
    if (w != 0 && w != 2) throw ValidationError("weighted Dynkin diagram entries must be 0 or 2");
  if (J.empty()) return t;

  // h = sum x_i 'h_{beta_i} with beta_{i2}(h) = weight of i2.
  const IMat& at = folded_.a_twisted();
  int m = static_cast<int>(J.size());
  QMat sys = zeros<Rat>(m, m);
  QVec rhs(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) sys[a][b] = Rat(at[J[b]][J[a]]);
    rhs[a] = Rat(weights[a]);
  }
  auto x = solve(sys, rhs);
  if (!x) throw ValidationError("weights do not determine an element of 𝔱");
  QVec h(rank(), Rat(0));
  for (int b = 0; b < m; ++b)
    for (int i = 0; i < rank(); ++i) h[i] += (*x)[b] * folded_.node_coroots()[J[b]][i];
  for (int a = 0; a < m; ++a)
    if (folded_.eval(folded_.beta_nodes()[J[a]], h) != Rat(weights[a]))
      throw InvariantError("h does not realize the weighted Dynkin diagram");
  for (int i = 0; i < rank(); ++i) t.h[i] = CycScalar(h[i]);

  std::vector<Elem> g0, g2, gm2;
  for (int p : host_pieces(J)) {
    const auto& piece = pieces_[p];
    Rat ev = piece.root < 0 ? Rat(0) : folded_.eval(piece.beta, h);
    auto& dst = ev == Rat(0) ? g0 : ev == Rat(2) ? g2 : ev == Rat(-2) ? gm2 : g0;
    if (ev != Rat(0) && ev != Rat(2) && ev != Rat(-2)) continue;
    for (const auto& v : piece.basis) dst.push_back(v);
  }
  // Distinguished in the derived algebra: dim g(0) minus the center equals dim g(2).
  std::size_t center = static_cast<std::size_t>(folded_.r()) - J.size();
  if (g2.empty() || g0.size() - center != g2.size()) throw ValidationError("e not distinguished for these weights");

  std::mt19937_64 rng(seed);
  bool found = false;
  for (int attempt = 0; attempt < 20 && !found; ++attempt) {
    Elem e = zero();
    for (const auto& v : g2) axpy(e, CycScalar(random_coef(rng)), v);
    Mat<CycScalar> rows;
    for (const auto& u : g0) rows.push_back(bracket(u, e));
    if (fh::rank(rows) == g2.size()) {
      t.e = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("e not distinguished for these weights");

  Mat<CycScalar> cols = zeros<CycScalar>(dim_, gm2.size());
  for (std::size_t c = 0; c < gm2.size(); ++c) {
    Elem b = bracket(t.e, gm2[c]);
    for (int i = 0; i < dim_; ++i) cols[i][c] = b[i];
  }
  auto y = solve(cols, t.h);
  if (!y) throw ValidationError("no f completes e and h to an sl2-triple");
  for (std::size_t c = 0; c < gm2.size(); ++c) axpy(t.f, (*y)[c], gm2[c]);

  auto scaled = [](Elem v, long long s) {
    for (auto& c : v) c = c * CycScalar(s);
    return v;
  };
  if (bracket(t.h, t.e) != scaled(t.e, 2) || bracket(t.h, t.f) != scaled(t.f, -2) || bracket(t.e, t.f) != t.h)
    throw InvariantError("sl2 relations fail");
  return t;
}

int ChevalleyAlgebra::u_bar(const std::vector<int>& J, int k, const Sl2Triple& triple) const {
  int N = folded_.num_nodes();
  if (k < 0 || k >= N || std::count(J.begin(), J.end(), k)) throw ValidationError("k must lie in I - J");
  std::vector<int> Jk = J;
  Jk.push_back(k);
  std::sort(Jk.begin(), Jk.end());
  if (static_cast<int>(Jk.size()) >= N) throw ValidationError("J ∪ {k} must be a proper subset of I");
  std::vector<bool> in_small(pieces_.size(), false), in_big(pieces_.size(), false), quot(pieces_.size(), false);
  for (int p : host_pieces(J)) in_small[p] = true;
  for (int p : host_pieces(Jk)) in_big[p] = true;
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    if (in_small[p] && !in_big[p]) throw InvariantError("g_J is not contained in g_{J∪k}");
    quot[p] = in_big[p] && !in_small[p];
  }
  int m = 0;
  bool any = false;
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    if (!quot[p]) continue;
    for (const auto& v : pieces_[p].basis) {
      any = true;
      Elem w = v;
      int steps = 0;
      while (!is_zero_vec(w)) {
        Elem b = bracket(triple.e, w);
        if (project(b, in_big) != b) throw InvariantError("quotient not ad(e)-stable");
        w = project(b, quot);
        if (++steps > dim_) throw InvariantError("ad(e) is not nilpotent on the quotient");
      }
      m = std::max(m, steps);
    }
  }
  if (!any) throw InvariantError("g_{J∪k} / g_J is zero");
  return m + 1;
}

nlohmann::json ChevalleyAlgebra::dump() const {
  nlohmann::json j;
  j["type"] = base().label();
  j["d"] = d();
  j["dim"] = dim_;
  j["cartan"] = base().cartan();
  j["tau"] = folded_.tau();
  std::vector<std::string> labels;
  for (int p = 0; p < dim_; ++p) labels.push_back(basis_label(p));
  j["basis"] = labels;
  j["roots"] = base().roots();
  auto triples = nlohmann::json::array();
  for (int p = 0; p < dim_; ++p)
    for (int q = p + 1; q < dim_; ++q)
      for (auto [k, c] : bracket_basis(p, q)) triples.push_back({p, q, k, {std::to_string(c), "0"}});
  j["structure_constants"] = triples;
  auto tau_j = nlohmann::json::array();
  for (int p = 0; p < dim_; ++p) tau_j.push_back({p, tau_perm_[p], tau_coef_[p]});
  j["ad_tau"] = tau_j;
  auto pieces = nlohmann::json::array();
  for (const auto& piece : pieces_) pieces.push_back({{"beta", piece.beta}, {"j", piece.j}, {"dim", piece.basis.size()}});
  j["graded_pieces"] = pieces;
  return j;
}

std::vector<int> wdd_from_partition(char letter, int rank, const std::vector<int>& partition) {
  std::vector<long long> ev;
  int total = 0;
  for (int part : partition) {
    if (part <= 0) throw ValidationError("partition parts must be positive");
    total += part;
    for (int i = part - 1; i >= -(part - 1); i -= 2) ev.push_back(i);
  }
  int expect = letter == 'B' ? 2 * rank + 1 : 2 * rank;
  if ((letter != 'B' && letter != 'C' && letter != 'D') || total != expect)
    throw ValidationError("partition does not match the natural representation");
  std::sort(ev.rbegin(), ev.rend());
  std::vector<int> w;
  for (int i = 0; i + 1 < rank; ++i) w.push_back(static_cast<int>(ev[i] - ev[i + 1]));
  long long last = ev[rank - 1];
  if (letter == 'B') w.push_back(static_cast<int>(last));
  if (letter == 'C') w.push_back(static_cast<int>(2 * last));
  if (letter == 'D') {
    if (rank < 2) throw ValidationError("D needs rank >= 2");
    w.push_back(static_cast<int>(ev[rank - 2] + last));
  }
  return w;
}

}  // namespace fh
