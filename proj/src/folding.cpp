#include "foldhecke/folding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fh {

std::string allowed_folds() {
  return "allowed (type, d): (any simply-laced, 1), (An n>=2, 2), (Dn n>=4, 2), (E6, 2), (D4, 3)";
}

std::vector<int> FoldedRootDatum::standard_tau(const CartanDatum& base, int d) {
  const std::string& lab = base.label();
  char letter = lab.empty() ? '?' : lab[0];
  int n = base.rank();
  std::vector<int> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  if (!base.simply_laced()) throw ValidationError("folding needs a simply-laced type, got " + lab);
  if (d == 1) return tau;
  if (d == 2 && letter == 'A' && n >= 2) {
    for (int i = 0; i < n; ++i) tau[i] = n - 1 - i;
    return tau;
  }
  if (d == 2 && letter == 'D' && n >= 4) {
    std::swap(tau[n - 2], tau[n - 1]);
    return tau;
  }
  if (d == 2 && lab == "E6") {
    tau = {5, 1, 4, 3, 2, 0};
    return tau;
  }
  if (d == 3 && lab == "D4") {
    tau = {2, 1, 3, 0};
    return tau;
  }
  throw ValidationError("incompatible (" + lab + ", d=" + std::to_string(d) + "); " + allowed_folds());
}

FoldedRootDatum FoldedRootDatum::standard(const std::string& type, int d) {
  auto base = CartanDatum::from_type(type);
  return fold(base, standard_tau(base, d));
}

namespace {

int height(const IVec& v) { return static_cast<int>(std::accumulate(v.begin(), v.end(), 0LL)); }

bool nonneg(const IVec& v) {
  for (auto x : v)
    if (x < 0) return false;
  return true;
}

bool rroot_order(const RestrictedRoot& x, const RestrictedRoot& y) {
  bool px = nonneg(x.beta), py = nonneg(y.beta);
  if (px != py) return px;
  int hx = std::abs(height(x.beta)), hy = std::abs(height(y.beta));
  if (hx != hy) return hx < hy;
  return px ? x.beta > y.beta : x.beta < y.beta;
}

}  // namespace

FoldedRootDatum FoldedRootDatum::fold(const CartanDatum& base, const std::vector<int>& tau) {
  int np = base.rank();
  if (!base.simply_laced()) throw ValidationError("folding needs a simply-laced datum");
  if (static_cast<int>(tau.size()) != np) throw ValidationError("tau has the wrong size");
  {
    std::vector<int> s = tau;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < np; ++i)
      if (s[i] != i) throw ValidationError("tau is not a permutation of the nodes");
  }
  const IMat& A = base.cartan();
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      if (A[tau[i]][tau[j]] != A[i][j]) throw ValidationError("tau is not a graph automorphism");

  FoldedRootDatum f;
  f.base_ = base;
  f.tau_ = tau;
  f.orbit_of_.assign(np, -1);
  for (int i = 0; i < np; ++i) {
    if (f.orbit_of_[i] >= 0) continue;
    std::vector<int> orb;
    for (int j = i; f.orbit_of_[j] < 0; j = tau[j]) {
      f.orbit_of_[j] = static_cast<int>(f.orbits_.size());
      orb.push_back(j);
    }
    f.orbits_.push_back(orb);
  }
  int d = 1;
  for (auto& o : f.orbits_) d = std::lcm(d, static_cast<int>(o.size()));
  f.d_ = d;
  f.label_ = base.label() + (d == 1 ? "" : "^(" + std::to_string(d) + ")");
  int r = f.r();

  auto apply_tau = [&](const IVec& a) {
    IVec b(np);
    for (int i = 0; i < np; ++i) b[tau[i]] = a[i];
    return b;
  };
  auto restrict_root = [&](const IVec& a) {
    IVec b(r, 0);
    for (int i = 0; i < np; ++i) b[f.orbit_of_[i]] += a[i];
    return b;
  };

  // root orbits and their restrictions
  std::vector<bool> seen(base.roots().size(), false);
  std::map<IVec, RestrictedRoot> by_beta;
  for (std::size_t k = 0; k < base.roots().size(); ++k) {
    if (seen[k]) continue;
    RestrictedRoot rr;
    IVec cur = base.roots()[k];
    while (true) {
      int idx = *base.root_index(cur);
      if (seen[idx]) break;
      seen[idx] = true;
      rr.orbit.push_back(idx);
      cur = apply_tau(cur);
    }
    rr.beta = restrict_root(base.roots()[k]);
    rr.dprime = static_cast<int>(rr.orbit.size());
    if (by_beta.count(rr.beta)) throw InvariantError("two tau-orbits restrict to the same character");
    by_beta[rr.beta] = rr;
  }
  for (auto& [beta, rr] : by_beta) {
    IVec twice = beta, half = beta;
    bool even = true;
    for (int i = 0; i < r; ++i) {
      twice[i] *= 2;
      if (half[i] % 2) even = false;
      half[i] /= 2;
    }
    rr.dsec = (by_beta.count(twice) || (even && by_beta.count(half))) ? 2 : 1;
    rr.d = rr.dprime * rr.dsec;
    QVec h(np, Rat(0));
    for (int idx : rr.orbit)
      for (int i = 0; i < np; ++i) h[i] += Rat(base.roots()[idx][i]);
    if (rr.d == 4) {
      for (auto& x : h) x *= Rat(2);
    }
    rr.coroot = h;
  }
  for (auto& [beta, rr] : by_beta) f.rroots_.push_back(rr);
  std::sort(f.rroots_.begin(), f.rroots_.end(), rroot_order);
  for (std::size_t k = 0; k < f.rroots_.size(); ++k) f.rindex_[f.rroots_[k].beta] = static_cast<int>(k);
  for (auto& rr : f.rroots_)
    if (f.eval(rr.beta, rr.coroot) != Rat(2)) throw InvariantError("restricted coroot does not pair to 2");

  // simple nodes
  std::vector<int> dsimple(r);
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = 1;
    dsimple[i] = f.rroots_[f.rroot_index(e)].d;
  }
  // reduced system R = {d_beta beta} in gamma coordinates, h_gamma = 'h_beta / d_beta
  std::map<IVec, QVec> gamma_coroot;
  for (auto& rr : f.rroots_) {
    IVec g(r);
    for (int i = 0; i < r; ++i) {
      Rat x = Rat(rr.d * rr.beta[i]) / Rat(dsimple[i]);
      if (!x.is_integer()) throw InvariantError("d_beta beta is not integral on the gamma basis");
      g[i] = x.to_int();
    }
    QVec hg;
    for (auto& x : rr.coroot) hg.push_back(x / Rat(rr.d));
    auto it = gamma_coroot.find(g);
    if (it != gamma_coroot.end() && it->second != hg) throw InvariantError("inconsistent coroots on R");
    gamma_coroot[g] = hg;
  }
  IMat ar(r, IVec(r));
  for (int i = 0; i < r; ++i) {
    IVec ei(r, 0);
    ei[i] = 1;
    QVec hi;
    for (auto& x : f.rroots_[f.rroot_index(ei)].coroot) hi.push_back(x / Rat(dsimple[i]));
    for (int j = 0; j < r; ++j) {
      IVec ej(r, 0);
      ej[j] = 1;
      ar[i][j] = (Rat(dsimple[j]) * f.eval(ej, hi)).to_int();
    }
  }
  f.reduced_ = CartanDatum::from_matrix(ar, "R(" + f.label_ + ")");
  {
    std::set<IVec> from_cartan(f.reduced_.roots().begin(), f.reduced_.roots().end()), from_fold;
    for (auto& [g, h] : gamma_coroot) from_fold.insert(g);
    if (from_cartan != from_fold) throw InvariantError("{d_beta beta} is not the root system of its simple roots");
  }

  IVec theta = f.reduced_.highest_root();
  IVec beta0(r);
  for (int i = 0; i < r; ++i) {
    Rat x = Rat(-theta[i] * dsimple[i]) / Rat(d);
    if (!x.is_integer()) throw InvariantError("gamma_0 is not d times a restricted root");
    beta0[i] = x.to_int();
  }
  int i0 = f.rroot_index(beta0);
  if (i0 < 0 || f.rroots_[i0].d != d) throw InvariantError("gamma_0 = d beta_0 fails");

  f.beta_nodes_.push_back(beta0);
  f.marks_.push_back(1);
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = 1;
    f.beta_nodes_.push_back(e);
    f.marks_.push_back(theta[i]);
  }
  for (auto& b : f.beta_nodes_) {
    auto& rr = f.rroots_[f.rroot_index(b)];
    f.d_nodes_.push_back(rr.d);
    f.dp_nodes_.push_back(rr.dprime);
    f.ds_nodes_.push_back(rr.dsec);
    f.node_coroots_.push_back(rr.coroot);
  }
  int N = r + 1;
  f.a_.assign(N, IVec(N));
  f.a_twisted_.assign(N, IVec(N));
  for (int i1 = 0; i1 < N; ++i1) {
    QVec h;
    for (auto& x : f.node_coroots_[i1]) h.push_back(x / Rat(f.d_nodes_[i1]));
    for (int i2 = 0; i2 < N; ++i2) {
      f.a_[i1][i2] = (Rat(f.d_nodes_[i2]) * f.eval(f.beta_nodes_[i2], h)).to_int();
      f.a_twisted_[i1][i2] = f.eval(f.beta_nodes_[i2], f.node_coroots_[i1]).to_int();
    }
  }
  for (int i = 0; i < N; ++i) {
    long long s = 0;
    for (int j = 0; j < N; ++j) s += f.a_[i][j] * f.marks_[j];
    if (s != 0) throw InvariantError("marks are not a null vector of the affine Cartan matrix");
  }
  return f;
}

int FoldedRootDatum::rroot_index(const IVec& beta) const {
  auto it = rindex_.find(beta);
  return it == rindex_.end() ? -1 : it->second;
}

bool FoldedRootDatum::non_reduced() const {
  for (auto& rr : rroots_)
    if (rr.dsec == 2) return true;
  return false;
}

Rat FoldedRootDatum::eval(const IVec& beta, const QVec& h) const {
  const IMat& A = base_.cartan();
  Rat s(0);
  for (int o = 0; o < r(); ++o) {
    if (!beta[o]) continue;
    int ip = orbits_[o][0];
    Rat v(0);
    for (std::size_t j = 0; j < h.size(); ++j)
      if (!h[j].is_zero() && A[j][ip]) v += h[j] * Rat(A[j][ip]);
    s += Rat(beta[o]) * v;
  }
  return s;
}

Rat FoldedRootDatum::eval(const QVec& beta, const QVec& h) const {
  const IMat& A = base_.cartan();
  Rat s(0);
  for (int o = 0; o < r(); ++o) {
    if (beta[o].is_zero()) continue;
    int ip = orbits_[o][0];
    Rat v(0);
    for (std::size_t j = 0; j < h.size(); ++j)
      if (!h[j].is_zero() && A[j][ip]) v += h[j] * Rat(A[j][ip]);
    s += beta[o] * v;
  }
  return s;
}

Rat FoldedRootDatum::eval_c(const IVec& beta, const std::vector<Rat>& c) const {
  Rat s(0);
  for (int k = 1; k <= r(); ++k)
    if (beta[k - 1]) s += Rat(beta[k - 1]) * c[k] / Rat(d_nodes_[k]);
  return s;
}

const QVec& FoldedRootDatum::coroot_of(const IVec& beta) const {
  int k = rroot_index(beta);
  if (k < 0) throw ValidationError("coroot_of: not a restricted root");
  return rroots_[k].coroot;
}

Rat FoldedRootDatum::lattice_index() const {
  int np = base_.rank();
  QMat w(np, QVec(r()));
  for (int j = 1; j <= r(); ++j)
    for (int i = 0; i < np; ++i) w[i][j - 1] = node_coroots_[j][i] / Rat(d_nodes_[j]);
  QMat m;
  for (int i = 1; i <= r(); ++i) {
    QVec v;
    for (auto& x : node_coroots_[i]) v.push_back(x / Rat(ds_nodes_[i]));
    auto sol = solve(w, v);
    if (!sol) throw InvariantError("'Y basis vector outside 𝔱");
    for (auto& x : *sol)
      if (!x.is_integer()) throw InvariantError("'Y is not contained in Y");
    m.push_back(*sol);
  }
  Rat prod(1);
  auto inv = smith_invariants(m);
  if (static_cast<int>(inv.size()) != r()) throw InvariantError("'Y has lower rank than Y");
  for (auto& x : inv) prod *= x;
  return prod;
}

bool FoldedRootDatum::psi_check() const {
  int np = base_.rank();
  std::map<IVec, int> owner;
  for (std::size_t k = 0; k < rroots_.size(); ++k)
    for (int idx : rroots_[k].orbit) {
      IVec psi(np, 0), cur = base_.roots()[idx];
      for (int m = 0; m < d_; ++m) {
        for (int i = 0; i < np; ++i) psi[i] += cur[i];
        IVec nxt(np);
        for (int i = 0; i < np; ++i) nxt[tau_[i]] = cur[i];
        cur = nxt;
      }
      auto it = owner.find(psi);
      if (it != owner.end() && it->second != static_cast<int>(k)) return false;
      owner[psi] = static_cast<int>(k);
    }
  return true;
}

nlohmann::json FoldedRootDatum::to_json() const {
  nlohmann::json j;
  j["label"] = label_;
  j["base"] = base_.to_json();
  j["d"] = d_;
  j["tau"] = tau_;
  j["orbits"] = orbits_;
  j["reduced_type"] = type_string(classify_cartan(reduced_.cartan()));
  nlohmann::json roots = nlohmann::json::array();
  for (auto& rr : rroots_) {
    std::vector<std::string> h;
    for (auto& x : rr.coroot) h.push_back(x.str());
    roots.push_back({{"beta", rr.beta}, {"d_prime", rr.dprime}, {"d_second", rr.dsec}, {"d", rr.d}, {"coroot", h}});
  }
  j["restricted_roots"] = roots;
  j["nodes"] = nlohmann::json::array();
  for (int i = 0; i < num_nodes(); ++i)
    j["nodes"].push_back({{"index", i},
                          {"beta", beta_nodes_[i]},
                          {"d", d_nodes_[i]},
                          {"d_prime", dp_nodes_[i]},
                          {"d_second", ds_nodes_[i]},
                          {"mark", marks_[i]}});
  j["a"] = a_;
  j["a_twisted"] = a_twisted_;
  return j;
}

}  // namespace fh
