#include "foldhecke/eigen_models.hpp"

#include <algorithm>
#include <map>

#include "foldhecke/errors.hpp"

namespace fh {

namespace {

long long triangular(int m) { return static_cast<long long>(m) * (m + 1) / 2; }

CScalar ze(const CScalar& z, long long k) { return z * CScalar(k); }

// Eigenvalues of h^0 for a partition: part l contributes l-1, l-3, ..., 1-l.
std::vector<long long> partition_eigs(const std::vector<int>& parts) {
  std::vector<long long> ev;
  for (int l : parts)
    for (int i = l - 1; i >= 1 - l; i -= 2) ev.push_back(i);
  return ev;
}

bool dominant_chain(const std::vector<CScalar>& x, bool last_nonneg) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!complex_ge(x[i], x[i + 1])) return false;
  return !last_nonneg || x.empty() || complex_ge(x.back());
}

CScalar max_of(const Multiset& X) {
  if (X.empty()) throw ValidationError("not in the image: multiset exhausted");
  return X.back();
}

void remove_one(Multiset& X, const CScalar& v) {
  auto it = std::lower_bound(X.begin(), X.end(), v, complex_less);
  if (it == X.end() || *it != v) throw ValidationError("not in the image: missing eigenvalue " + v.str());
  X.erase(it);
}

std::vector<CScalar> e6_values(const CScalar& a, const CScalar& b, const CScalar& z) {
  CScalar a2b = a + a + b, ab = a + b;
  std::vector<CScalar> base{a2b + ze(z, 2), a2b, a2b - ze(z, 2), ab + ze(z, 2), ab, ab - ze(z, 2),
                            a + ze(z, 2),   a,   a - ze(z, 2),   ze(z, 4),     ze(z, 2), ze(z, 2)};
  std::vector<CScalar> out = base;
  for (auto& v : base) out.push_back(-v);
  for (int i = 0; i < 3; ++i) out.push_back(CScalar(0));
  return out;
}

std::vector<CScalar> e7_values(const CScalar& a, const CScalar& b, const CScalar& c, const CScalar& d,
                               const CScalar& z) {
  auto lin = [&](long long ka, long long kb, long long kc, long long kd) {
    return a * CScalar(ka) + b * CScalar(kb) + c * CScalar(kc) + d * CScalar(kd);
  };
  std::vector<CScalar> centers{lin(1, 2, 3, 2), lin(1, 2, 3, 1), lin(1, 2, 2, 1), lin(1, 1, 2, 1),
                               lin(1, 1, 1, 1), lin(0, 1, 2, 1), lin(0, 1, 1, 1), lin(1, 1, 1, 0),
                               lin(0, 0, 1, 1), lin(0, 1, 1, 0), lin(0, 0, 0, 1), lin(0, 0, 1, 0)};
  std::vector<CScalar> base;
  for (auto& v : centers) {
    base.push_back(v + z);
    base.push_back(v - z);
  }
  base.push_back(ze(z, 3));
  for (int i = 0; i < 3; ++i) base.push_back(z);
  std::vector<CScalar> out = base;
  for (auto& v : base) out.push_back(-v);
  return out;
}

// The part of Y independent of x.
std::vector<CScalar> constant_part(const EigenModel& c, const CScalar& z) {
  std::vector<CScalar> out;
  if (c.tag == "sl") return out;
  if (c.tag == "e6-minuscule") return {ze(z, 4), ze(z, 2), ze(z, 2)};
  if (c.tag == "e7-minuscule") return {ze(z, 3), z, z, z};
  for (long long e : partition_eigs(c.parts)) out.push_back(ze(z, e));
  return out;
}

}  // namespace

Multiset make_multiset(std::vector<CScalar> v) {
  std::sort(v.begin(), v.end(), complex_less);
  return v;
}

std::vector<int> cuspidal_parts(const std::string& tag, int m) {
  std::vector<int> parts;
  if (m < 0) throw ValidationError("m must be non-negative");
  if (tag == "sp") {
    for (int i = 1; i <= m; ++i) parts.push_back(2 * i);
  } else if (tag == "so") {
    for (int i = 1; i <= m; ++i) parts.push_back(2 * i - 1);
  } else if (tag == "so-even-sl2" || tag == "so-odd-sl2") {
    long long t = triangular(m);
    if ((tag == "so-even-sl2") != (t % 2 == 0))
      throw ValidationError(tag + " needs m(m+1)/2 " + (tag == "so-even-sl2" ? "even" : "odd"));
    for (int l = 2 * m - 1; l > 0; l -= 4) parts.push_back(l);
  } else {
    throw ValidationError("no cuspidal partition attached to case " + tag);
  }
  return parts;
}

static void check_parts(const EigenModel& c) {
  int total = 0;
  for (int l : c.parts) {
    if (l <= 0) throw ValidationError("partition parts must be positive");
    total += l;
  }
  bool odd = total % 2 != 0;
  if ((c.tag == "sp" || c.tag == "so-even-sl2") && odd) throw ValidationError(c.tag + " needs an even-dimensional small factor");
  if (c.tag == "so-odd-sl2" && !odd) throw ValidationError("so-odd-sl2 needs an odd-dimensional small factor");
  if (c.tag == "sp") {
    std::map<int, int> mult;
    for (int l : c.parts) ++mult[l];
    for (auto [l, k] : mult)
      if (l % 2 && k % 2) throw ValidationError("odd parts of a symplectic Jordan type need even multiplicity");
  } else {
    std::map<int, int> mult;
    for (int l : c.parts) ++mult[l];
    for (auto [l, k] : mult)
      if (l % 2 == 0 && k % 2) throw ValidationError("even parts of an orthogonal Jordan type need even multiplicity");
  }
}

int model_arity(const EigenModel& c) {
  if (c.tag == "sl") return c.b;
  if (c.tag == "sp" || c.tag == "so" || c.tag == "so-even-sl2" || c.tag == "so-odd-sl2") return c.p;
  if (c.tag == "e6-minuscule") return 2;
  if (c.tag == "e7-minuscule") return 4;
  throw ValidationError("unsupported case tag " + c.tag + " (expected sl, sp, so, so-even-sl2, so-odd-sl2, e6-minuscule or e7-minuscule)");
}

Multiset eigen_multiset(const EigenModel& c, const std::vector<CScalar>& x, const CScalar& z) {
  int k = model_arity(c);
  if (static_cast<int>(x.size()) != k)
    throw ValidationError(c.tag + " expects " + std::to_string(k) + " coordinates, got " + std::to_string(x.size()));
  std::vector<CScalar> out;
  if (c.tag == "sl") {
    if (c.a < 1 || c.b < 1) throw ValidationError("sl needs a, b >= 1");
    CScalar s;
    for (auto& v : x) s += v;
    if (!s.is_zero()) throw ValidationError("sl coordinates must sum to zero");
    if (!dominant_chain(x, false)) throw ValidationError("x is not dominant");
    for (auto& v : x)
      for (int l = 0; l < c.a; ++l) out.push_back(v + ze(z, c.a - 1 - 2 * l));
    return make_multiset(out);
  }
  if (c.tag == "e6-minuscule" || c.tag == "e7-minuscule") {
    for (auto& v : x)
      if (!complex_ge(v)) throw ValidationError("x is not dominant");
    out = c.tag == "e6-minuscule" ? e6_values(x[0], x[1], z) : e7_values(x[0], x[1], x[2], x[3], z);
    return make_multiset(out);
  }
  if (!dominant_chain(x, true)) throw ValidationError("x is not dominant");
  check_parts(c);
  out = constant_part(c, z);
  bool paired = c.tag == "so-even-sl2" || c.tag == "so-odd-sl2";
  for (auto& v : x) {
    if (paired) {
      for (const CScalar& s : {v, -v}) {
        out.push_back(s + z);
        out.push_back(s - z);
      }
    } else {
      out.push_back(v);
      out.push_back(-v);
    }
  }
  return make_multiset(out);
}

std::vector<CScalar> dominant_from_multiset(const EigenModel& c, const Multiset& Y, const CScalar& z) {
  int k = model_arity(c);
  Multiset X = make_multiset(Y);
  for (auto& v : constant_part(c, z)) remove_one(X, v);
  std::vector<CScalar> x;
  if (c.tag == "sl") {
    for (int i = 0; i < k; ++i) {
      CScalar xi = max_of(X) - ze(z, c.a - 1);
      for (int l = 0; l < c.a; ++l) remove_one(X, xi + ze(z, c.a - 1 - 2 * l));
      x.push_back(xi);
    }
  } else if (c.tag == "e6-minuscule") {
    CScalar ma = max_of(X);
    for (long long s : {2, 0, -2}) remove_one(X, ma - ze(z, 2 - s));
    CScalar mb = max_of(X);
    CScalar a = ma - mb;
    x = {a, mb - ze(z, 2) - a};
  } else if (c.tag == "e7-minuscule") {
    std::vector<CScalar> M;
    for (int step = 0; step < 4; ++step) {
      CScalar top = max_of(X);
      M.push_back(top);
      if (step < 3) {
        remove_one(X, top);
        remove_one(X, top - ze(z, 2));
      }
    }
    CScalar d = M[0] - M[1], cc = M[1] - M[2], b = M[2] - M[3];
    CScalar a = M[3] - z - b - cc - cc - d;
    x = {a, b, cc, d};
  } else {
    bool paired = c.tag == "so-even-sl2" || c.tag == "so-odd-sl2";
    for (int i = 0; i < k; ++i) {
      CScalar xi = paired ? max_of(X) - z : max_of(X);
      if (paired) {
        for (const CScalar& s : {xi, -xi}) {
          remove_one(X, s + z);
          remove_one(X, s - z);
        }
      } else {
        remove_one(X, xi);
        remove_one(X, -xi);
      }
      x.push_back(xi);
    }
  }
  Multiset back;
  try {
    back = eigen_multiset(c, x, z);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("not in the image: ") + e.what());
  }
  if (back != make_multiset(Y)) throw ValidationError("not in the image: reconstruction differs");
  return x;
}

}  // namespace fh
