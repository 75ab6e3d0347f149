#pragma once

#include <string>

#include "foldhecke/rat.hpp"

namespace fh {

// Gaussian rational re + i*im.
struct CScalar {
  Rat re, im;

  CScalar() = default;
  CScalar(Rat r) : re(std::move(r)) {}  // NOLINT: real embedding
  CScalar(long long r) : re(r) {}       // NOLINT
  CScalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CScalar parse(const std::string& s);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  std::string str() const;

  CScalar operator-() const { return {-re, -im}; }
  friend CScalar operator+(const CScalar& a, const CScalar& b) { return {a.re + b.re, a.im + b.im}; }
  friend CScalar operator-(const CScalar& a, const CScalar& b) { return {a.re - b.re, a.im - b.im}; }
  friend CScalar operator*(const CScalar& a, const CScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CScalar operator/(const CScalar& a, const CScalar& b);
  CScalar& operator+=(const CScalar& o) { return *this = *this + o; }
  CScalar& operator-=(const CScalar& o) { return *this = *this - o; }
  CScalar& operator*=(const CScalar& o) { return *this = *this * o; }
  friend bool operator==(const CScalar& a, const CScalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CScalar& a, const CScalar& b) { return !(a == b); }
};

// z >= 0: re > 0, or re = 0 and im >= 0.
bool complex_ge(const CScalar& z);
// z > 0: re > 0, or re = 0 and im > 0.
bool complex_gt(const CScalar& z);
// a >= b in the complex order.
inline bool complex_ge(const CScalar& a, const CScalar& b) { return complex_ge(a - b); }
// Strict weak ordering consistent with the complex order (lexicographic on re, im).
bool complex_less(const CScalar& a, const CScalar& b);

// Element a + b*w of Q(zeta_d), w a primitive cube root of unity, w^2 = -1 - w.
// For d in {1, 2} the w-coordinate stays zero.
struct CycScalar {
  Rat a, b;

  CycScalar() = default;
  CycScalar(Rat x) : a(std::move(x)) {}  // NOLINT
  CycScalar(long long x) : a(x) {}       // NOLINT
  CycScalar(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}

  // zeta_d^j for d in {1,2,3}.
  static CycScalar root_of_unity(int d, int j);

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  CycScalar conj() const { return {a - b, -b}; }
  Rat norm() const { return a * a - a * b + b * b; }
  CycScalar inverse() const;
  std::string str() const;

  CycScalar operator-() const { return {-a, -b}; }
  friend CycScalar operator+(const CycScalar& x, const CycScalar& y) { return {x.a + y.a, x.b + y.b}; }
  friend CycScalar operator-(const CycScalar& x, const CycScalar& y) { return {x.a - y.a, x.b - y.b}; }
  friend CycScalar operator*(const CycScalar& x, const CycScalar& y) {
    if (x.b.is_zero() && y.b.is_zero()) return {x.a * y.a};
    Rat bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
  }
  friend CycScalar operator/(const CycScalar& x, const CycScalar& y) { return x * y.inverse(); }
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  friend bool operator==(const CycScalar& x, const CycScalar& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const CycScalar& x, const CycScalar& y) { return !(x == y); }
};

}  // namespace fh
