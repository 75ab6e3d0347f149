#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace fh {

// Exact rational. Values whose reduced numerator and denominator fit in
// int64 stay inline; anything larger lives in an immutable shared mpq_class.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n) {}  // NOLINT: implicit by intent for literals
  Rat(long long n, long long d);
  explicit Rat(const mpq_class& q);

  static Rat parse(const std::string& s);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  // Valid only when the value is small; throws otherwise.
  long long num_small() const;
  long long den_small() const;
  // Throws unless the value is an integer fitting int64.
  long long to_int() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;
  std::string str() const;

  Rat floor() const;
  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat inverse() const;

  Rat operator-() const;
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend int compare(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b);
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return compare(a, b) >= 0; }

  std::size_t hash() const;

 private:
  static Rat from_i128(__int128 n, __int128 d);
  static Rat from_big(mpq_class q);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat gcd(const Rat& a, const Rat& b);  // gcd of rationals: generator of aZ + bZ
Rat lcm_den(const Rat& a, const Rat& b);

}  // namespace fh

template <>
struct std::hash<fh::Rat> {
  std::size_t operator()(const fh::Rat& r) const { return r.hash(); }
};
