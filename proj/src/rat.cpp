#include "foldhecke/rat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "foldhecke/errors.hpp"

namespace fh {
namespace {

using i128 = __int128;

constexpr i128 kMax64 = std::numeric_limits<int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<int64_t>::min() + 1;  // keep negation safe

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(i128 v) { return v <= kMax64 && v >= kMin64; }

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) throw ValidationError("zero denominator");
  *this = from_i128(n, d);
}

Rat::Rat(const mpq_class& q) { *this = from_big(q); }

Rat Rat::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rat();
  i128 g = gcd128(n, d);
  n /= g;
  d /= g;
  Rat r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rat Rat::from_big(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  Rat r;
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    long nn = n.get_si(), dd = d.get_si();
    if (fits(nn) && fits(dd)) {
      r.num_ = nn;
      r.den_ = dd;
      return r;
    }
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rat Rat::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw ValidationError("empty rational literal");
  auto valid_int = [](const std::string& x) {
    std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i >= x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  auto slash = t.find('/');
  std::string n = t.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d)) throw ValidationError("malformed fraction '" + s + "'");
  if (n[0] == '+') n = n.substr(1);
  if (d[0] == '+') d = d.substr(1);
  mpz_class zn(n), zd(d);
  if (zd == 0) throw ValidationError("zero denominator in '" + s + "'");
  return from_big(mpq_class(zn, zd));
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

long long Rat::num_small() const {
  if (big_) throw InvariantError("rational exceeds 64-bit range");
  return num_;
}

long long Rat::den_small() const {
  if (big_) throw InvariantError("rational exceeds 64-bit range");
  return den_;
}

long long Rat::to_int() const {
  if (big_ || den_ != 1) throw InvariantError("expected a 64-bit integer, got " + str());
  return num_;
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rat::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
mpz_class Rat::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

double Rat::to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rat::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::floor() const {
  if (big_) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    return from_big(mpq_class(q));
  }
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return Rat(q);
}

Rat Rat::inverse() const {
  if (is_zero()) throw InvariantError("division by zero");
  if (big_) return from_big(mpq_class(big_->get_den(), big_->get_num()));
  return from_i128(den_, num_);
}

Rat Rat::operator-() const {
  if (big_) return from_big(mpq_class(-*big_));
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat operator+(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && fits(s)) return Rat(s);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rat::from_i128(n, d);
  }
  return Rat::from_big(a.to_mpq() + b.to_mpq());
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rat();
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && fits(p)) return Rat(p);
    }
    i128 g1 = gcd128(a.num_, b.den_), g2 = gcd128(b.num_, a.den_);
    i128 n = static_cast<i128>(a.num_ / static_cast<int64_t>(g1)) * (b.num_ / static_cast<int64_t>(g2));
    i128 d = static_cast<i128>(a.den_ / static_cast<int64_t>(g2)) * (b.den_ / static_cast<int64_t>(g1));
    return Rat::from_i128(n, d);
  }
  return Rat::from_big(a.to_mpq() * b.to_mpq());
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

int compare(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_, r = static_cast<i128>(b.num_) * a.den_;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (!a.big_ || !b.big_) return false;  // canonical: big values never fit inline
  return *a.big_ == *b.big_;
}

std::size_t Rat::hash() const {
  if (big_) return std::hash<std::string>()(big_->get_str());
  return std::hash<int64_t>()(num_) * 1000003u ^ std::hash<int64_t>()(den_);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat gcd(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class n, d;
  mpz_gcd(n.get_mpz_t(), mpz_class(a.numerator() * b.denominator()).get_mpz_t(),
          mpz_class(b.numerator() * a.denominator()).get_mpz_t());
  d = a.denominator() * b.denominator();
  return Rat(mpq_class(n, d));
}

Rat lcm_den(const Rat& a, const Rat& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  return Rat(mpq_class(l));
}

}  // namespace fh
