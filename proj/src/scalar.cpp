#include "foldhecke/scalar.hpp"

#include "foldhecke/errors.hpp"

namespace fh {

CScalar CScalar::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw ValidationError("empty complex literal");
  if (t.back() != 'i') return CScalar(Rat::parse(t));
  std::string body = t.substr(0, t.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if (body[k] == '+' || body[k] == '-') {
      cut = k;
      break;
    }
  auto imag_of = [&](std::string x) {
    if (x.empty() || x == "+") return Rat(1);
    if (x == "-") return Rat(-1);
    return Rat::parse(x);
  };
  if (cut == std::string::npos) return CScalar(Rat(0), imag_of(body));
  return CScalar(Rat::parse(body.substr(0, cut)), imag_of(body.substr(cut)));
}

std::string CScalar::str() const {
  if (im.is_zero()) return re.str();
  std::string s = re.is_zero() ? "" : re.str();
  std::string i = im.str();
  if (!s.empty() && im.sign() > 0) s += "+";
  return s + i + "i";
}

CScalar operator/(const CScalar& a, const CScalar& b) {
  Rat n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw InvariantError("division by zero");
  CScalar c{b.re / n, -b.im / n};
  return a * c;
}

bool complex_ge(const CScalar& z) {
  int s = z.re.sign();
  return s > 0 || (s == 0 && z.im.sign() >= 0);
}

bool complex_gt(const CScalar& z) {
  int s = z.re.sign();
  return s > 0 || (s == 0 && z.im.sign() > 0);
}

bool complex_less(const CScalar& a, const CScalar& b) { return complex_gt(b - a); }

CycScalar CycScalar::root_of_unity(int d, int j) {
  j = ((j % d) + d) % d;
  if (j == 0) return CycScalar(1);
  if (d == 2) return CycScalar(-1);
  if (d == 3) return j == 1 ? CycScalar(Rat(0), Rat(1)) : CycScalar(Rat(-1), Rat(-1));
  throw ValidationError("roots of unity supported for d in {1,2,3}");
}

CycScalar CycScalar::inverse() const {
  if (b.is_zero()) return CycScalar(a.inverse());
  Rat n = norm();
  CycScalar c = conj();
  return {c.a / n, c.b / n};
}

std::string CycScalar::str() const {
  if (b.is_zero()) return a.str();
  std::string s = a.is_zero() ? "" : a.str();
  if (!s.empty() && b.sign() > 0) s += "+";
  return s + b.str() + "w";
}

}  // namespace fh
