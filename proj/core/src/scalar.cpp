#include "pdnf/scalar.hpp"

#include <ostream>

#include "pdnf/error.hpp"

namespace pdnf {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return PreconditionError("not a rational literal: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw PreconditionError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw PreconditionError("division by zero Gaussian rational");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.real());
  std::string out;
  if (sgn(z.real()) != 0) out = to_string(z.real());
  const Rational& b = z.imag();
  if (sgn(b) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  Rational mag = abs(b);
  if (mag != 1) out += to_string(mag) + "*";
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

}  // namespace pdnf
