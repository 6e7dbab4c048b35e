#include "pdnf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pdnf/error.hpp"

namespace pdnf {

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  Monomial m(n);
  m.exps_[i] = 1;
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (size() != o.size()) throw DimensionError("monomial dimension mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exps_.begin(), b.exps_.end(), a.exps_.begin(),
                                      a.exps_.end());
}

namespace {

void fill_degree(std::size_t n, std::size_t i, unsigned left, Monomial::Exponents& cur,
                 std::vector<Monomial>& out) {
  if (i + 1 == n) {
    cur[i] = left;
    out.emplace_back(std::span<const std::uint32_t>(cur.data(), cur.size()));
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[i] = e;
    fill_degree(n, i + 1, left - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned m) {
  std::vector<Monomial> out;
  if (n == 0) return out;
  Monomial::Exponents cur(n, 0);
  fill_degree(n, 0, m, cur, out);
  return out;
}

std::size_t count_monomials(std::size_t n, unsigned m) {
  if (n == 0) return 0;
  // C(m + n - 1, n - 1), computed incrementally to stay exact.
  std::size_t r = 1;
  for (std::size_t j = 1; j < n; ++j) r = r * (m + j) / j;
  return r;
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Monomial(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("variable index out of range");
  Polynomial p(n);
  p.add_term(Monomial::variable(n, i), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != n_) throw DimensionError("monomial length does not match polynomial dimension");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

unsigned Polynomial::min_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::truncated(unsigned k) const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > k) break;
    r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= n_) throw DimensionError("derivative index out of range");
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial::Exponents e(m.exponents().begin(), m.exponents().end());
    Rational coef = c * m[i];
    --e[i];
    r.terms_.emplace(Monomial(std::span<const std::uint32_t>(e.data(), e.size())), coef);
  }
  return r;
}

double Polynomial::evaluate(std::span<const double> x) const {
  if (x.size() != n_) throw DimensionError("evaluation point has wrong dimension");
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i] != 0) t *= std::pow(x[i], static_cast<int>(m[i]));
    s += t;
  }
  return s;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (x.size() != n_) throw DimensionError("evaluation point has wrong dimension");
  Rational s(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= x[i];
    s += t;
  }
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw DimensionError("polynomial dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw DimensionError("polynomial dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  if (n <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(xyz[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  std::vector<std::string> own;
  if (names.size() < n_) {
    own = default_names(n_);
    names = own;
  }
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m.degree() == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      os << pdnf::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned k) {
  if (a.dimension() != b.dimension()) throw DimensionError("polynomial dimension mismatch");
  Polynomial::Terms acc;
  for (const auto& [ma, ca] : a.terms()) {
    unsigned da = ma.degree();
    if (da > k) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + mb.degree() > k) break;
      auto [it, inserted] = acc.try_emplace(ma * mb);
      it->second += ca * cb;
    }
  }
  Polynomial r(a.dimension());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) r.add_term(m, c);
  return r;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithKind kind, unsigned k) {
  if (a.dimension() != b.dimension()) throw DimensionError("polynomial dimension mismatch");
  switch (kind) {
    case ArithKind::add:
      return (a + b).truncated(k);
    case ArithKind::sub:
      return (a - b).truncated(k);
    case ArithKind::mul:
      return multiply(a, b, k);
    case ArithKind::scale:
      if (b.degree() != 0) throw PreconditionError("scale requires a constant polynomial");
      return (a * b.coefficient(Monomial(b.dimension()))).truncated(k);
  }
  throw InvariantError("unknown arithmetic kind");
}

namespace {

using TermRef = const Polynomial::Terms::value_type*;

class Substituter {
 public:
  Substituter(std::span<const Polynomial> map, std::size_t out_dim)
      : map_(map), out_dim_(out_dim) {
    for (const auto& p : map) min_deg_.push_back(p.is_zero() ? 0 : p.min_degree());
  }

  Polynomial run(std::vector<TermRef>& terms, std::size_t var, int bound) const {
    Polynomial acc(out_dim_);
    if (terms.empty() || bound < 0) return acc;
    if (var == map_.size()) {
      for (TermRef t : terms) acc.add_term(Monomial(out_dim_), t->second);
      return acc;
    }
    std::stable_sort(terms.begin(), terms.end(), [var](TermRef a, TermRef b) {
      return a->first[var] > b->first[var];
    });
    const Polynomial& phi = map_[var];
    const int d = static_cast<int>(min_deg_[var]);
    std::uint32_t e = terms.front()->first[var];
    if (phi.is_zero()) {
      // Only terms free of this variable survive.
      std::vector<TermRef> rest;
      for (TermRef t : terms)
        if (t->first[var] == 0) rest.push_back(t);
      return run(rest, var + 1, bound);
    }
    auto it = terms.begin();
    bool started = false;
    for (std::int64_t cur = e; cur >= 0; --cur) {
      int b = bound - static_cast<int>(cur) * d;
      if (started && b >= 0) acc = multiply(acc, phi, static_cast<unsigned>(b));
      std::vector<TermRef> group;
      while (it != terms.end() && (*it)->first[var] == cur) group.push_back(*it++);
      if (b < 0) continue;
      if (!group.empty()) {
        acc += run(group, var + 1, b);
        started = true;
      }
    }
    return acc;
  }

 private:
  std::span<const Polynomial> map_;
  std::size_t out_dim_;
  std::vector<unsigned> min_deg_;
};

}  // namespace

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> map, unsigned k) {
  if (map.size() != p.dimension())
    throw DimensionError("substitution map arity does not match polynomial dimension");
  std::size_t out_dim = map.empty() ? 0 : map.front().dimension();
  for (const auto& q : map)
    if (q.dimension() != out_dim) throw DimensionError("substitution map components disagree on dimension");
  std::vector<TermRef> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(&t);
  Substituter s(map, out_dim);
  return s.run(terms, 0, static_cast<int>(k)).truncated(k);
}

}  // namespace pdnf
