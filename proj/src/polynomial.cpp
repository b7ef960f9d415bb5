#include "gkm/polynomial.hpp"

#include <numeric>

#include "gkm/errors.hpp"

namespace gkm {

unsigned total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

std::strong_ordering graded_compare(const Monomial& a, const Monomial& b) {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da <=> db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(std::size_t num_variables, const Rational& c) {
  Polynomial p(num_variables);
  p.add_term(Monomial(num_variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_variables, std::size_t index) {
  if (index >= num_variables) throw Error("variable index out of range");
  Monomial m(num_variables, 0);
  m[index] = 1;
  Polynomial p(num_variables);
  p.add_term(m, 1);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw Error("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw Error("adding polynomials in different variable counts");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw Error("subtracting polynomials in different variable counts");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error("multiplying polynomials in different variable counts");
  Polynomial out(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) <= max_degree) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] > m[k]) return false;
  return true;
}

}  // namespace

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
  if (g.nvars_ != nvars_) throw Error("dividing polynomials in different variable counts");
  if (g.is_zero()) {
    if (is_zero()) return Polynomial(nvars_);
    return std::nullopt;
  }
  const auto& [lm, lc] = g.leading_term();
  Polynomial rest = *this;
  Polynomial quotient(nvars_);
  Monomial q(nvars_);
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading_term();
    if (!divides(lm, rm)) return std::nullopt;
    for (std::size_t k = 0; k < nvars_; ++k) q[k] = rm[k] - lm[k];
    const Rational coeff = rc / lc;
    Polynomial step(nvars_);
    step.add_term(q, coeff);
    quotient += step;
    rest -= step * g;
  }
  return quotient;
}

std::pair<Polynomial, Polynomial> Polynomial::divide_univariate(const Polynomial& g) const {
  if (nvars_ != 1 || g.nvars_ != 1) throw Error("univariate division needs one variable");
  if (g.is_zero()) throw Error("division by the zero polynomial");
  const auto& [lm, lc] = g.leading_term();
  Polynomial rest = *this;
  Polynomial quotient(1);
  while (!rest.is_zero() && rest.leading_term().first[0] >= lm[0]) {
    const auto& [rm, rc] = rest.leading_term();
    Polynomial step(1);
    step.add_term(Monomial{rm[0] - lm[0]}, rc / lc);
    quotient += step;
    rest -= step * g;
  }
  return {quotient, rest};
}

Polynomial Polynomial::substitute_all(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw Error("substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().num_variables();
  // powers[k][e] = images[k]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t k, unsigned e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t k = 0; k < nvars_; ++k)
      if (m[k]) term = term * power(k, m[k]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t index, const Polynomial& value) const {
  std::vector<Polynomial> images;
  images.reserve(nvars_);
  for (std::size_t k = 0; k < nvars_; ++k)
    images.push_back(k == index ? value : variable(nvars_, k));
  return substitute_all(images);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_term().second);
}

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (!m[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += k < names.size() ? names[k] : "x" + std::to_string(k + 1);
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    if (mono.empty()) {
      out += rational_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rational_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace gkm
