#include "gkm/ring.hpp"

#include <cctype>
#include <set>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

void check_variables(const std::vector<std::string>& variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw ValidationError({"variable names must be nonempty"});
    if (!std::isalpha(static_cast<unsigned char>(v.front())) && v.front() != '_') {
      throw ValidationError({"variable name '" + v + "' must start with a letter"});
    }
    for (char c : v) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ValidationError({"variable name '" + v + "' has invalid characters"});
      }
    }
    if (!seen.insert(v).second) throw ValidationError({"duplicate variable name '" + v + "'"});
  }
}

}  // namespace

RingPtr Ring::integers() {
  static const RingPtr z = std::shared_ptr<Ring>(new Ring());
  return z;
}

RingPtr Ring::integers_mod(const Integer& modulus) {
  if (modulus < 2) throw ValidationError({"modulus must be at least 2"});
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::integers_mod;
  r->modulus_ = modulus;
  return r;
}

RingPtr Ring::polynomial(std::vector<std::string> variables) {
  check_variables(variables);
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::polynomial;
  r->variables_ = std::move(variables);
  return r;
}

RingPtr Ring::polynomial(std::string_view prefix, std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back(std::string(prefix) + std::to_string(i));
  return polynomial(std::move(vars));
}

RingPtr Ring::truncated(std::vector<std::string> variables, unsigned max_degree) {
  check_variables(variables);
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::truncated;
  r->variables_ = std::move(variables);
  r->max_degree_ = max_degree;
  return r;
}

bool Ring::is_pid() const {
  return kind_ == Kind::integers || kind_ == Kind::integers_mod || is_univariate();
}

bool operator==(const Ring& a, const Ring& b) {
  return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.variables_ == b.variables_ &&
         a.max_degree_ == b.max_degree_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

Element Ring::zero() const { return from_integer(0); }
Element Ring::one() const { return from_integer(1); }

Element Ring::from_integer(const Integer& n) const {
  if (is_integral()) return Element(shared_from_this(), n);
  return Element(shared_from_this(), Polynomial::constant(num_variables(), Rational(n)));
}

Element Ring::from_rational(const Rational& q) const {
  Rational c = q;
  c.canonicalize();
  if (is_integral()) {
    if (c.get_den() != 1) throw ParseError("non-integral value " + rational_string(c) + " in " + describe());
    return Element(shared_from_this(), Integer(c.get_num()));
  }
  return Element(shared_from_this(), Polynomial::constant(num_variables(), c));
}

Element Ring::from_polynomial(const Polynomial& p) const {
  if (is_integral()) {
    if (!p.is_constant()) throw ParseError("polynomial value in " + describe());
    return from_rational(p.constant_term());
  }
  if (p.num_variables() != num_variables()) throw RingMismatch("polynomial variable count mismatch");
  return Element(shared_from_this(), p);
}

Element Ring::variable(std::size_t index) const {
  if (!is_polynomial_kind()) throw UnsupportedRing(describe() + " has no variables");
  return from_polynomial(Polynomial::variable(num_variables(), index));
}

std::size_t Ring::variable_index(std::string_view name) const {
  for (std::size_t k = 0; k < variables_.size(); ++k)
    if (variables_[k] == name) return k;
  throw ParseError("unknown variable '" + std::string(name) + "' in " + describe());
}

Element Ring::variable(std::string_view name) const { return variable(variable_index(name)); }

std::string Ring::describe() const {
  auto vars = [&] {
    std::string s;
    for (const auto& v : variables_) s += (s.empty() ? "" : ",") + v;
    return s;
  };
  switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::integers_mod: return "Z/" + modulus_.get_str();
    case Kind::polynomial: return "Q[" + vars() + "]";
    case Kind::truncated:
      return "Q[" + vars() + "]/(deg>" + std::to_string(max_degree_) + ")";
  }
  return "?";
}

// --- parsing ---------------------------------------------------------------

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const Ring& ring, std::string_view text)
      : ring_(ring), nvars_(ring.is_polynomial_kind() ? ring.num_variables() : 0) {
    // Accept the Unicode minus sign used in typeset formulas.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        text_.push_back('-');
        i += 2;
      } else {
        text_.push_back(text[i]);
      }
    }
  }

  Polynomial parse() {
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    Polynomial p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" + text_ + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc.scaled(1 / d.constant_term());
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        acc = acc * unary();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(nvars_, Rational(Integer(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (!ring_.is_polynomial_kind()) fail("variable '" + name + "' in " + ring_.describe());
      const auto& vars = ring_.variables();
      for (std::size_t k = 0; k < vars.size(); ++k)
        if (vars[k] == name) return Polynomial::variable(nvars_, k);
      fail("unknown variable '" + name + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::size_t nvars_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element Ring::parse(std::string_view text) const {
  return from_polynomial(ExpressionParser(*this, text).parse());
}

// --- elements --------------------------------------------------------------

Element::Element() : ring_(Ring::integers()), value_(Integer(0)) {}

Element::Element(RingPtr ring, Integer value) : ring_(std::move(ring)) {
  if (ring_->kind() == Ring::Kind::integers_mod) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), ring_->modulus().get_mpz_t());
    value = r;
  }
  value_ = std::move(value);
}

Element::Element(RingPtr ring, Polynomial value) : ring_(std::move(ring)) {
  if (ring_->kind() == Ring::Kind::truncated) value = value.truncated(ring_->max_degree());
  value_ = std::move(value);
}

const Integer& Element::integer() const {
  if (!ring_->is_integral()) throw UnsupportedRing("integer value requested in " + ring_->describe());
  return std::get<Integer>(value_);
}

const Polynomial& Element::polynomial() const {
  if (ring_->is_integral()) throw UnsupportedRing("polynomial value requested in " + ring_->describe());
  return std::get<Polynomial>(value_);
}

bool Element::is_zero() const {
  if (ring_->is_integral()) return std::get<Integer>(value_) == 0;
  return std::get<Polynomial>(value_).is_zero();
}

bool Element::is_one() const { return *this == ring_->one(); }

void require_same_ring(const Element& a, const Element& b, std::string_view what) {
  if (!same_ring(a.ring(), b.ring())) {
    throw RingMismatch(std::string(what) + ": " + a.ring()->describe() + " vs " + b.ring()->describe());
  }
}

Element Element::operator-() const {
  if (ring_->is_integral()) return Element(ring_, Integer(-std::get<Integer>(value_)));
  return Element(ring_, -std::get<Polynomial>(value_));
}

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b, "addition");
  if (a.ring_->is_integral()) return Element(a.ring_, Integer(a.integer() + b.integer()));
  return Element(a.ring_, a.polynomial() + b.polynomial());
}

Element operator-(const Element& a, const Element& b) {
  require_same_ring(a, b, "subtraction");
  if (a.ring_->is_integral()) return Element(a.ring_, Integer(a.integer() - b.integer()));
  return Element(a.ring_, a.polynomial() - b.polynomial());
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b, "multiplication");
  if (a.ring_->is_integral()) return Element(a.ring_, Integer(a.integer() * b.integer()));
  return Element(a.ring_, a.polynomial() * b.polynomial());
}

Element Element::pow(unsigned e) const {
  Element result = ring_->one();
  Element base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

int Element::degree() const {
  if (ring_->is_integral()) return is_zero() ? -1 : 0;
  return polynomial().degree();
}

std::string Element::to_string() const {
  if (ring_->is_integral()) return std::get<Integer>(value_).get_str();
  return std::get<Polynomial>(value_).to_string(ring_->variables());
}

bool operator==(const Element& a, const Element& b) {
  return same_ring(a.ring_, b.ring_) && a.value_ == b.value_;
}

}  // namespace gkm
