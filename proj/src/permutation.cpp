#include "gkm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gkm/errors.hpp"

namespace gkm {

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), std::size_t{0});
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const std::size_t n = images.size();
  Permutation w(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) {
      throw ParseError("one-line images are not a permutation of 1.." + std::to_string(n));
    }
    seen[v - 1] = true;
    w.images_[i] = static_cast<std::size_t>(v - 1);
  }
  return w;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw Error("transposition (" + std::to_string(i) + " " + std::to_string(j) +
                ") is not valid in S_" + std::to_string(n));
  }
  Permutation w(n);
  std::swap(w.images_[i - 1], w.images_[j - 1]);
  return w;
}

Permutation Permutation::simple(std::size_t n, std::size_t i) { return transposition(n, i, i + 1); }

namespace {

std::vector<std::size_t> read_cycle(std::string_view body) {
  std::vector<std::size_t> out;
  const bool separated = body.find_first_of(" ,") != std::string_view::npos;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const char c = body[pos];
    if (c == ' ' || c == ',') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in cycle");
    }
    if (!separated) {
      out.push_back(static_cast<std::size_t>(c - '0'));
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
    out.push_back(std::stoul(std::string(body.substr(pos, end - pos))));
    pos = end;
  }
  return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::size_t n) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) || !s.empty()) s.push_back(c);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty permutation");
  if (s == "e" || s == "id" || s == "()") return Permutation(n);

  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated one-line permutation: " + s);
    std::vector<int> images;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && (body[pos] == ',' || body[pos] == ' ')) ++pos;
      if (pos >= body.size()) break;
      std::size_t end = pos;
      while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
      if (end == pos) throw ParseError("bad one-line permutation: " + s);
      images.push_back(std::stoi(body.substr(pos, end - pos)));
      pos = end;
    }
    if (images.size() != n) {
      throw ParseError("one-line permutation " + s + " does not have " + std::to_string(n) +
                       " entries");
    }
    return from_one_line(images);
  }

  // Product of cycles, composed right-to-left.
  Permutation result(n);
  std::vector<Permutation> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == '*') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw ParseError("expected '(' in cycle notation: " + s);
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unterminated cycle: " + s);
    const auto cycle = read_cycle(std::string_view(s).substr(pos + 1, close - pos - 1));
    Permutation c(n);
    std::vector<bool> seen(n + 1, false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::size_t a = cycle[k];
      if (a < 1 || a > n || seen[a]) {
        throw ParseError("cycle entry " + std::to_string(a) + " invalid in S_" + std::to_string(n));
      }
      seen[a] = true;
      c.images_[a - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
    factors.push_back(std::move(c));
    pos = close + 1;
  }
  for (const auto& f : factors) result = result * f;
  return result;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Permutation> out;
  Permutation w(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.images_.begin(), w.images_.end()));
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw Error("composing permutations of different sizes");
  Permutation out(size());
  for (std::size_t i = 0; i < size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(size());
  for (std::size_t i = 0; i < size(); ++i) out.images_[images_[i]] = i;
  return out;
}

std::size_t Permutation::length() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_transposition(std::size_t* i, std::size_t* j) const {
  std::vector<std::size_t> moved;
  for (std::size_t k = 0; k < size(); ++k)
    if (images_[k] != k) moved.push_back(k);
  if (moved.size() != 2 || images_[moved[0]] != moved[1]) return false;
  if (i) *i = moved[0] + 1;
  if (j) *j = moved[1] + 1;
  return true;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  out.reserve(size());
  for (auto v : images_) out.push_back(static_cast<int>(v + 1));
  return out;
}

std::string Permutation::one_line_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i] + 1);
  }
  return out + "]";
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(size(), false);
  const bool wide = size() > 9;
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += "(";
    std::size_t k = start;
    bool first = true;
    while (!seen[k]) {
      seen[k] = true;
      if (!first && wide) out += " ";
      out += std::to_string(k + 1);
      first = false;
      k = images_[k];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace gkm
