#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gkm {

/// An element of the symmetric group S_n, stored by its one-line images.
///
/// Products compose right-to-left: `(u * v)(i) == u(v(i))`, so `u * v` means
/// "apply v, then u". All indices exposed through the public API are 1-based.
class Permutation {
 public:
  /// The identity of S_n.
  explicit Permutation(std::size_t n = 0);

  /// Builds from one-line notation `[w(1), ..., w(n)]`; throws ParseError if
  /// the images are not a bijection of {1..n}.
  static Permutation from_one_line(const std::vector<int>& images);

  /// The transposition exchanging i and j in S_n.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  /// The simple reflection (i, i+1) in S_n.
  static Permutation simple(std::size_t n, std::size_t i);

  /// Parses either one-line notation `[2,1,3]` or a product of cycles such as
  /// `(12)(23)`, `(1 3)`, `e`. Cycle products compose right-to-left.
  static Permutation parse(std::string_view text, std::size_t n);

  /// All of S_n in lexicographic one-line order.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1) + 1; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  /// Number of inversions, i.e. the Coxeter length.
  std::size_t length() const;
  bool is_identity() const;

  /// True iff this is a transposition; on success writes the swapped pair (i<j).
  bool is_transposition(std::size_t* i = nullptr, std::size_t* j = nullptr) const;

  std::vector<int> one_line() const;
  std::string one_line_string() const;
  /// Disjoint cycle notation, e.g. `(132)`; the identity prints as `e`.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;  // 0-based
};

}  // namespace gkm
