#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings, or a spline is paired with the wrong graph.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation needs a ring capability (PID, polynomial kind, ...) the ring lacks.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A size guard (factorial generators, enumeration oracles) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Carries every violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out;
    for (const auto& p : problems) {
      if (!out.empty()) out += "; ";
      out += p;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

}  // namespace gkm
