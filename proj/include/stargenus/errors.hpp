#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stargenus {

/// Input graph fails one or more structural invariants.
class InvalidGraph : public std::runtime_error {
 public:
  explicit InvalidGraph(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "invalid graph";
    for (const auto& item : items) {
      out += "; ";
      out += item;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

/// No edge orientation alternates in/out around every vertex.
class NotSourceSink : public std::runtime_error {
 public:
  NotSourceSink() : std::runtime_error("graph does not satisfy the source-sink condition") {}
};

/// An internal invariant that the theory guarantees was observed broken.
class BrokenInvariant : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(std::size_t vertices, std::size_t cap)
      : std::runtime_error("exhaustive enumeration refused: " + std::to_string(vertices) +
                           " vertices exceeds cap " + std::to_string(cap)),
        vertices_(vertices),
        cap_(cap) {}

  std::size_t vertices() const noexcept { return vertices_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t vertices_;
  std::size_t cap_;
};

}  // namespace stargenus
