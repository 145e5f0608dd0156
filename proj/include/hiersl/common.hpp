#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hiersl {

/// Location of a construct in formula source text (1-based line and column).
struct SourceSpan {
  int line = 0;
  int column = 0;
  int offset = 0;
  int length = 0;

  bool valid() const { return line > 0; }
  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, SourceSpan where)
      : Error(where.to_string() + ": " + what), span(where) {}
  SourceSpan span;
};

/// Structural problems in a game or Kripke structure; one entry per violation.
class ModelError : public Error {
 public:
  explicit ModelError(std::vector<std::string> problems)
      : Error(join(problems)), problems(std::move(problems)) {}
  std::vector<std::string> problems;

 private:
  static std::string join(const std::vector<std::string>& ps) {
    std::string out;
    for (const auto& p : ps) {
      if (!out.empty()) out += "; ";
      out += p;
    }
    return out;
  }
};

/// Input outside the decidable fragment (non-hierarchical) or otherwise refused.
class RefusedError : public Error {
 public:
  using Error::Error;
};

/// A construction exceeded its state budget.  Never silently truncated.
class ResourceError : public Error {
 public:
  ResourceError(std::string stage, std::string subformula, std::size_t states)
      : Error("resource cap exceeded in " + stage + " (" +
              std::to_string(states) + " states) at subformula " + subformula),
        stage(std::move(stage)),
        subformula(std::move(subformula)),
        states(states) {}
  std::string stage;
  std::string subformula;
  std::size_t states;
};

/// Concrete observation / index set: sorted, duplicate-free, 1-based component indices.
using IndexSet = std::vector<int>;

IndexSet index_intersection(const IndexSet& a, const IndexSet& b);
bool index_subset(const IndexSet& sub, const IndexSet& super);
IndexSet index_range(int n);  // {1..n}
std::string index_set_to_string(const IndexSet& s);

}  // namespace hiersl
