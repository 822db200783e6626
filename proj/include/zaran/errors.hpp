#pragma once

#include <stdexcept>
#include <string>

namespace zaran {

/// Malformed input document (bad JSON, wrong types, missing fields).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed document whose content violates an invariant. The message
/// starts with the field path, e.g. "bicliques[2].left[0]: ...".
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A search gave up before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zaran
