#pragma once

#include <stdexcept>
#include <string>

namespace wildauto {

// Shape and squareness violations.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Valid shapes, invalid mathematical domain (singular matrix, M - I not
// nilpotent, |det| != 1 where an automorphism is required, ...).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct NotUnipotentError : DomainError {
  explicit NotUnipotentError(const std::string& what) : DomainError(what) {}
};

struct NotQuasiUnipotentError : DomainError {
  explicit NotQuasiUnipotentError(const std::string& what) : DomainError(what) {}
};

// Rejected model input (CM-flagged factor, broken divisibility chain, ...).
struct ModelError : DomainError {
  explicit ModelError(const std::string& what) : DomainError(what) {}
};

// Two routes that are theorems of each other disagreed; a bug, never user error.
struct ConsistencyError : std::logic_error {
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Malformed input documents (JSON syntax, missing fields, bad integers).
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wildauto
