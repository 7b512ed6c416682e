#pragma once

#include <stdexcept>
#include <string>

namespace ucob {

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct MissingVariable : std::runtime_error {
  explicit MissingVariable(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ArityMismatch : std::runtime_error {
  explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SlotMissing : std::runtime_error {
  explicit SlotMissing(const std::string& what) : std::runtime_error(what) {}
};

struct MismatchedDenominators : std::runtime_error {
  explicit MismatchedDenominators(const std::string& what) : std::runtime_error(what) {}
};

struct NotCoprime : std::runtime_error {
  explicit NotCoprime(const std::string& what) : std::runtime_error(what) {}
};

struct NotAFactorization : std::runtime_error {
  explicit NotAFactorization(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedRecollementOverlap : std::runtime_error {
  explicit UnsupportedRecollementOverlap(const std::string& what) : std::runtime_error(what) {}
};

struct UnreducedGenus : std::runtime_error {
  explicit UnreducedGenus(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ucob
