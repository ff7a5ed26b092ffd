#pragma once

#include <stdexcept>
#include <string>

namespace squap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A triple that violates the RDF term-position rules (literal subject,
/// non-IRI predicate) or a term that violates its own invariants.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Raised by the factor catalog loader. `equation` is the axiom number the
/// catalog violates, or 0 when the problem is not tied to an axiom.
class CatalogError : public Error {
 public:
  CatalogError(int equation, const std::string& message)
      : Error(message), equation_(equation) {}
  int equation() const noexcept { return equation_; }

 private:
  int equation_;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// Occurrence IRIs cannot be minted (missing label, label collision).
class MintingError : public Error {
 public:
  using Error::Error;
};

}  // namespace squap
