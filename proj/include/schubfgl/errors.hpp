#ifndef SCHUBFGL_ERRORS_HPP
#define SCHUBFGL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schubfgl {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact series division failed; `degree` is the lowest total degree of the
// dividend at which no consistent quotient exists.
struct NotDivisible : Error {
  int degree;
  NotDivisible(int deg, const std::string& what)
      : Error(what + " (first failure at degree " + std::to_string(deg) + ")"), degree(deg) {}
};

// A result's support would escape the working window of an infinite Weyl group.
struct WindowError : Error {
  explicit WindowError(const std::string& what) : Error(what) {}
};

// Operation is meaningless or out of scope for the given datum (e.g. classes
// normalized by an infinite product on affine types).
struct Unsupported : Error {
  explicit Unsupported(const std::string& what) : Error(what) {}
};

// Coefficient specialization hit a symbol with no assigned value.
struct MissingSymbol : Error {
  int sym;
  explicit MissingSymbol(int k)
      : Error("no value assigned to coefficient symbol m" + std::to_string(k)), sym(k) {}
};

// Argument violates a documented precondition (mismatched generators,
// non-invertible substitution, denominator without linear lowest term, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace schubfgl

#endif
