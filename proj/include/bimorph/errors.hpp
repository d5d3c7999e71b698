#ifndef BIMORPH_ERRORS_HPP_
#define BIMORPH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bimorph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured element/map budget.
struct SizeBudgetExceeded : Error {
  explicit SizeBudgetExceeded(const std::string& what) : Error(what) {}
};

struct DomainMismatch : Error {
  explicit DomainMismatch(const std::string& what) : Error(what) {}
};

struct TypeMismatch : Error {
  explicit TypeMismatch(const std::string& what) : Error(what) {}
};

struct MonadMismatch : Error {
  explicit MonadMismatch(const std::string& what) : Error(what) {}
};

struct CarrierMismatch : Error {
  explicit CarrierMismatch(const std::string& what) : Error(what) {}
};

struct NotAMorphism : Error {
  explicit NotAMorphism(const std::string& what) : Error(what) {}
};

struct NotABimorphism : Error {
  explicit NotABimorphism(const std::string& what) : Error(what) {}
};

struct NotAnAlgebra : Error {
  explicit NotAnAlgebra(const std::string& what) : Error(what) {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct NaturalitySquareFails : Error {
  explicit NaturalitySquareFails(const std::string& what) : Error(what) {}
};

struct KleisliAxiomFails : Error {
  explicit KleisliAxiomFails(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace bimorph

#endif  // BIMORPH_ERRORS_HPP_
