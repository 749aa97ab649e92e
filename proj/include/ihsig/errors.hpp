#pragma once

#include <stdexcept>
#include <string>

namespace ihsig {

// Every library failure carries a stable kind name so the CLI can report it
// as structured JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define IHSIG_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& message) : Error(#Name, message) {}      \
  };

IHSIG_DEFINE_ERROR(CompositionNonzero)
IHSIG_DEFINE_ERROR(DimensionMismatch)
IHSIG_DEFINE_ERROR(ParseError)
IHSIG_DEFINE_ERROR(DuplicateFacet)
IHSIG_DEFINE_ERROR(NonSimplexFace)
IHSIG_DEFINE_ERROR(DegreeOutOfRange)
IHSIG_DEFINE_ERROR(SimplexNotInComplex)
IHSIG_DEFINE_ERROR(EmptyComplex)
IHSIG_DEFINE_ERROR(AmbientMismatch)
IHSIG_DEFINE_ERROR(NotPseudomanifold)
IHSIG_DEFINE_ERROR(NonOrientable)
IHSIG_DEFINE_ERROR(InvalidUserStratification)
IHSIG_DEFINE_ERROR(IncompatibleStratification)
IHSIG_DEFINE_ERROR(CodimTooSmall)
IHSIG_DEFINE_ERROR(InvalidPerversity)
IHSIG_DEFINE_ERROR(NotProductStratification)
IHSIG_DEFINE_ERROR(StrataMismatch)
IHSIG_DEFINE_ERROR(DiagonalNotAllowable)
IHSIG_DEFINE_ERROR(UnsolvableDecomposition)
IHSIG_DEFINE_ERROR(NotIP)
IHSIG_DEFINE_ERROR(NotClosed)
IHSIG_DEFINE_ERROR(AsymmetricPairing)

#undef IHSIG_DEFINE_ERROR

}  // namespace ihsig
