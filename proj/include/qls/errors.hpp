#pragma once

#include <stdexcept>
#include <string>

namespace qls {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct UnsupportedOrder : Error {
  using Error::Error;
};

struct InvalidBlockSize : Error {
  using Error::Error;
};

struct InvalidParameters : Error {
  using Error::Error;
};

struct OrderTooSmall : Error {
  using Error::Error;
};

struct NonOrthonormalBasis : Error {
  using Error::Error;
};

struct ZeroVector : Error {
  using Error::Error;
};

// An overlap |<u|w>| landed between the "clearly distinct" and "same phase"
// thresholds; no cardinality verdict can be given.
struct AmbiguousPhase : Error {
  using Error::Error;
};

// Grouping produced a result that contradicts an exact structural fact
// (e.g. a unitary-pair cardinality of 1, or a non-transitive phase class).
struct InconsistentCardinality : Error {
  using Error::Error;
};

struct InconsistentGrouping : Error {
  using Error::Error;
};

struct InsufficientSeparation : Error {
  using Error::Error;
};

struct Unachievable : Error {
  using Error::Error;
};

struct UnknownAchievability : Error {
  using Error::Error;
};

struct NotInCatalog : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct InvalidQLS : Error {
  using Error::Error;
};

}  // namespace qls
