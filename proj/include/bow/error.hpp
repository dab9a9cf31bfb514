#pragma once

#include <stdexcept>
#include <string>

namespace bow {

enum class Errc {
  SyntaxError,
  UnknownVariable,
  NotProportional,
  NotDivisible,
  BoundaryNotZero,
  NotAdjacentOppositePair,
  NegativeLabel,
  IllegalMove,
  InvalidTie,
  NonEffective,
  BadWeightForm,
  BrokenSymplecticInvolution,
  InconsistentDimension,
  DegenerateWeight,
  SchemaError,
  DiagonalMismatch,
  TriangularityViolation,
  HomogeneityViolation,
  IntegralityFailure,
  AxiomFailure,
  ChamberMismatch,
  UnknownPoint,
};

const char* errcName(Errc code);

// Every library failure is reported through this type; the code names the
// condition and what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace bow
