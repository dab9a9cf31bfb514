#include "bow/error.hpp"

namespace bow {

const char* errcName(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::NotProportional: return "NotProportional";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::BoundaryNotZero: return "BoundaryNotZero";
    case Errc::NotAdjacentOppositePair: return "NotAdjacentOppositePair";
    case Errc::NegativeLabel: return "NegativeLabel";
    case Errc::IllegalMove: return "IllegalMove";
    case Errc::InvalidTie: return "InvalidTie";
    case Errc::NonEffective: return "NonEffective";
    case Errc::BadWeightForm: return "BadWeightForm";
    case Errc::BrokenSymplecticInvolution: return "BrokenSymplecticInvolution";
    case Errc::InconsistentDimension: return "InconsistentDimension";
    case Errc::DegenerateWeight: return "DegenerateWeight";
    case Errc::SchemaError: return "SchemaError";
    case Errc::DiagonalMismatch: return "DiagonalMismatch";
    case Errc::TriangularityViolation: return "TriangularityViolation";
    case Errc::HomogeneityViolation: return "HomogeneityViolation";
    case Errc::IntegralityFailure: return "IntegralityFailure";
    case Errc::AxiomFailure: return "AxiomFailure";
    case Errc::ChamberMismatch: return "ChamberMismatch";
    case Errc::UnknownPoint: return "UnknownPoint";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errcName(code)) + ": " + detail),
      code_(code) {}

}  // namespace bow
