#include "minorhopf/error.hpp"

namespace minorhopf {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyBases: return "EmptyBases";
    case Errc::UnequalCardinality: return "UnequalCardinality";
    case Errc::ExchangeAxiomViolation: return "ExchangeAxiomViolation";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::GroundOverlap: return "GroundOverlap";
    case Errc::NotNested: return "NotNested";
    case Errc::NotASubset: return "NotASubset";
    case Errc::EmptyMatroid: return "EmptyMatroid";
    case Errc::GroundTooLarge: return "GroundTooLarge";
    case Errc::NotComparable: return "NotComparable";
    case Errc::NoMinimum: return "NoMinimum";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::NonzeroCounit: return "NonzeroCounit";
    case Errc::ChainMismatch: return "ChainMismatch";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::OrderAxiomViolation: return "OrderAxiomViolation";
    case Errc::ClosureAxiomViolation: return "ClosureAxiomViolation";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

}  // namespace minorhopf
