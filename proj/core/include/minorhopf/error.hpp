#pragma once

#include <stdexcept>
#include <string>

namespace minorhopf {

/// Domain error categories. Every throwing operation documents which of
/// these it may raise; messages carry the offending data (labels, masks).
enum class Errc {
  EmptyBases,
  UnequalCardinality,
  ExchangeAxiomViolation,
  RankOutOfRange,
  GroundOverlap,
  NotNested,
  NotASubset,
  EmptyMatroid,
  GroundTooLarge,
  NotComparable,
  NoMinimum,
  SizeMismatch,
  ParseError,
  NonzeroCounit,
  ChainMismatch,
  DuplicateLabel,
  UnknownLabel,
  OrderAxiomViolation,
  ClosureAxiomViolation,
  SingularMatrix,
  BadArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace minorhopf
