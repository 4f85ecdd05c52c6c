#pragma once

#include <stdexcept>
#include <string>

namespace pcurv {

enum class ErrorKind {
  BadReduction,
  PoleEvaluation,
  InseparableInput,
  DivisionByZero,
  DivisionByZeroOperator,
  NotEnoughSamplePoints,
  PoleAtSamplePoint,
  NonzeroPCurvature,
  PoleAtBasePoint,
  PoleAtOrigin,
  Reducible,
  EmptyParams,
  TruncationTooSmall,
  NotOrdinaryPoint,
  IrregularSingularPoint,
  UnsupportedOrder,
  SingularIndex,
  NotEnoughInitialValues,
  LowerParameterNonpositiveInteger,
  NotASimpleRoot,
  NoExpansionAtOrigin,
  NoSeriesSolution,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

// Domain errors raised by the algebra layer.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class ParseErrorKind { SyntaxError, NonpolynomialExponent, DxInDenominator };

const char* parse_error_kind_name(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t pos, const std::string& what)
      : std::runtime_error(what), kind_(kind), pos_(pos) {}
  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return pos_; }

 private:
  ParseErrorKind kind_;
  std::size_t pos_;
};

}  // namespace pcurv
