#include "pcurv/error.hpp"

namespace pcurv {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::InseparableInput: return "InseparableInput";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DivisionByZeroOperator: return "DivisionByZeroOperator";
    case ErrorKind::NotEnoughSamplePoints: return "NotEnoughSamplePoints";
    case ErrorKind::PoleAtSamplePoint: return "PoleAtSamplePoint";
    case ErrorKind::NonzeroPCurvature: return "NonzeroPCurvature";
    case ErrorKind::PoleAtBasePoint: return "PoleAtBasePoint";
    case ErrorKind::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::EmptyParams: return "EmptyParams";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NotOrdinaryPoint: return "NotOrdinaryPoint";
    case ErrorKind::IrregularSingularPoint: return "IrregularSingularPoint";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::SingularIndex: return "SingularIndex";
    case ErrorKind::NotEnoughInitialValues: return "NotEnoughInitialValues";
    case ErrorKind::LowerParameterNonpositiveInteger: return "LowerParameterNonpositiveInteger";
    case ErrorKind::NotASimpleRoot: return "NotASimpleRoot";
    case ErrorKind::NoExpansionAtOrigin: return "NoExpansionAtOrigin";
    case ErrorKind::NoSeriesSolution: return "NoSeriesSolution";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const char* parse_error_kind_name(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::SyntaxError: return "SyntaxError";
    case ParseErrorKind::NonpolynomialExponent: return "NonpolynomialExponent";
    case ParseErrorKind::DxInDenominator: return "DxInDenominator";
  }
  return "Unknown";
}

}  // namespace pcurv
