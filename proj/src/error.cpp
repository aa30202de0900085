#include "germcat/error.hpp"

namespace germcat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::InvalidPoset: return "InvalidPoset";
    case ErrorKind::EmptyBase: return "EmptyBase";
    case ErrorKind::MeetUnavailable: return "MeetUnavailable";
    case ErrorKind::NotAFilter: return "NotAFilter";
    case ErrorKind::IllFormedDiagram: return "IllFormedDiagram";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotMono: return "NotMono";
    case ErrorKind::NonEnumerableFilter: return "NonEnumerableFilter";
    case ErrorKind::AgreementNotDefinable: return "AgreementNotDefinable";
    case ErrorKind::DimensionOverflow: return "DimensionOverflow";
    case ErrorKind::InvalidSimplicialSet: return "InvalidSimplicialSet";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::MaxSize: return "max-size";
  }
  return "Unknown";
}

}  // namespace germcat
