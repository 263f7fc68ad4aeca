#pragma once

#include <stdexcept>
#include <string>

namespace hilbcover {

enum class ErrorCode {
  OriginNotInterior,
  ZeroDirection,
  PointNotInterior,
  BodyNotInterior,
  RegionNotInterior,
  DimensionMismatch,
  DegenerateBody,
  DegenerateCut,
  NotCentrallySymmetric,
  OriginNotMember,
  RadiusOutOfRange,
  DomainViolation,
  EmptyGroundSet,
  NotTwoDimensional,
  SearchFailed,
  ParseError,
  ValidationError,
  UnknownCheck,
  IoError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::PointNotInterior: return "PointNotInterior";
    case ErrorCode::BodyNotInterior: return "BodyNotInterior";
    case ErrorCode::RegionNotInterior: return "RegionNotInterior";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateBody: return "DegenerateBody";
    case ErrorCode::DegenerateCut: return "DegenerateCut";
    case ErrorCode::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorCode::OriginNotMember: return "OriginNotMember";
    case ErrorCode::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::EmptyGroundSet: return "EmptyGroundSet";
    case ErrorCode::NotTwoDimensional: return "NotTwoDimensional";
    case ErrorCode::SearchFailed: return "SearchFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hilbcover
