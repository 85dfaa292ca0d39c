#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace physarum {

enum class ErrorCode {
  InvalidArgument,
  UnknownStimulus,
  UnknownStimulusSet,
  UnsupportedFamily,
  InvalidChange,
  InvalidProtocol,
  BandEmpty,
  DegenerateSignal,
  MissingStimulationTime,
  ArityMismatch,
  CyclicNetlist,
  UnassignedInput,
  EmptyOutcomes,
  ParseError,
  NonUniformSampling,
  OutOfRange,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownStimulus: return "UnknownStimulus";
    case ErrorCode::UnknownStimulusSet: return "UnknownStimulusSet";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::InvalidChange: return "InvalidChange";
    case ErrorCode::InvalidProtocol: return "InvalidProtocol";
    case ErrorCode::BandEmpty: return "BandEmpty";
    case ErrorCode::DegenerateSignal: return "DegenerateSignal";
    case ErrorCode::MissingStimulationTime: return "MissingStimulationTime";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::CyclicNetlist: return "CyclicNetlist";
    case ErrorCode::UnassignedInput: return "UnassignedInput";
    case ErrorCode::EmptyOutcomes: return "EmptyOutcomes";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonUniformSampling: return "NonUniformSampling";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace physarum
