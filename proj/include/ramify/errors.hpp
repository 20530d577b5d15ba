#pragma once

#include <stdexcept>
#include <string>

namespace ramify {

// Error taxonomy shared by the library and the CLI.  The CLI maps
// validation errors to exit code 2, precision errors to 3, usage to 64.
enum class Errc {
  NotPrime,
  ReducibleModulus,
  ZeroOmega,
  BadSpec,
  MixedFields,
  NonUnitInverse,
  NotEisenstein,
  NotSeparable,
  NotTwoIndex,
  ThreeIndexInput,
  NotUniformizer,
  NotEisensteinResult,
  HypothesisFailed,
  PostconditionFailed,
  ExcludedCase,
  CapExceeded,
  InsufficientPrecision,
  PrecisionExhausted,
  Usage,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::ZeroOmega: return "ZeroOmega";
    case Errc::BadSpec: return "BadSpec";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NonUnitInverse: return "NonUnitInverse";
    case Errc::NotEisenstein: return "NotEisenstein";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::NotTwoIndex: return "NotTwoIndex";
    case Errc::ThreeIndexInput: return "ThreeIndexInput";
    case Errc::NotUniformizer: return "NotUniformizer";
    case Errc::NotEisensteinResult: return "NotEisensteinResult";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::PostconditionFailed: return "PostconditionFailed";
    case Errc::ExcludedCase: return "ExcludedCase";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

inline bool is_precision_error(Errc c) {
  return c == Errc::InsufficientPrecision || c == Errc::PrecisionExhausted;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ramify
