#pragma once

#include <stdexcept>
#include <string>

namespace radon {

// Machine-readable failure codes.  Every exception thrown by the library is a
// radon::Error carrying one of these; the CLI serializes the code verbatim.
enum class Errc {
  InvalidCartan,
  IndexOutOfRange,
  NotARoot,
  RankMismatch,
  GroupTooLarge,
  AlphaInI,
  ConditionStarViolated,
  FactorizationNotFound,
  InvalidChain,
  NotInSubspace,
  MuNotCharacter,
  UnknownSuite,
  ParseError,
  ArithmeticOverflow,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidCartan: return "InvalidCartan";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotARoot: return "NotARoot";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::AlphaInI: return "AlphaInI";
    case Errc::ConditionStarViolated: return "ConditionStarViolated";
    case Errc::FactorizationNotFound: return "FactorizationNotFound";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::NotInSubspace: return "NotInSubspace";
    case Errc::MuNotCharacter: return "MuNotCharacter";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ParseError: return "ParseError";
    case Errc::ArithmeticOverflow: return "ArithmeticOverflow";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace radon
