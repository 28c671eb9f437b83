#ifndef WGI_ERRORS_HPP
#define WGI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wgi {

// Error taxonomy shared across the library.  Checks that are expected to
// fail on mathematically degenerate input report through result objects
// instead; exceptions mark contract violations.
enum class Errc {
  InvalidMatrix,
  InfiniteOrTooLarge,
  NotACosetRep,
  BadReference,
  PosMismatch,
  NoUniqueMax,
  FactorizationHypothesisViolated,
  PhiUndefined,
  MissingRTableEntry,
  NotScalarMultiple,
  SolverIncomplete,
  Inconsistent,
  UnknownClaim,
  BadParams,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::InvalidMatrix: return "InvalidMatrix";
    case Errc::InfiniteOrTooLarge: return "InfiniteOrTooLarge";
    case Errc::NotACosetRep: return "NotACosetRep";
    case Errc::BadReference: return "BadReference";
    case Errc::PosMismatch: return "PosMismatch";
    case Errc::NoUniqueMax: return "NoUniqueMax";
    case Errc::FactorizationHypothesisViolated:
      return "FactorizationHypothesisViolated";
    case Errc::PhiUndefined: return "PhiUndefined";
    case Errc::MissingRTableEntry: return "MissingRTableEntry";
    case Errc::NotScalarMultiple: return "NotScalarMultiple";
    case Errc::SolverIncomplete: return "SolverIncomplete";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::UnknownClaim: return "UnknownClaim";
    case Errc::BadParams: return "BadParams";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

} // namespace wgi

#endif
