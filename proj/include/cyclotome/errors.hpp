#ifndef CYCLOTOME_ERRORS_HPP
#define CYCLOTOME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclotome {

enum class Errc {
  NotCoprime,
  NotSquarefree,
  NoSolution,
  PCongruenceFails,
  SizeExceeded,
  NotPrimitive,
  OutOfRange,
  SetupMismatch,
  SizeInvariantViolation,
  ConditionViolation,
  NonIntegral,
  Mismatch,
  NotSymmetric,
  NotTwoValued,
  NotSrg,
  SkewSplitFails,
  DifferenceCensusFails,
  SpectrumMismatch,
  SymmetryFails,
  NotPartition,
  AxiomFails,
  PartitionViolation,
  TooLargeForFormat,
  Usage,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NoSolution: return "NoSolution";
    case Errc::PCongruenceFails: return "PCongruenceFails";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SetupMismatch: return "SetupMismatch";
    case Errc::SizeInvariantViolation: return "SizeInvariantViolation";
    case Errc::ConditionViolation: return "ConditionViolation";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::Mismatch: return "Mismatch";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotTwoValued: return "NotTwoValued";
    case Errc::NotSrg: return "NotSrg";
    case Errc::SkewSplitFails: return "SkewSplitFails";
    case Errc::DifferenceCensusFails: return "DifferenceCensusFails";
    case Errc::SpectrumMismatch: return "SpectrumMismatch";
    case Errc::SymmetryFails: return "SymmetryFails";
    case Errc::NotPartition: return "NotPartition";
    case Errc::AxiomFails: return "AxiomFails";
    case Errc::PartitionViolation: return "PartitionViolation";
    case Errc::TooLargeForFormat: return "TooLargeForFormat";
    case Errc::Usage: return "Usage";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace cyclotome

#endif
