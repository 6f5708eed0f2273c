#ifndef LIEC_ERROR_HPP
#define LIEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace liec {

enum class ErrorCode {
  MalformedLine,
  LoopEdge,
  DuplicateEdge,
  UnknownVertex,
  DisconnectedInput,
  NotATree,
  NotACactus,
  NotCactusVdc,
  FewerThanTwoCycles,
  PartialColoring,
  OverlappingEdges,
  TooLarge,
  BudgetExceeded,
  PreconditionViolated,
  NotColorable,
  InTPrime,
  NotUnicyclic,
  WrongClass,
  NotASpidey,
  NotAShortLeg,
  InvalidSpec,
  InternalInvariant,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotACactus: return "NotACactus";
    case ErrorCode::NotCactusVdc: return "NotCactusVdc";
    case ErrorCode::FewerThanTwoCycles: return "FewerThanTwoCycles";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::OverlappingEdges: return "OverlappingEdges";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotColorable: return "NotColorable";
    case ErrorCode::InTPrime: return "InTPrime";
    case ErrorCode::NotUnicyclic: return "NotUnicyclic";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::NotASpidey: return "NotASpidey";
    case ErrorCode::NotAShortLeg: return "NotAShortLeg";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI) can branch on the kind of failure without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace liec

#endif  // LIEC_ERROR_HPP
