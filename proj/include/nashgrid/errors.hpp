#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nashgrid {

// Failure categories surfaced by the library. The CLI maps these onto exit
// codes, tests match on them instead of message text.
enum class ErrorCode {
    IndexOutOfRange,
    SelfLoop,
    NotConnected,
    ModelNotPotential,
    NegativeMultiplier,
    NonPositiveDelta,
    NotSquare,
    NotInner,
    SingularSystem,
    NoStubbornPlayer,
    ConditionViolated,
    ParseError,
    ValidationError,
    IoFailure,
    NonFiniteDerivative,
};

std::string to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

// Scenario validation reports every violation it found, not just the first.
// Each entry is "<field path>: <problem>".
class ScenarioValidationError : public Error {
  public:
    explicit ScenarioValidationError(std::vector<std::string> violations)
        : Error(ErrorCode::ValidationError, join(violations)),
          violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& violations) {
        std::string msg = "scenario validation failed:";
        for (const auto& v : violations) {
            msg += "\n  - " + v;
        }
        return msg;
    }

    std::vector<std::string> violations_;
};

}  // namespace nashgrid
