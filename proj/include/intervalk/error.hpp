#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intervalk {

enum class ErrorCode {
    DuplicateElement,
    UnknownElement,
    CycleInRelation,
    NotCoverRelation,
    InvalidSize,
    SizeTooLarge,
    InvalidK,
    InvalidBounds,
    InvalidScale,
    ElementMismatch,
    InfeasiblePotential,
    NonMinimalCycle,
    Parse,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` distinguishes user errors
// (bad input) from contract violations (InfeasiblePotential, NonMinimalCycle).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace intervalk
