#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lapn {

enum class ErrorCode {
    NonPrime,
    EvenCharacteristic,
    BadDegree,
    Overflow,
    DivisionByZero,
    BadExponent,
    ZeroDelta,
    UnsupportedU,
    WrongResidue,
    WrongField,
    ZeroLeading,
    NotOdd,
    HypothesisUnverified,
    NotApplicable,
    BadRange,
};

std::string_view to_string(ErrorCode code);

// Every precondition failure in the toolkit surfaces as this type; the code
// lets callers (and the CLI) branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace lapn
