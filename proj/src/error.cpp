#include "lapn/error.hpp"

namespace lapn {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::ZeroDelta: return "ZeroDelta";
    case ErrorCode::UnsupportedU: return "UnsupportedU";
    case ErrorCode::WrongResidue: return "WrongResidue";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::ZeroLeading: return "ZeroLeading";
    case ErrorCode::NotOdd: return "NotOdd";
    case ErrorCode::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::BadRange: return "BadRange";
    }
    return "Unknown";
}

} // namespace lapn
