#pragma once

#include <stdexcept>
#include <string>

namespace hmdisk {

enum class ErrorCode {
    DomainError,
    OutsideDisk,
    PointOnContinuum,
    OnSlit,
    InvalidStart,
    InvalidPerturbation,
    QuadratureFailure,
    EstimatorFailure,
    ParseError,
};

constexpr const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::OutsideDisk: return "OutsideDisk";
        case ErrorCode::PointOnContinuum: return "PointOnContinuum";
        case ErrorCode::OnSlit: return "OnSlit";
        case ErrorCode::InvalidStart: return "InvalidStart";
        case ErrorCode::InvalidPerturbation: return "InvalidPerturbation";
        case ErrorCode::QuadratureFailure: return "QuadratureFailure";
        case ErrorCode::EstimatorFailure: return "EstimatorFailure";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hmdisk
