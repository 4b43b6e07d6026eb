/*
 * errors.hpp
 * Error taxonomy for the whole library. Every domain failure is a
 * SpringerError carrying a stable machine-readable code; the CLI maps
 * codes to exit status 2 and malformed input to exit status 1.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace springer {

enum class ErrorCode {
    MalformedSpec,
    NotSimplyConnected,
    NonCartan,
    DimensionMismatch,
    NotInvertible,
    NotRegularSemisimple,
    InconclusiveTruncation,
    RankTooLarge,
    NotIntegral,
    DetClassMismatch,
    NoIntegralDominator,
    AbelianizationMismatch,
    WeylGroupTooLarge,
    EmptyFiber,
    NotZeroTwisted,
    CriteriaDisagree,
    SuiteFailed,
    Internal,
};

const char* error_code_name(ErrorCode c);

class SpringerError : public std::runtime_error {
  public:
    SpringerError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

  private:
    ErrorCode code_;
};

// True for errors that indicate unparseable/ill-formed input (CLI exit 1)
// rather than a well-formed request hitting a domain condition (exit 2).
bool is_input_error(ErrorCode c);

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace springer
