#pragma once

#include <stdexcept>
#include <string>

namespace liftcalc {

enum class ErrorCode {
    Domain,          // value outside the mathematical domain of an operation
    OutOfScope,      // well-defined but deliberately not computed here
    Unsupported,     // e.g. residue characteristic 2
    IncompleteInput, // required data absent from the request
    Inconsistent,    // input data contradicts itself
    Schema,          // malformed request document
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace liftcalc
